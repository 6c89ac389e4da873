#
# Copyright (C) 2026  optrig developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Suite 500, Boston, MA 02110-1335  USA

"""Command line entry point of optrig-report."""

import logging
import os
import sys

from . import __version__
from .commands.finance_cmd import FinanceCommand
from .commands.granular_cmd import GranularCommand, GranularFieldCommand
from .commands.plot_cmd import PlotAngleCommand, PlotCircleCommand
from .commands.triples_cmd import TriplesCommand
from .commands.trig_cmd import TrigCommand
from .config import OptrigConfig
from .errors import (
    EXIT_INPUT,
    EXIT_OK,
    InputFileError,
    InvalidParameter,
    OptrigError,
    )

COMMANDS = dict((command.name, command) for command in [
    TrigCommand,
    GranularCommand,
    GranularFieldCommand,
    FinanceCommand,
    TriplesCommand,
    PlotCircleCommand,
    PlotAngleCommand,
    ])

LOG_FORMAT = '%(asctime)s %(levelname)-8s %(name)s: %(message)s'


def setup_logging(config, log_file=None):
    """Attach a handler to the ``optrig`` logger and return it.

    Records go to ``<log-folder>/optrig-report.log`` when a log folder is
    configured, otherwise to ``log_file`` (standard error by default).
    """
    log_level = config.get_log_level()
    logger = logging.getLogger('optrig')
    if log_level is not None:
        logger.setLevel(log_level)
    else:
        logger.setLevel(logging.WARNING)
    if config.get_option('log_folder'):
        logfile_path = os.path.join(
            config.get_option('log_folder'), 'optrig-report.log')
        try:
            handler = logging.FileHandler(logfile_path, 'a')
        except OSError as e:
            raise InputFileError(path=logfile_path,
                                 reason=e.strerror or str(e))
    else:
        handler = logging.StreamHandler(log_file or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    # We set the handler to accept all messages, the *logger* won't emit them
    # if it is configured to suppress it
    handler.setLevel(logging.DEBUG)
    logger.addHandler(handler)
    logger.propagate = False

    def _restrict_logging(logger_name):
        logger = logging.getLogger(logger_name)
        if logger.getEffectiveLevel() < logging.INFO:
            logger.setLevel(logging.INFO)
    # simpleTAL is *very* verbose in DEBUG mode.
    _restrict_logging('simpleTAL')
    _restrict_logging('simpleTALES')
    return handler


class ErrorHandler(object):
    """Turn optrig errors into a diagnostic and an exit code."""

    msg = " %s.%s: %s "

    def __init__(self, stderr):
        self.stderr = stderr
        self.log = logging.getLogger('optrig')

    def __call__(self, func, *args):
        try:
            return func(*args)
        except OptrigError as e:
            return self.handle_error(e)

    def handle_error(self, exc):
        self.log.info(self.msg, exc.__class__.__module__,
                      exc.__class__.__name__, exc)
        self.log.debug('traceback', exc_info=exc)
        self.stderr.write('optrig-report: error: %s\n' % (exc,))
        self.stderr.flush()
        return exc.exit_code


def run_command(config, stdout, stderr):
    if config.get_option('show_version'):
        stdout.write("optrig-report %s\n" % (__version__,))
        return EXIT_OK
    name = config.command
    if name is None:
        config.print_help(stderr)
        return EXIT_INPUT
    command_class = COMMANDS.get(name)
    if command_class is None:
        raise InvalidParameter(
            name='command', value=name,
            reason='expected one of %s' % ', '.join(sorted(COMMANDS)))
    return command_class(config)(config.command_args, stdout)


def main(args=None, stdout=None, stderr=None):
    """Run optrig-report and return its exit code."""
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    error_handler = ErrorHandler(stderr)
    try:
        config = OptrigConfig(args)
        handler = setup_logging(config, log_file=stderr)
    except OptrigError as e:
        return error_handler.handle_error(e)
    try:
        return error_handler(run_command, config, stdout, stderr)
    finally:
        logging.getLogger('optrig').removeHandler(handler)
        handler.close()
