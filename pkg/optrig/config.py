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
"""Configuration tools for optrig-report.

Options come from the command line and, for anything left unset there,
from the INI file named by ``--config``.  Section ``[optrig]`` of that
file holds global options, a section named after a command holds that
command's options.
"""

import logging
from optparse import OptionParser, OptionValueError
import sys

from configobj import ConfigObj, ConfigObjError

from .errors import InputFileError, InvalidParameter

GLOBAL_SECTION = 'optrig'


def command_line_parser():
    parser = OptionParser(
        "%prog [options] <command> [command options] [args]\n\n"
        "commands: trig, granular, granular-field, finance, triples,"
        " plot-circle, plot-angle",
        prog="optrig-report")
    parser.disable_interspersed_args()
    parser.set_defaults(
        show_version=False,
        log_folder=None,
        config_file=None,
        )
    parser.add_option("--log-level", default=None, action='callback',
                      callback=_optparse_level_to_int_level,
                      type="string",
                      help="Logging threshold, a level name (debug,"
                           " info, warning, error, critical) or a number.")
    parser.add_option("--log-folder",
                      help="Write optrig-report.log in this directory"
                           " instead of logging to standard error.")
    parser.add_option("--config", dest="config_file", metavar="FILE",
                      help="Read option defaults from this INI file.")
    parser.add_option("--version", action="store_true", dest="show_version",
                      help="Print the optrig version and exit.")
    return parser


LOG_LEVEL_NAMES = ('debug', 'info', 'warning', 'error', 'critical')


def _optparse_level_to_int_level(option, opt_str, value, parser):
    try:
        parser.values.log_level = _level_to_int_level(value)
    except KeyError:
        raise OptionValueError('unknown log level: %s' % (value,))


def _level_to_int_level(value):
    """``'info'`` or ``'20'`` as 20; unknown names raise KeyError."""
    if value is None or isinstance(value, int):
        return value
    value = value.strip()
    if value.lstrip('-').isdigit():
        return int(value)
    if value.lower() not in LOG_LEVEL_NAMES:
        raise KeyError(value)
    return getattr(logging, value.upper())


def load_config_file(path):
    try:
        return ConfigObj(path, file_error=True, encoding='utf-8')
    except (IOError, OSError) as e:
        raise InputFileError(path=path, reason=getattr(e, 'strerror', None)
                             or str(e))
    except ConfigObjError as e:
        raise InputFileError(path=path, reason=str(e))


class OptrigConfig(object):
    """Global options of one optrig-report run."""

    def __init__(self, argv=None):
        if argv is None:
            argv = sys.argv[1:]
        self._parser = command_line_parser()
        self._options, self._args = self._parser.parse_args(argv)
        config_file = self._options.config_file
        if config_file is not None:
            self._file_config = load_config_file(config_file)
        else:
            self._file_config = ConfigObj()

    def get_option(self, option):
        """Get the value for the config option, either from the
        ``[optrig]`` section of the config file or from the command line.
        """
        file_config = self.section(GLOBAL_SECTION).get(option)
        cmd_config = getattr(self._options, option, None)
        if file_config is not None and (
            cmd_config is None or cmd_config is False):
            return file_config
        else:
            return cmd_config

    def get_log_level(self):
        opt = self.get_option('log_level')
        try:
            return _level_to_int_level(opt)
        except KeyError:
            raise InvalidParameter(name='log_level', value=opt,
                                   reason='unknown log level')

    def section(self, name):
        return self._file_config.get(name, {})

    def apply_defaults(self, parser, name):
        """Set defaults of ``parser`` from the config file section ``name``.

        Keys are option destinations (``grad_tol``) or long option names
        (``grad-tol``); values go through the option's own type checks.
        """
        section = self.section(name)
        for option in parser.option_list:
            if option.dest is None or not option.takes_value() and \
                    option.action not in ('store_true', 'store_false'):
                continue
            for key in (option.dest, option.dest.replace('_', '-')):
                if key not in section:
                    continue
                if option.action in ('store_true', 'store_false'):
                    try:
                        value = section.as_bool(key)
                    except ValueError:
                        raise InvalidParameter(
                            name='[%s] %s' % (name, key), value=section[key],
                            reason='expected a boolean')
                else:
                    try:
                        value = option.check_value(
                            option.get_opt_string(), section[key])
                    except OptionValueError as e:
                        raise InvalidParameter(
                            name='[%s] %s' % (name, key), value=section[key],
                            reason=str(e))
                parser.set_default(option.dest, value)
                break

    @property
    def command(self):
        """The command name, or None when none was given."""
        if self._args:
            return self._args[0]
        return None

    @property
    def command_args(self):
        return self._args[1:]

    def print_help(self, file=None):
        """Print the global usage text."""
        return self._parser.print_help(file)
