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

import logging
from optparse import OptionParser
import time

from .. import __version__
from ..errors import EXIT_OK
from ..util import dumps_json

log = logging.getLogger("optrig.commands")


class ReportEnvelope(object):
    """The JSON document every command writes to standard output."""

    def __init__(self, subcommand, inputs, result, warnings=(),
                 tool_version=__version__):
        self.tool_version = tool_version
        self.subcommand = subcommand
        self.inputs = inputs
        self.result = result
        self.warnings = list(warnings)

    def as_dict(self):
        return {
            'tool_version': self.tool_version,
            'subcommand': self.subcommand,
            'inputs': self.inputs,
            'result': self.result,
            'warnings': self.warnings,
        }


class ReportCommand(object):
    """Base class of the optrig-report commands.

    Subclasses add their options in `add_options`, check positional
    arguments in `check_args` and compute ``(inputs, result)`` in
    `get_values`.
    """

    name = None
    usage = "%prog [options]"
    description = None

    def __init__(self, config):
        self.config = config
        self.warnings = []

    def add_options(self, parser):
        pass

    def make_parser(self):
        parser = OptionParser(self.usage,
                              prog='optrig-report %s' % (self.name,),
                              description=self.description)
        self.add_options(parser)
        if self.config is not None:
            self.config.apply_defaults(parser, self.name)
        return parser

    def check_args(self, parser, options, args):
        if args:
            parser.error('unexpected arguments: %s' % ' '.join(args))

    def parse_args(self, argv):
        parser = self.make_parser()
        options, args = parser.parse_args(list(argv))
        self.check_args(parser, options, args)
        return options, args

    def get_values(self, options, args):
        raise NotImplementedError(self.get_values)

    def exit_code(self, result):
        return EXIT_OK

    def warn(self, message):
        log.warning(message)
        self.warnings.append(message)

    def __call__(self, argv, stdout):
        z = time.time()
        options, args = self.parse_args(argv)
        inputs, result = self.get_values(options, args)
        log.info('Getting information for %s: %.3f secs' % (
            self.__class__.__name__, time.time() - z))
        z = time.time()
        envelope = ReportEnvelope(self.name, inputs, result, self.warnings)
        text = dumps_json(envelope)
        stdout.write(text)
        stdout.flush()
        log.info('Rendering %s: %.3f secs, %s bytes' % (
            self.__class__.__name__, time.time() - z,
            len(text.encode('utf-8'))))
        return self.exit_code(result)


def parse_numbers(parser, args, names, kind=float):
    """Convert positional ``args`` or report a usage error naming them."""
    if len(args) != len(names):
        parser.error('expected %d arguments: %s' % (
            len(names), ' '.join(names)))
    values = []
    for name, arg in zip(names, args):
        try:
            values.append(kind(arg))
        except ValueError:
            parser.error('%s: %r is not a valid %s' % (
                name, arg, 'integer' if kind is int else 'number'))
    return values
