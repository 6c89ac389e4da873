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

from optparse import OptionParser

from testtools import TestCase

from ..config import OptrigConfig, _level_to_int_level
from ..errors import InputFileError, InvalidParameter
from .fixtures import SampleFiles


class TestLevels(TestCase):

    def test_names_and_numbers(self):
        self.assertEqual(10, _level_to_int_level('debug'))
        self.assertEqual(30, _level_to_int_level('WARNING'))
        self.assertEqual(15, _level_to_int_level('15'))
        self.assertEqual(None, _level_to_int_level(None))
        self.assertRaises(KeyError, _level_to_int_level, 'chatty')


class TestCommandLine(TestCase):

    def test_command_and_arguments(self):
        config = OptrigConfig(['--log-level', 'info', 'trig', '--seed', '3',
                               'a.txt'])
        self.assertEqual('trig', config.command)
        self.assertEqual(['--seed', '3', 'a.txt'], config.command_args)
        self.assertEqual(20, config.get_log_level())

    def test_no_command(self):
        config = OptrigConfig([])
        self.assertEqual(None, config.command)
        self.assertEqual([], config.command_args)
        self.assertEqual(None, config.get_log_level())
        self.assertFalse(config.get_option('show_version'))

    def test_bad_log_level(self):
        self.assertRaises(SystemExit, OptrigConfig,
                          ['--log-level', 'chatty', 'trig'])


class TestConfigFile(TestCase):

    def setUp(self):
        super(TestConfigFile, self).setUp()
        self.files = self.useFixture(SampleFiles())

    def make_config(self, text, *args):
        path = self.files.write('optrig.conf', text)
        return OptrigConfig(['--config', path] + list(args))

    def make_parser(self):
        parser = OptionParser()
        parser.add_option('--grad-tol', type='float', default=1e-10)
        parser.add_option('--restarts', type='int', default=8)
        parser.add_option('--norm-method', choices=['power', 'eigh'],
                          default='power')
        parser.add_option('--csv', action='store_true', default=False)
        return parser

    def test_global_section(self):
        config = self.make_config("[optrig]\nlog_level = debug\n")
        self.assertEqual(10, config.get_log_level())

    def test_command_line_wins(self):
        config = self.make_config("[optrig]\nlog_level = debug\n",
                                  '--log-level', 'error')
        self.assertEqual(40, config.get_log_level())

    def test_unknown_level_in_file(self):
        config = self.make_config("[optrig]\nlog_level = chatty\n")
        self.assertRaises(InvalidParameter, config.get_log_level)

    def test_command_defaults(self):
        config = self.make_config(
            "[trig]\ngrad-tol = 1e-8\nrestarts = 3\nnorm_method = eigh\n"
            "csv = yes\n")
        parser = self.make_parser()
        config.apply_defaults(parser, 'trig')
        options, args = parser.parse_args([])
        self.assertEqual(1e-8, options.grad_tol)
        self.assertEqual(3, options.restarts)
        self.assertEqual('eigh', options.norm_method)
        self.assertIs(True, options.csv)

    def test_command_line_overrides_file_defaults(self):
        config = self.make_config("[trig]\nrestarts = 3\n")
        parser = self.make_parser()
        config.apply_defaults(parser, 'trig')
        options, args = parser.parse_args(['--restarts', '5'])
        self.assertEqual(5, options.restarts)

    def test_other_sections_are_ignored(self):
        config = self.make_config("[finance]\nrestarts = 3\n")
        parser = self.make_parser()
        config.apply_defaults(parser, 'trig')
        options, args = parser.parse_args([])
        self.assertEqual(8, options.restarts)

    def test_bad_values(self):
        parser = self.make_parser()
        config = self.make_config("[trig]\nrestarts = many\n")
        self.assertRaises(InvalidParameter, config.apply_defaults, parser,
                          'trig')
        config = self.make_config("[trig]\nnorm-method = lanczos\n")
        self.assertRaises(InvalidParameter, config.apply_defaults, parser,
                          'trig')
        config = self.make_config("[trig]\ncsv = perhaps\n")
        self.assertRaises(InvalidParameter, config.apply_defaults, parser,
                          'trig')

    def test_missing_file(self):
        self.assertRaises(InputFileError, OptrigConfig,
                          ['--config', self.files.join('missing.conf')])

    def test_malformed_file(self):
        path = self.files.write('broken.conf', "[optrig\nlog_level = 1\n")
        self.assertRaises(InputFileError, OptrigConfig, ['--config', path])
