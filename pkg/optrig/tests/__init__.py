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


def test_suite():
    import unittest
    loader = unittest.TestLoader()
    return loader.loadTestsFromNames([
        (__name__ + '.' + x) for x in [
            'test_batch',
            'test_cli',
            'test_config',
            'test_errors',
            'test_granular',
            'test_matrixfile',
            'test_plots',
            'test_pythagorean',
            'test_search',
            'test_sharpe',
            'test_spectral',
            'test_templating',
            'test_trig',
            'test_util',
        ]])
