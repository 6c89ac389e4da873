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

from fractions import Fraction

import numpy as np
from testtools import TestCase

from ..util import convert_to_json_ready, dumps_json, format_float


class Point(object):

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def as_dict(self):
        return {'x': self.x, 'y': self.y}


class TestFormatFloat(TestCase):

    def test_integral_values_keep_a_decimal_point(self):
        self.assertEqual('1.0', format_float(1.0))
        self.assertEqual('-2.0', format_float(-2.0))
        self.assertEqual('0.0', format_float(0.0))

    def test_round_trips(self):
        for value in (0.8, 1 / 3.0, 2 ** 0.5, 1e-300, 12345.678):
            self.assertEqual(value, float(format_float(value)))

    def test_exponent(self):
        self.assertEqual('1e+20', format_float(1e20))

    def test_non_finite(self):
        self.assertEqual('null', format_float(float('nan')))
        self.assertEqual('null', format_float(float('inf')))


class TestConvertToJsonReady(TestCase):

    def test_fraction(self):
        self.assertEqual({'numerator': 4, 'denominator': 5, 'value': 0.8},
                         convert_to_json_ready(Fraction(4, 5)))

    def test_numpy(self):
        self.assertEqual([1.0, 2.0],
                         convert_to_json_ready(np.array([1.0, 2.0])))
        self.assertIs(True, convert_to_json_ready(np.bool_(True)))
        self.assertEqual(3, convert_to_json_ready(np.int64(3)))
        self.assertIsInstance(convert_to_json_ready(np.float64(0.5)), float)

    def test_as_dict(self):
        self.assertEqual({'x': [1, 2], 'y': None},
                         convert_to_json_ready(Point((1, 2), None)))

    def test_unknown(self):
        self.assertRaises(TypeError, convert_to_json_ready, object())


class TestDumpsJson(TestCase):

    def test_layout(self):
        text = dumps_json({'a': 1, 'b': [1.0, 2.5], 'c': {}, 'd': 'x'})
        self.assertEqual(
            '{\n'
            '  "a": 1,\n'
            '  "b": [1.0, 2.5],\n'
            '  "c": {},\n'
            '  "d": "x"\n'
            '}\n', text)

    def test_nested(self):
        text = dumps_json([{'p': Point(0.5, 1)}])
        self.assertEqual(
            '[\n'
            '  {\n'
            '    "p": {\n'
            '      "x": 0.5,\n'
            '      "y": 1\n'
            '    }\n'
            '  }\n'
            ']\n', text)

    def test_nan_is_null(self):
        self.assertEqual('{\n  "r": null\n}\n', dumps_json({'r': float('nan')}))

    def test_key_order_is_kept(self):
        text = dumps_json({'z': 1, 'a': 2})
        self.assertLess(text.index('"z"'), text.index('"a"'))
