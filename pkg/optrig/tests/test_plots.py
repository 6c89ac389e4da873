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

import math
import os

from testtools import TestCase

from ..errors import BadRange, EmptyInput, InputFileError
from ..plots import (
    angle_curve,
    circle_points,
    emit_plot_angle,
    emit_plot_circle,
    render_angle,
    render_circle,
    )
from ..pythagorean import enumerate_primitive_triples
from .fixtures import SampleFiles


class TestCirclePlot(TestCase):

    def setUp(self):
        super(TestCirclePlot, self).setUp()
        self.files = self.useFixture(SampleFiles())

    def test_points_lie_on_the_circle(self):
        for px, py, triple in circle_points(enumerate_primitive_triples(100)):
            self.assertAlmostEqual(1.0, px * px + py * py, places=14)
            self.assertEqual(triple.a / triple.c, px)

    def test_render(self):
        text = render_circle(enumerate_primitive_triples(30))
        self.assertTrue(text.startswith('<?xml'))
        self.assertIn('<svg', text)
        self.assertIn('(20, 21, 29)', text)
        self.assertEqual(5, text.count('fill="#cc0000"'))
        self.assertTrue(text.endswith('</svg>\n'))

    def test_deterministic(self):
        found = enumerate_primitive_triples(50)
        first = emit_plot_circle(found, self.files.join('a.svg'))
        second = emit_plot_circle(found, self.files.join('b.svg'))
        self.assertEqual(first, second)
        self.assertEqual(self.files.read('a.svg'), self.files.read('b.svg'))

    def test_empty(self):
        out = self.files.join('empty.svg')
        self.assertRaises(EmptyInput, emit_plot_circle, [], out)
        self.assertFalse(os.path.exists(out))

    def test_unwritable(self):
        out = self.files.join(os.path.join('missing', 'a.svg'))
        self.assertRaises(InputFileError, emit_plot_circle,
                          enumerate_primitive_triples(5), out)


class TestAnglePlot(TestCase):

    def setUp(self):
        super(TestAnglePlot, self).setUp()
        self.files = self.useFixture(SampleFiles())

    def test_curve(self):
        curve = angle_curve(1.0, 100.0, 100)
        self.assertEqual(100, len(curve))
        self.assertEqual((1.0, 0.0), curve[0])
        self.assertEqual(100.0, curve[-1][0])
        phis = [phi for _, phi in curve]
        self.assertEqual(sorted(phis), phis)
        self.assertLess(phis[-1], math.pi / 2)

    def test_large_condition_number(self):
        curve = angle_curve(1.0, 1e6, 2)
        self.assertGreater(math.degrees(curve[-1][1]), 89.0)

    def test_bad_range(self):
        self.assertRaises(BadRange, angle_curve, 0.5, 10.0, 10)
        self.assertRaises(BadRange, angle_curve, 10.0, 10.0, 10)
        self.assertRaises(BadRange, angle_curve, 1.0, float('inf'), 10)
        self.assertRaises(BadRange, angle_curve, 1.0, 10.0, 1)

    def test_render(self):
        curve, text = render_angle(1.0, 10.0, 5)
        self.assertEqual(5, len(curve))
        self.assertIn('<polyline', text)
        self.assertEqual(5, len(text.split('points="')[1].split('"')[0]
                                .split()))

    def test_emit(self):
        out = self.files.join('angle.svg')
        curve = emit_plot_angle(1.0, 50.0, 20, out)
        self.assertEqual(20, len(curve))
        self.assertEqual(render_angle(1.0, 50.0, 20)[1],
                         self.files.read('angle.svg'))

    def test_bad_range_writes_nothing(self):
        out = self.files.join('angle.svg')
        self.assertRaises(BadRange, emit_plot_angle, 5.0, 2.0, 10, out)
        self.assertFalse(os.path.exists(out))
