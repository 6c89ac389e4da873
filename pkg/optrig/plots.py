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

"""Static SVG plots.

Coordinates are written with a fixed number of decimals so that the same
input always gives the same bytes.
"""

import logging
import math

from .errors import BadRange, EmptyInput, InputFileError
from .trig import turning_angle_for_condition
from .zptsupport import svg_template

log = logging.getLogger("optrig.plots")

CIRCLE_SIZE = 480
CIRCLE_MARGIN = 60

ANGLE_WIDTH = 640
ANGLE_HEIGHT = 400
ANGLE_MARGIN = 50


def _fmt(value):
    return '%.3f' % value


def _write_svg(path, text):
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise InputFileError(path=path, reason=e.strerror or str(e))
    log.info('wrote %s (%d bytes)', path, len(text.encode('utf-8')))


def circle_points(triples):
    """The unit circle points ``(a/c, b/c)`` of ``(params, triple)`` pairs."""
    return [(triple.a / triple.c, triple.b / triple.c, triple)
            for _, triple in triples]


def render_circle(triples):
    if not triples:
        raise EmptyInput(action='plot')
    radius = (CIRCLE_SIZE - 2 * CIRCLE_MARGIN) / 2.0
    centre = CIRCLE_SIZE / 2.0
    points = []
    for px, py, triple in circle_points(triples):
        x = centre + radius * px
        y = centre - radius * py
        points.append({
            'x': _fmt(x),
            'y': _fmt(y),
            'label_x': _fmt(x + 4),
            'label_y': _fmt(y - 4),
            'label': '(%d, %d, %d)' % triple,
        })
    frame = {
        'size': str(CIRCLE_SIZE),
        'viewbox': '0 0 %d %d' % (CIRCLE_SIZE, CIRCLE_SIZE),
        'title': 'Pythagorean points on the unit circle',
        'centre': _fmt(centre),
        'radius': _fmt(radius),
        'axis_start': _fmt(CIRCLE_MARGIN / 2.0),
        'axis_end': _fmt(CIRCLE_SIZE - CIRCLE_MARGIN / 2.0),
    }
    template = svg_template('unit_circle')
    return template.render(frame=frame, points=points)


def emit_plot_circle(triples, out_path):
    """Mark the point ``(cos phi, sin phi)`` of every triple on the unit
    circle.  Nothing is written for an empty list."""
    text = render_circle(triples)
    _write_svg(out_path, text)
    return text


def angle_curve(lambda_min, lambda_max, steps):
    """``(kappa, phi)`` samples of the turning angle of ``diag(1, kappa)``."""
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        raise BadRange(reason='need at least 2 steps, got %r' % (steps,))
    if not (1 <= lambda_min < lambda_max) or math.isinf(lambda_max):
        raise BadRange(reason='need 1 <= lambda_min < lambda_max, got %r'
                              ' and %r' % (lambda_min, lambda_max))
    width = lambda_max - lambda_min
    curve = []
    for i in range(steps):
        kappa = lambda_min + width * i / (steps - 1)
        curve.append((kappa, turning_angle_for_condition(kappa)))
    return curve


def render_angle(lambda_min, lambda_max, steps):
    curve = angle_curve(lambda_min, lambda_max, steps)
    left = ANGLE_MARGIN
    right = ANGLE_WIDTH - ANGLE_MARGIN / 2.0
    top = ANGLE_MARGIN / 2.0
    bottom = ANGLE_HEIGHT - ANGLE_MARGIN

    def x_of(kappa):
        return left + (right - left) * (kappa - lambda_min) / (
            lambda_max - lambda_min)

    def y_of(phi):
        return bottom - (bottom - top) * phi / (math.pi / 2)

    polyline = ' '.join('%s,%s' % (_fmt(x_of(kappa)), _fmt(y_of(phi)))
                        for kappa, phi in curve)
    ticks = []
    for degrees in (0, 30, 60, 90):
        ticks.append({'x': _fmt(left - 6),
                      'y': _fmt(y_of(math.radians(degrees)) + 3),
                      'anchor': 'end',
                      'label': '%d' % degrees})
    for kappa in (lambda_min, lambda_max):
        ticks.append({'x': _fmt(x_of(kappa)),
                      'y': _fmt(bottom + 16),
                      'anchor': 'middle',
                      'label': '%.6g' % kappa})
    frame = {
        'width': str(ANGLE_WIDTH),
        'height': str(ANGLE_HEIGHT),
        'viewbox': '0 0 %d %d' % (ANGLE_WIDTH, ANGLE_HEIGHT),
        'title': 'Turning angle (degrees) against condition number',
        'left': _fmt(left),
        'right': _fmt(right),
        'top': _fmt(top),
        'bottom': _fmt(bottom),
    }
    template = svg_template('angle_curve')
    return curve, template.render(frame=frame, ticks=ticks, curve=polyline)


def emit_plot_angle(lambda_min, lambda_max, steps, out_path):
    """Plot the turning angle of ``diag(1, kappa)`` for kappa from
    ``lambda_min`` to ``lambda_max``.  Returns the sampled curve."""
    curve, text = render_angle(lambda_min, lambda_max, steps)
    _write_svg(out_path, text)
    return curve
