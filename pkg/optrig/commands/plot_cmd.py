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

"""The ``plot-circle`` and ``plot-angle`` commands."""

import math

from . import ReportCommand
from .. import plots
from ..pythagorean import enumerate_primitive_triples


class PlotCircleCommand(ReportCommand):

    name = 'plot-circle'
    usage = "%prog --max-c C --out FILE.svg"
    description = ("Mark the points (cos phi, sin phi) of the primitive"
                   " triples with hypotenuse at most C on the unit circle.")

    def add_options(self, parser):
        parser.add_option("--max-c", type="int", default=None,
                          help="Largest hypotenuse to plot.")
        parser.add_option("--out", metavar="FILE",
                          help="The SVG file to write.")

    def check_args(self, parser, options, args):
        ReportCommand.check_args(self, parser, options, args)
        if options.max_c is None or options.out is None:
            parser.error('--max-c and --out are required')

    def get_values(self, options, args):
        found = enumerate_primitive_triples(options.max_c)
        text = plots.emit_plot_circle(found, options.out)
        points = [{'triple': [t.a, t.b, t.c], 'point': [px, py]}
                  for px, py, t in plots.circle_points(found)]
        result = {'out': options.out, 'bytes': len(text.encode('utf-8')),
                  'points': points}
        return {'max_c': options.max_c}, result


class PlotAngleCommand(ReportCommand):

    name = 'plot-angle'
    usage = "%prog [--lmin L] [--lmax L] [--steps N] --out FILE.svg"
    description = ("Plot the turning angle of diag(1, kappa) against the"
                   " condition number kappa.")

    def add_options(self, parser):
        parser.add_option("--lmin", type="float", default=1.0,
                          help="Smallest condition number (default 1).")
        parser.add_option("--lmax", type="float", default=100.0,
                          help="Largest condition number (default 100).")
        parser.add_option("--steps", type="int", default=200,
                          help="Number of samples (default 200).")
        parser.add_option("--out", metavar="FILE",
                          help="The SVG file to write.")

    def check_args(self, parser, options, args):
        ReportCommand.check_args(self, parser, options, args)
        if options.out is None:
            parser.error('--out is required')

    def get_values(self, options, args):
        curve = plots.emit_plot_angle(options.lmin, options.lmax,
                                      options.steps, options.out)
        result = {
            'out': options.out,
            'curve': [{'kappa': kappa,
                       'phi': {'radians': phi, 'degrees': math.degrees(phi)}}
                      for kappa, phi in curve],
        }
        inputs = {'lmin': options.lmin, 'lmax': options.lmax,
                  'steps': options.steps}
        return inputs, result
