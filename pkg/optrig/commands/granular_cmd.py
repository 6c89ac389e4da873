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

"""The ``granular`` and ``granular-field`` commands."""

import math

from . import ReportCommand, parse_numbers
from ..export import write_field_csv
from .. import granular
from .. import trig


class GranularCommand(ReportCommand):

    name = 'granular'
    usage = "%prog [options] SIGMA_XX SIGMA_XZ SIGMA_ZZ"
    description = ("Angle of repose and turning angle of a 2x2 stress"
                   " tensor.")

    def add_options(self, parser):
        parser.add_option("--norm-method", type="choice",
                          choices=list(trig.NORM_METHODS), default='power',
                          help="Spectral norm used by the convex search.")

    def check_args(self, parser, options, args):
        self.components = parse_numbers(
            parser, args, ['SIGMA_XX', 'SIGMA_XZ', 'SIGMA_ZZ'])

    def get_values(self, options, args):
        tensor = granular.stress_tensor(*self.components)
        report = granular.repose_report(tensor,
                                        norm_method=options.norm_method)
        return {'tensor': tensor}, report


class GranularFieldCommand(ReportCommand):

    name = 'granular-field'
    description = ("Build the linear-in-depth stress field of a slope and"
                   " check the equilibrium equations on it.")

    def add_options(self, parser):
        parser.add_option("--theta", type="float", default=30.0,
                          help="Slope angle in degrees (default 30).")
        parser.add_option("--rho", type="float", default=1600.0,
                          help="Bulk density (default 1600).")
        parser.add_option("--g", type="float", default=9.81,
                          help="Gravitational acceleration (default 9.81).")
        parser.add_option("--K", type="float", default=1.0, dest="K",
                          help="Lateral stress ratio sigma_xx/sigma_zz"
                               " (default 1).")
        parser.add_option("--depth", type="float", default=1.0,
                          help="Depth of the grid (default 1).")
        parser.add_option("--width", type="float", default=None,
                          help="Extent along the slope (default: depth).")
        parser.add_option("--nx", type="int", default=50,
                          help="Nodes along the slope (default 50).")
        parser.add_option("--nz", type="int", default=50,
                          help="Nodes in depth (default 50).")
        parser.add_option("--csv", metavar="FILE",
                          help="Also write every node to FILE.")

    def get_values(self, options, args):
        theta = math.radians(options.theta)
        field = granular.linear_depth_field(
            theta, options.rho, options.g, K=options.K, depth=options.depth,
            nx=options.nx, nz=options.nz, width=options.width)
        residual = granular.equilibrium_residual(field)
        load = options.rho * options.g
        deepest = granular.repose_report(field.tensor(field.nx // 2,
                                                      field.nz - 1))
        if options.csv:
            write_field_csv(field, residual, options.csv)
        inputs = {
            'theta': {'radians': theta, 'degrees': options.theta},
            'rho': options.rho,
            'g': options.g,
            'K': options.K,
            'depth': options.depth,
            'width': field.dx * (field.nx - 1),
            'nx': options.nx,
            'nz': options.nz,
        }
        result = {
            'grid': {'nx': field.nx, 'nz': field.nz,
                     'dx': field.dx, 'dz': field.dz},
            'residual': {
                'max_norm': residual.max_norm,
                'rms': residual.rms,
                'max_norm_over_rho_g': residual.max_norm / load,
            },
            'deepest_node': deepest,
            'csv': options.csv,
        }
        return inputs, result
