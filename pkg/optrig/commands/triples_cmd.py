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

"""The ``triples`` command."""

from . import ReportCommand, parse_numbers
from ..export import write_triples_csv
from .. import pythagorean


def triple_summary(params, triple):
    cos_phi, sin_phi = pythagorean.pyth_trig(params)
    return {
        'params': {'m': params.m, 'n': params.n},
        'triple': {'a': triple.a, 'b': triple.b, 'c': triple.c},
        'cos_phi': cos_phi,
        'sin_phi': sin_phi,
    }


class TriplesCommand(ReportCommand):

    name = 'triples'
    usage = ("%prog [options] M N\n"
             "       %prog [options] A B C\n"
             "       %prog [options] --max-c C")
    description = ("Euclid's formula and the operator trigonometry of"
                   " diag(n^2, m^2).  Three arguments name a primitive"
                   " triple (even leg first) to invert.")

    def add_options(self, parser):
        parser.add_option("--max-c", type="int", default=None,
                          help="List every primitive triple with"
                               " hypotenuse at most C.")
        parser.add_option("--csv", metavar="FILE",
                          help="With --max-c, also write the list to FILE.")

    def check_args(self, parser, options, args):
        if options.max_c is not None:
            if args:
                parser.error('--max-c takes no positional arguments')
            self.numbers = []
        elif len(args) == 3:
            self.numbers = parse_numbers(parser, args, ['A', 'B', 'C'], int)
        else:
            self.numbers = parse_numbers(parser, args, ['M', 'N'], int)

    def get_values(self, options, args):
        if options.max_c is not None:
            found = pythagorean.enumerate_primitive_triples(options.max_c)
            if options.csv:
                write_triples_csv(found, options.csv)
            result = {
                'count': len(found),
                'triples': [triple_summary(p, t) for p, t in found],
                'csv': options.csv,
            }
            return {'max_c': options.max_c}, result
        if len(self.numbers) == 3:
            a, b, c = self.numbers
            params = pythagorean.params_from_triple((a, b, c))
            inputs = {'triple': {'a': a, 'b': b, 'c': c}}
        else:
            m, n = self.numbers
            params = pythagorean.validate_params(m, n)
            inputs = {'m': m, 'n': n}
        return inputs, pythagorean.pyth_report(params)
