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

"""The ``finance`` command: Sharpe ratios of a return series."""

from . import ReportCommand
from ..errors import NonPositiveReturn, ZeroVolatility
from ..matrixfile import read_text
from .. import sharpe


class FinanceCommand(ReportCommand):

    name = 'finance'
    usage = "%prog [options] RETURNS"
    description = ("Sharpe ratio of a return series, the arithmetic and"
                   " geometric Sharpe ratios of its last two returns and"
                   " the GM/AM ratio of every consecutive pair.")

    def add_options(self, parser):
        parser.add_option("--rf", type="float", default=0.0,
                          help="Risk-free rate subtracted from every return"
                               " (default 0).")
        parser.add_option("--sigma", type="choice",
                          choices=list(sharpe.SIGMA_CONVENTIONS),
                          default=None,
                          help="Standard deviation convention: sample or"
                               " population (default: sample for the"
                               " series, population for the two-period"
                               " report).")
        parser.add_option("--format", type="choice",
                          choices=list(sharpe.FORMATS), default='auto',
                          help="plain, csv or auto (default).")

    def check_args(self, parser, options, args):
        if len(args) != 1:
            parser.error('expected one RETURNS file')

    def get_values(self, options, args):
        path = args[0]
        series = sharpe.ingest_returns(read_text(path).splitlines(True),
                                       format=options.format)
        series_sigma = options.sigma or sharpe.SAMPLE
        pair_sigma = options.sigma or sharpe.POPULATION
        rf = options.rf
        result = {
            'count': len(series),
            'mean': series.mean(),
            'sharpe': sharpe.sharpe(series, rf, series_sigma),
            'sigma_convention': series_sigma,
        }
        try:
            result['geometric_sharpe'] = sharpe.geometric_sharpe(
                series, rf, series_sigma)
            result['gm_am'] = sharpe.gm_am_series(series, rf)
        except NonPositiveReturn as e:
            result['geometric_sharpe'] = result['gm_am'] = None
            self.warn('geometric mean undefined: %s' % (e,))
        r1, r2 = series.returns[-2:]
        try:
            result['two_period'] = sharpe.two_period_report(
                float(r1), float(r2), rf, pair_sigma)
        except (NonPositiveReturn, ZeroVolatility) as e:
            result['two_period'] = None
            self.warn('two-period report of the last two returns: %s' % (e,))
        result['rolling'] = sharpe.rolling_gm_am(series, rf)
        inputs = {'returns_file': path, 'rf': rf, 'format': options.format,
                  'series': series}
        return inputs, result
