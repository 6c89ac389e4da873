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

import io
import math

import numpy as np
from testtools import TestCase

from ..errors import (
    EmptySeries,
    InvalidParameter,
    NonPositiveReturn,
    ParseError,
    SeriesTooShort,
    ZeroVolatility,
    )
from ..sharpe import (
    POPULATION,
    SAMPLE,
    ReturnSeries,
    deviation,
    geometric_sharpe,
    gm_am_ratio,
    gm_am_series,
    ingest_returns,
    rolling_gm_am,
    sharpe,
    two_period_report,
    )
from ..spectral import validate_spd
from ..trig import mu1_closed


def ingest(text, format='auto'):
    return ingest_returns(io.StringIO(text), format)


class TestIngestReturns(TestCase):

    def test_plain(self):
        series = ingest("0.10\n0.05\n")
        self.assertEqual([0.10, 0.05], series.returns.tolist())
        self.assertEqual(['1', '2'], series.labels)

    def test_labelled(self):
        series = ingest("2023,0.18\n2024,0.02\n")
        self.assertEqual(['2023', '2024'], series.labels)
        self.assertEqual([0.18, 0.02], series.returns.tolist())

    def test_header_row(self):
        series = ingest("year,return\n2023,0.18\n2024,0.02\n", 'csv')
        self.assertEqual(['2023', '2024'], series.labels)

    def test_first_row_with_a_numeric_label_is_data(self):
        for format in ('auto', 'csv'):
            e = self.assertRaises(ParseError, ingest,
                                  "2023,abc\n2024,0.02\n", format)
            self.assertEqual(1, e.row)

    def test_comments_and_blank_lines(self):
        series = ingest("# annual returns\n\n0.1\n  \n0.2\n")
        self.assertEqual([0.1, 0.2], series.returns.tolist())

    def test_parse_error_names_the_line(self):
        e = self.assertRaises(ParseError, ingest, "abc\n")
        self.assertEqual(1, e.row)
        e = self.assertRaises(ParseError, ingest, "# c\n\n0.1\nxyz\n")
        self.assertEqual(4, e.row)

    def test_wrong_field_count(self):
        e = self.assertRaises(ParseError, ingest, "a,0.1\nb,0.2,3\n")
        self.assertEqual(2, e.row)

    def test_non_finite(self):
        self.assertRaises(ParseError, ingest, "0.1\nnan\n")

    def test_empty(self):
        self.assertRaises(EmptySeries, ingest, "")
        self.assertRaises(EmptySeries, ingest, "# nothing\n\n")
        self.assertRaises(EmptySeries, ingest, "label,return\n", 'csv')

    def test_plain_rejects_labels(self):
        self.assertRaises(ParseError, ingest, "2023,0.18\n", 'plain')

    def test_unknown_format(self):
        self.assertRaises(InvalidParameter, ingest, "0.1\n", 'xlsx')


class TestSharpe(TestCase):

    def test_two_returns(self):
        series = ReturnSeries.from_returns([0.18, 0.02])
        self.assertAlmostEqual(0.1 / (0.16 / math.sqrt(2)), sharpe(series),
                               places=12)
        self.assertAlmostEqual(0.8839, sharpe(series), places=4)
        self.assertAlmostEqual(1.25, sharpe(series,
                                            sigma_convention=POPULATION),
                               places=12)

    def test_zero_volatility(self):
        self.assertRaises(ZeroVolatility, sharpe,
                          ReturnSeries.from_returns([0.1, 0.1, 0.1]))

    def test_constant_series_has_no_volatility(self):
        for value in (0.1, 0.07, 0.0, -0.3):
            series = ReturnSeries.from_returns([value] * 7)
            for convention in (SAMPLE, POPULATION):
                self.assertRaises(ZeroVolatility, sharpe, series,
                                  sigma_convention=convention)
        self.assertRaises(ZeroVolatility, geometric_sharpe,
                          ReturnSeries.from_returns([0.1, 0.1, 0.1]))

    def test_too_short(self):
        self.assertRaises(SeriesTooShort, sharpe,
                          ReturnSeries.from_returns([0.1]))

    def test_risk_free_at_the_mean(self):
        series = ReturnSeries.from_returns([0.03, 0.11, 0.07, -0.02])
        self.assertEqual(0.0, sharpe(series, rf=series.mean()))

    def test_deviation(self):
        self.assertAlmostEqual(0.08, deviation([0.18, 0.02], POPULATION),
                               places=15)
        self.assertAlmostEqual(0.08 * math.sqrt(2),
                               deviation([0.18, 0.02], SAMPLE), places=15)
        self.assertRaises(InvalidParameter, deviation, [0.1, 0.2], 'median')

    def test_series_rejects_mismatched_labels(self):
        self.assertRaises(InvalidParameter, ReturnSeries, ['a'], [0.1, 0.2])


class TestGmAmRatio(TestCase):

    def test_examples(self):
        self.assertAlmostEqual(1.0, gm_am_ratio(0.07, 0.07), places=15)
        self.assertAlmostEqual(0.6, gm_am_ratio(0.18, 0.02), places=14)
        self.assertAlmostEqual(0.8, gm_am_ratio(0.04, 0.01), places=14)

    def test_non_positive(self):
        self.assertRaises(NonPositiveReturn, gm_am_ratio, 0.0, 0.1)
        self.assertRaises(NonPositiveReturn, gm_am_ratio, 0.1, -0.05)

    def test_is_the_first_antieigenvalue(self):
        grid = np.linspace(0.005, 0.5, 100)
        for r1 in grid:
            for r2 in grid:
                g = gm_am_ratio(r1, r2)
                self.assertGreater(g, 0.0)
                self.assertLessEqual(g, 1.0)
                self.assertEqual(g, gm_am_ratio(r2, r1))
                mu1 = mu1_closed(validate_spd(np.diag([r1, r2])))
                self.assertLess(abs(g - mu1), 1e-12)
                if r1 != r2:
                    self.assertLess(g, 1.0)


class TestTwoPeriodReport(TestCase):

    def test_population(self):
        report = two_period_report(0.18, 0.02)
        self.assertEqual(POPULATION, report.sigma_convention)
        self.assertAlmostEqual(0.08, report.sigma, places=15)
        self.assertAlmostEqual(1.25, report.s_am, places=12)
        self.assertAlmostEqual(0.75, report.s_gm, places=12)
        self.assertAlmostEqual(0.6, report.g_ratio, places=14)
        self.assertAlmostEqual(0.6, report.mu1_crosscheck, places=12)
        self.assertAlmostEqual(report.s_gm / report.s_am, report.g_ratio,
                               places=14)

    def test_sample_rescales_but_keeps_the_ratio(self):
        population = two_period_report(0.18, 0.02, sigma_convention=POPULATION)
        sample = two_period_report(0.18, 0.02, sigma_convention=SAMPLE)
        self.assertAlmostEqual(population.s_am / math.sqrt(2), sample.s_am,
                               places=12)
        self.assertEqual(population.g_ratio, sample.g_ratio)

    def test_risk_free_rate(self):
        report = two_period_report(0.20, 0.04, rf=0.02)
        self.assertAlmostEqual(0.6, report.g_ratio, places=14)
        self.assertAlmostEqual(0.02, report.rf)

    def test_errors(self):
        self.assertRaises(ZeroVolatility, two_period_report, 0.1, 0.1)
        self.assertRaises(NonPositiveReturn, two_period_report, 0.1, 0.01,
                          rf=0.02)
        self.assertRaises(InvalidParameter, two_period_report, 0.1, 0.2,
                          sigma_convention='mad')

    def test_tiny_net_return(self):
        report = two_period_report(0.5 + 1e-14, 1.0, rf=0.5)
        net = (0.5 + 1e-14) - 0.5
        self.assertEqual(gm_am_ratio(net, 0.5), report.g_ratio)
        self.assertLess(abs(report.mu1_crosscheck - report.g_ratio),
                        1e-12 * report.g_ratio)

    def test_negative_risk_free_rate(self):
        e = self.assertRaises(InvalidParameter, two_period_report, 0.18,
                              0.02, rf=-0.01)
        self.assertEqual('rf', e.name)

    def test_as_dict(self):
        d = two_period_report(0.18, 0.02).as_dict()
        self.assertEqual(
            sorted(['r1', 'r2', 'rf', 'sigma_convention', 'sigma', 's_am',
                    's_gm', 'g_ratio', 'mu1_crosscheck']),
            sorted(d))


class TestRolling(TestCase):

    def test_flat(self):
        entries = rolling_gm_am(ReturnSeries.from_returns([0.1, 0.1, 0.1]))
        self.assertEqual(2, len(entries))
        for entry in entries:
            self.assertAlmostEqual(1.0, entry.g_ratio, places=15)

    def test_pairs(self):
        series = ReturnSeries(['a', 'b', 'c'], [0.18, 0.02, 0.08])
        first, second = rolling_gm_am(series)
        self.assertEqual(('a', 'b'), (first.first, first.second))
        self.assertAlmostEqual(0.6, first.g_ratio, places=14)
        self.assertAlmostEqual(0.8, second.g_ratio, places=14)

    def test_skips_negative_returns(self):
        entries = rolling_gm_am(ReturnSeries.from_returns([0.1, -0.05, 0.1]))
        self.assertEqual([True, True], [e.skipped for e in entries])
        self.assertEqual({'labels': ['1', '2'], 'g_ratio': None,
                          'skipped': True}, entries[0].as_dict())

    def test_too_short(self):
        self.assertRaises(SeriesTooShort, rolling_gm_am,
                          ReturnSeries.from_returns([0.1]))


class TestGeometric(TestCase):

    def test_geometric_sharpe(self):
        series = ReturnSeries.from_returns([0.18, 0.02])
        self.assertAlmostEqual(0.75, geometric_sharpe(
            series, sigma_convention=POPULATION), places=12)

    def test_gm_am_series(self):
        series = ReturnSeries.from_returns([0.18, 0.02])
        self.assertAlmostEqual(0.6, gm_am_series(series), places=12)
        longer = ReturnSeries.from_returns([0.05, 0.12, 0.01, 0.3])
        self.assertLess(gm_am_series(longer), 1.0)
        self.assertGreater(gm_am_series(longer), 0.0)

    def test_non_positive_net_return(self):
        series = ReturnSeries.from_returns([0.05, -0.01, 0.04])
        self.assertRaises(NonPositiveReturn, geometric_sharpe, series)
        self.assertRaises(NonPositiveReturn, gm_am_series, series)
