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

"""Sharpe ratios and the ratio of geometric to arithmetic Sharpe ratios.

Returns are simple per-period fractions (0.05 is five percent).  Over two
periods the ratio ``S_GM / S_AM = 2 sqrt(r1 r2) / (r1 + r2)`` does not
depend on the deviation used, and it is the first antieigenvalue of
``diag(r1, r2)``.
"""

from collections import namedtuple
import csv
import logging
import math

import numpy as np

from .errors import (
    EmptySeries,
    InvalidParameter,
    NonPositiveReturn,
    ParseError,
    SeriesTooShort,
    ZeroVolatility,
    )
from . import trig

log = logging.getLogger("optrig.sharpe")

SAMPLE = 'sample'
POPULATION = 'population'
SIGMA_CONVENTIONS = (SAMPLE, POPULATION)

FORMATS = ('plain', 'csv', 'auto')

# Deviations at or below this fraction of the largest return are rounding.
ZERO_VOLATILITY_TOL = 1e-12


class ReturnSeries(object):
    """Ordered per-period returns with their period labels."""

    def __init__(self, labels, returns):
        if len(labels) != len(returns):
            raise InvalidParameter(
                name='labels', value=len(labels),
                reason='%d labels for %d returns' % (len(labels), len(returns)))
        returns = np.array(returns, dtype=float)
        if not np.all(np.isfinite(returns)):
            raise InvalidParameter(name='returns', value=returns.tolist(),
                                   reason='all returns must be finite')
        returns.flags.writeable = False
        self.labels = [str(label) for label in labels]
        self.returns = returns

    @classmethod
    def from_returns(cls, returns):
        """Label the returns with their 1-based positions."""
        return cls([str(i + 1) for i in range(len(returns))], returns)

    def __len__(self):
        return len(self.returns)

    def mean(self):
        return float(np.mean(self.returns))

    def as_dict(self):
        return {'labels': self.labels, 'returns': self.returns}


def _check_convention(sigma_convention):
    if sigma_convention not in SIGMA_CONVENTIONS:
        raise InvalidParameter(name='sigma_convention',
                               value=sigma_convention,
                               reason='expected sample or population')


def deviation(values, sigma_convention=SAMPLE):
    """Standard deviation with ``n - 1`` (sample) or ``n`` in the divisor."""
    _check_convention(sigma_convention)
    ddof = 1 if sigma_convention == SAMPLE else 0
    return float(np.std(values, ddof=ddof))


def _volatility(values, sigma_convention):
    sigma = deviation(values, sigma_convention)
    if sigma <= ZERO_VOLATILITY_TOL * float(np.max(np.abs(values))):
        raise ZeroVolatility()
    return sigma


def _parse_value(text, row):
    try:
        value = float(text)
    except ValueError:
        raise ParseError(row=row, reason='%r is not a number' % (text,))
    if not math.isfinite(value):
        raise ParseError(row=row, reason='%r is not finite' % (text,))
    return value


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def ingest_returns(stream, format='auto'):
    """Read a `ReturnSeries` from a text stream.

    ``plain`` has one return per line.  ``csv`` has ``label,return`` rows
    and may start with a header row, one whose label and return are both
    not numbers.  ``auto`` picks ``csv`` when the
    first data line has a comma.  Blank lines and lines starting with
    ``#`` are skipped; errors name the 1-based line.
    """
    if format not in FORMATS:
        raise InvalidParameter(name='format', value=format,
                               reason='expected one of %s' % ', '.join(FORMATS))
    rows = []
    for number, line in enumerate(stream, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        rows.append((number, stripped))
    if not rows:
        raise EmptySeries()
    if format == 'auto':
        format = 'csv' if ',' in rows[0][1] else 'plain'

    labels = []
    returns = []
    if format == 'plain':
        for number, text in rows:
            labels.append(str(len(labels) + 1))
            returns.append(_parse_value(text, number))
    else:
        numbers = [number for number, _ in rows]
        reader = csv.reader(text for _, text in rows)
        for index, (number, fields) in enumerate(zip(numbers, reader)):
            if len(fields) != 2:
                raise ParseError(row=number,
                                 reason='expected label,return but got %d'
                                        ' fields' % len(fields))
            label, value = [field.strip() for field in fields]
            if index == 0 and not _is_number(value) and not _is_number(label):
                continue
            labels.append(label)
            returns.append(_parse_value(value, number))
        if not returns:
            raise EmptySeries()
    log.debug('read %d returns (%s format)', len(returns), format)
    return ReturnSeries(labels, returns)


def sharpe(series, rf=0.0, sigma_convention=SAMPLE):
    """``(mean - rf) / sigma`` of the whole series."""
    if len(series) < 2:
        raise SeriesTooShort(minimum=2, length=len(series))
    sigma = _volatility(series.returns, sigma_convention)
    return (series.mean() - rf) / sigma


def gm_am_ratio(r1, r2):
    """``2 sqrt(r1 r2) / (r1 + r2)``, the GM/AM ratio of two returns."""
    for value in (r1, r2):
        if not value > 0:
            raise NonPositiveReturn(value=value)
    return min(2.0 * math.sqrt(r1 * r2) / (r1 + r2), 1.0)


class SharpeReport(object):
    """Arithmetic and geometric Sharpe ratios over two periods."""

    def __init__(self, r1, r2, rf, sigma_convention, sigma, s_am, s_gm,
                 g_ratio, mu1_crosscheck):
        self.r1 = r1
        self.r2 = r2
        self.rf = rf
        self.sigma_convention = sigma_convention
        self.sigma = sigma
        self.s_am = s_am
        self.s_gm = s_gm
        self.g_ratio = g_ratio
        self.mu1_crosscheck = mu1_crosscheck

    def as_dict(self):
        return {
            'r1': self.r1,
            'r2': self.r2,
            'rf': self.rf,
            'sigma_convention': self.sigma_convention,
            'sigma': self.sigma,
            's_am': self.s_am,
            's_gm': self.s_gm,
            'g_ratio': self.g_ratio,
            'mu1_crosscheck': self.mu1_crosscheck,
        }


def two_period_report(r1, r2, rf=0.0, sigma_convention=POPULATION):
    """Sharpe ratios of the two returns ``r1`` and ``r2``.

    Both returns are taken net of ``rf`` before either ratio is formed;
    the deviation is that of ``{r1, r2}``.
    """
    _check_convention(sigma_convention)
    if not rf >= 0:
        raise InvalidParameter(name='rf', value=rf,
                               reason='must not be negative')
    net1 = r1 - rf
    net2 = r2 - rf
    g_ratio = gm_am_ratio(net1, net2)
    sigma = _volatility([r1, r2], sigma_convention)
    s_am = (net1 + net2) / (2.0 * sigma)
    s_gm = math.sqrt(net1 * net2) / sigma
    mu1 = trig.mu1_from_extremes(min(net1, net2), max(net1, net2))
    return SharpeReport(r1, r2, rf, sigma_convention, sigma, s_am, s_gm,
                        g_ratio, mu1)


class RollingEntry(namedtuple('RollingEntry', 'first second g_ratio')):
    """The GM/AM ratio of one consecutive pair; ``g_ratio`` is None when
    a net return of the pair is not positive."""

    __slots__ = ()

    @property
    def skipped(self):
        return self.g_ratio is None

    def as_dict(self):
        return {'labels': [self.first, self.second],
                'g_ratio': self.g_ratio,
                'skipped': self.skipped}


def rolling_gm_am(series, rf=0.0):
    """GM/AM ratios of every consecutive pair of returns."""
    if len(series) < 2:
        raise SeriesTooShort(minimum=2, length=len(series))
    entries = []
    for i in range(len(series) - 1):
        try:
            g_ratio = gm_am_ratio(series.returns[i] - rf,
                                  series.returns[i + 1] - rf)
        except NonPositiveReturn:
            g_ratio = None
        entries.append(RollingEntry(series.labels[i], series.labels[i + 1],
                                    g_ratio))
    skipped = sum(1 for entry in entries if entry.skipped)
    if skipped:
        log.info('skipped %d of %d return pairs with a non-positive net'
                 ' return', skipped, len(entries))
    return entries


def _net_returns(series, rf):
    net = series.returns - rf
    bad = net[net <= 0]
    if len(bad):
        raise NonPositiveReturn(value=float(bad[0]))
    return net


def _geometric_mean(values):
    return float(np.exp(np.mean(np.log(values))))


def geometric_sharpe(series, rf=0.0, sigma_convention=SAMPLE):
    """Geometric mean of the net returns over their deviation."""
    if len(series) < 2:
        raise SeriesTooShort(minimum=2, length=len(series))
    net = _net_returns(series, rf)
    sigma = _volatility(series.returns, sigma_convention)
    return _geometric_mean(net) / sigma


def gm_am_series(series, rf=0.0):
    """Geometric over arithmetic mean of the net returns of a series.

    For two periods this is `gm_am_ratio`; the AM-GM inequality keeps it
    in ``(0, 1]``.
    """
    if len(series) < 2:
        raise SeriesTooShort(minimum=2, length=len(series))
    net = _net_returns(series, rf)
    return min(_geometric_mean(net) / float(np.mean(net)), 1.0)
