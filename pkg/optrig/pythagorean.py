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

"""Primitive Pythagorean triples and the matrices ``diag(n**2, m**2)``.

Coprime ``m > n`` of opposite parity give the primitive triple
``a = 2mn, b = m**2 - n**2, c = m**2 + n**2`` and every primitive triple
with even ``a`` arises this way.  The turning angle of
``diag(n**2, m**2)`` has cosine ``a/c`` and sine ``b/c``.  Everything
number theoretic is computed with ints and `fractions.Fraction`.
"""

from collections import namedtuple
from fractions import Fraction
import logging
import math
import numbers

import numpy as np

from .errors import (
    InvalidParameter,
    NonPositive,
    NonPositiveInput,
    NotCoprime,
    NotPrimitive,
    NotRepresentable,
    OrderViolation,
    Overflow,
    SameParity,
    )
from .spectral import similar_matrix, validate_spd
from . import trig

log = logging.getLogger("optrig.pythagorean")

INT64_MAX = 2 ** 63 - 1
MAX_M = 2 ** 31 - 1


class TripleParams(namedtuple('TripleParams', 'm n')):

    __slots__ = ()

    @property
    def x_axis_point(self):
        return Fraction(self.m, self.n)


class PythTriple(namedtuple('PythTriple', 'a b c')):

    __slots__ = ()


def _require_int(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidParameter(name=name, value=value,
                               reason='must be an integer')
    return int(value)


def validate_params(m, n):
    """Return ``TripleParams(m, n)`` if the pair generates a primitive triple.

    The checks run in the order positivity, ordering, coprimality, parity.
    """
    m = _require_int('m', m)
    n = _require_int('n', n)
    if m < 1 or n < 1:
        raise NonPositive(m=m, n=n)
    if m <= n:
        raise OrderViolation(m=m, n=n)
    gcd = math.gcd(m, n)
    if gcd != 1:
        raise NotCoprime(m=m, n=n, gcd=gcd)
    if (m - n) % 2 == 0:
        raise SameParity(m=m, n=n)
    if m > MAX_M:
        raise Overflow(quantity='m = %d' % m)
    return TripleParams(m, n)


def euclid_triple(params):
    m, n = params
    c = m * m + n * n
    if c > INT64_MAX:
        raise Overflow(quantity='c = %d' % c)
    return PythTriple(2 * m * n, m * m - n * n, c)


def params_from_triple(triple):
    """Recover ``(m, n)`` from a primitive triple with the even leg first."""
    a, b, c = [_require_int(name, value)
               for name, value in zip('abc', triple)]
    if min(a, b, c) < 1:
        raise NotRepresentable(a=a, b=b, c=c,
                               reason='entries must be positive')
    if a * a + b * b != c * c:
        raise NotRepresentable(a=a, b=b, c=c,
                               reason='a**2 + b**2 != c**2')
    gcd = math.gcd(a, b)
    if gcd != 1:
        raise NotPrimitive(a=a, b=b, c=c, gcd=gcd)
    if a % 2:
        raise NotRepresentable(a=a, b=b, c=c,
                               reason='the even leg must come first')
    m = math.isqrt((c + b) // 2)
    n = math.isqrt((c - b) // 2)
    if m * m + n * n != c or m * m - n * n != b:
        raise NotRepresentable(a=a, b=b, c=c,
                               reason='(c + b)/2 and (c - b)/2 are not squares')
    return validate_params(m, n)


def pyth_matrix(params):
    """The Pythagorean triple matrix ``diag(n**2, m**2)``."""
    m, n = params
    if m * m > INT64_MAX:
        raise Overflow(quantity='m**2 = %d' % (m * m))
    return validate_spd(np.diag([float(n * n), float(m * m)]), pd_tol=0.0)


def pyth_trig(params):
    """Exact ``(cos phi, sin phi)`` of the Pythagorean triple matrix."""
    a, b, c = euclid_triple(params)
    return Fraction(a, c), Fraction(b, c)


def pyth_antieigenvectors(params):
    """``(m, n) / sqrt(m**2 + n**2)`` and ``(m, -n) / sqrt(m**2 + n**2)``."""
    m, n = params
    norm = math.hypot(m, n)
    return (np.array([m / norm, n / norm]),
            np.array([m / norm, -n / norm]))


def pyth_similarity_matrix(params, psi):
    """``R(psi) A R(psi).T``; it shares the turning angle of ``A``."""
    c = math.cos(psi)
    s = math.sin(psi)
    rotation = np.array([[c, -s], [s, c]])
    return similar_matrix(pyth_matrix(params), rotation.T)


def stereographic_point(t):
    """Project the x-axis point ``(t, 0)`` onto the unit circle.

    Returns ``(2t / (t**2 + 1), (t**2 - 1) / (t**2 + 1))``.  Ints and
    Fractions give exact Fractions.
    """
    if isinstance(t, numbers.Rational):
        t = Fraction(t)
    elif isinstance(t, numbers.Real):
        t = float(t)
        if not math.isfinite(t):
            raise InvalidParameter(name='t', value=t, reason='must be finite')
    else:
        raise InvalidParameter(name='t', value=t, reason='must be real')
    if not t > 0:
        raise NonPositiveInput(value=t)
    denominator = t * t + 1
    return 2 * t / denominator, (t * t - 1) / denominator


def enumerate_primitive_triples(c_max):
    """All primitive triples with ``c <= c_max``, sorted by ``(c, b)``."""
    c_max = _require_int('c_max', c_max)
    found = []
    m = 2
    while m * m + 1 <= c_max:
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > c_max:
                break
            if math.gcd(m, n) == 1:
                params = TripleParams(m, n)
                found.append((params, euclid_triple(params)))
        m += 1
    found.sort(key=lambda item: (item[1].c, item[1].b))
    log.debug('%d primitive triples with c <= %d', len(found), c_max)
    return found


class PythReport(object):

    def __init__(self, params):
        self.params = params
        self.triple = euclid_triple(params)
        self.cos_phi, self.sin_phi = pyth_trig(params)
        self.antieigenvectors = pyth_antieigenvectors(params)
        self.x_axis_point = params.x_axis_point
        self.stereo_point = stereographic_point(self.x_axis_point)
        matrix = pyth_matrix(params)
        self.mu1_closed = trig.mu1_closed(matrix)
        self.nu1_closed = trig.nu1_closed(matrix)

    @property
    def phi(self):
        return math.atan2(self.triple.b, self.triple.a)

    def as_dict(self):
        m, n = self.params
        return {
            'params': {'m': m, 'n': n},
            'triple': {'a': self.triple.a, 'b': self.triple.b,
                       'c': self.triple.c},
            'cos_phi': self.cos_phi,
            'sin_phi': self.sin_phi,
            'phi': {'radians': self.phi, 'degrees': math.degrees(self.phi)},
            'antieigenvectors': {
                'plus': self.antieigenvectors[0],
                'minus': self.antieigenvectors[1],
                'numerators': {'plus': [m, n], 'minus': [m, -n]},
                'norm_squared': m * m + n * n,
            },
            'x_axis_point': self.x_axis_point,
            'stereo_point': list(self.stereo_point),
            'mu1_closed': self.mu1_closed,
            'nu1_closed': self.nu1_closed,
        }


def pyth_report(params):
    return PythReport(params)
