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

"""One dimensional searches and iterative norm estimates."""

import logging
import math

import numpy as np

from .errors import ConvergenceFailure

log = logging.getLogger("optrig.search")

PHI_RATIO = 2 / (1 + math.sqrt(5))

DEFAULT_RTOL = 1e-12
DEFAULT_MAX_ITERATIONS = 400

NORM_TOL = 1e-12
# A Ritz pair whose residual stalls above NORM_TOL but below this is still
# accurate to roughly its square.
NORM_STALL_TOL = 1e-6
NORM_MAX_ITERATIONS = 500


class SearchResult(object):
    """Outcome of a one dimensional minimisation."""

    def __init__(self, argmin, minimum, iterations, lower, upper):
        self.argmin = argmin
        self.minimum = minimum
        self.iterations = iterations
        self.lower = lower
        self.upper = upper

    def __repr__(self):
        return 'SearchResult(argmin=%r, minimum=%r, iterations=%d)' % (
            self.argmin, self.minimum, self.iterations)


def golden_section(f, lower, upper, rtol=DEFAULT_RTOL,
                   max_iterations=DEFAULT_MAX_ITERATIONS):
    """Minimise a unimodal function ``f`` on ``[lower, upper]``.

    The bracket shrinks until its width is at most ``rtol`` times the
    magnitude of its larger end point.
    """
    if not lower < upper:
        raise ValueError('empty bracket [%r, %r]' % (lower, upper))
    x1 = upper - PHI_RATIO * (upper - lower)
    x2 = lower + PHI_RATIO * (upper - lower)
    f1 = f(x1)
    f2 = f(x2)
    iterations = 0
    while upper - lower > rtol * max(abs(lower), abs(upper)):
        if iterations >= max_iterations:
            raise ConvergenceFailure(
                procedure='golden-section search',
                reason='bracket [%r, %r] still open after %d iterations' % (
                    lower, upper, iterations))
        if math.isnan(f1) or math.isnan(f2):
            raise ConvergenceFailure(
                procedure='golden-section search',
                reason='objective returned NaN')
        if f2 > f1:
            upper = x2
            x2 = x1
            f2 = f1
            x1 = upper - PHI_RATIO * (upper - lower)
            f1 = f(x1)
        else:
            lower = x1
            x1 = x2
            f1 = f2
            x2 = lower + PHI_RATIO * (upper - lower)
            f2 = f(x2)
        iterations += 1

    middle = 0.5 * (lower + upper)
    candidates = [(f(middle), middle), (f1, x1), (f2, x2)]
    minimum, argmin = min(candidates)
    log.debug('golden-section search finished after %d iterations at %r',
              iterations, argmin)
    return SearchResult(argmin, minimum, iterations, lower, upper)


def _start_block(n, size):
    # Fixed pseudo-random start so that repeated runs are identical.
    rng = np.random.default_rng(n)
    return rng.standard_normal((n, size))


def spectral_norm(matrix, start=None, block_size=None,
                  tol=NORM_TOL, max_iterations=NORM_MAX_ITERATIONS):
    """Return ``(norm, basis)`` for the operator 2-norm of ``matrix``.

    Block power iteration on ``matrix.T @ matrix`` with a Rayleigh-Ritz
    step on the block.  The block keeps the leading singular directions
    apart even when the two largest singular values coincide, which a
    single power vector cannot do.  ``block_size`` defaults to the order
    of the matrix; a smaller block only finds the norm when the leading
    singular directions are well separated from the rest.  ``basis`` may
    be passed back as ``start`` for a nearby matrix.
    """
    b = np.asarray(matrix, dtype=float)
    n = b.shape[1]
    size = n if block_size is None else min(n, block_size)
    if start is None or start.shape != (n, size):
        start = _start_block(n, size)
    q, _ = np.linalg.qr(start)
    residual = theta = 0.0
    for iteration in range(max_iterations):
        z = b.T @ (b @ q)
        h = q.T @ z
        w, u = np.linalg.eigh(0.5 * (h + h.T))
        theta = max(w[-1], 0.0)
        ritz = u[:, -1]
        residual = np.linalg.norm(z @ ritz - theta * (q @ ritz))
        if residual <= tol * theta or theta == 0.0:
            return math.sqrt(theta), q
        q, _ = np.linalg.qr(z)
    if residual <= NORM_STALL_TOL * theta:
        log.debug('spectral norm accepted at residual %g after %d '
                  'iterations', residual / theta, max_iterations)
        return math.sqrt(theta), q
    raise ConvergenceFailure(
        procedure='block power iteration',
        reason='relative residual %g after %d iterations' % (
            residual / theta, max_iterations))
