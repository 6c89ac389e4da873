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

"""Operator trigonometry of symmetric positive definite matrices.

For SPD ``A`` with extreme eigenvalues ``l1 <= ln``::

    mu1 = cos phi(A) = min <Ax,x> / (|Ax| |x|) = 2 sqrt(l1 ln) / (l1 + ln)
    nu1 = sin phi(A) = min_{eps > 0} |eps A - I| = (ln - l1) / (ln + l1)

The closed forms come from the spectrum.  Two independent numerical paths
check them: a multi-start descent of the quotient over the unit sphere,
and a golden-section search of the convex function ``eps -> |eps A - I|``.
"""

import logging
import math

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateSpectrum,
    DimensionMismatch,
    InvalidParameter,
    ZeroVector,
    )
from .search import golden_section, spectral_norm
from .spectral import DEFAULT_EIG_TOL, SpectralData, spectral_decompose

log = logging.getLogger("optrig.trig")

CLOSED_FORM = 'closed-form'
VARIATIONAL = 'variational'
CONVEX_SEARCH = 'convex-search'

NORM_METHODS = ('power', 'eigh')

DEFAULT_OPT_TOL = 1e-6
DEFAULT_IDENTITY_TOL = 1e-10

DEFAULT_RESTARTS = 8
DEFAULT_SEED = 0
DEFAULT_GRAD_TOL = 1e-8
DEFAULT_MAX_ITER = 1000
DEFAULT_BRACKET_TOL = 1e-12

ARMIJO = 1e-4
MAX_BACKTRACK = 60
STEP_MIN = 1e-12
STEP_MAX = 1e12


def _spectrum(obj):
    if isinstance(obj, SpectralData):
        return obj
    return spectral_decompose(obj)


def _entries(matrix):
    return np.asarray(getattr(matrix, 'entries', matrix), dtype=float)


def mu1_from_extremes(lmin, lmax):
    if not 0 < lmin <= lmax:
        raise InvalidParameter(name='eigenvalues', value=(lmin, lmax),
                               reason='need 0 < lambda_1 <= lambda_n')
    return 2.0 * math.sqrt(lmin * lmax) / (lmin + lmax)


def nu1_from_extremes(lmin, lmax):
    if not 0 < lmin <= lmax:
        raise InvalidParameter(name='eigenvalues', value=(lmin, lmax),
                               reason='need 0 < lambda_1 <= lambda_n')
    return (lmax - lmin) / (lmax + lmin)


def turning_angle_for_condition(kappa):
    """Maximal turning angle of ``diag(1, kappa)`` in radians."""
    return math.atan2(nu1_from_extremes(1.0, kappa),
                      mu1_from_extremes(1.0, kappa))


def mu1_closed(spectral):
    """First antieigenvalue ``cos phi(A)`` from the extreme eigenvalues."""
    s = _spectrum(spectral)
    return mu1_from_extremes(s.smallest, s.largest)


def nu1_closed(spectral):
    """``sin phi(A)`` from the extreme eigenvalues."""
    s = _spectrum(spectral)
    return nu1_from_extremes(s.smallest, s.largest)


def epsilon_min(spectral):
    """The ``eps`` at which ``|eps A - I|`` is smallest."""
    s = _spectrum(spectral)
    return 2.0 / (s.smallest + s.largest)


def antieigenvectors(spectral, eig_tol=DEFAULT_EIG_TOL):
    """Return the two most turned unit vectors ``(x_plus, x_minus)``."""
    s = _spectrum(spectral)
    if s.is_degenerate(eig_tol):
        raise DegenerateSpectrum(value=s.largest)
    l1, ln = s.smallest, s.largest
    w1 = math.sqrt(ln / (l1 + ln))
    wn = math.sqrt(l1 / (l1 + ln))
    x1 = s.vector(0)
    xn = s.vector(s.n - 1)
    pair = []
    for sign in (1.0, -1.0):
        x = w1 * x1 + sign * wn * xn
        pair.append(x / np.linalg.norm(x))
    return tuple(pair)


def quotient(matrix, x):
    """``<Ax, x> / (|Ax| |x|)``, the cosine of the angle between x and Ax."""
    a = _entries(matrix)
    x = np.asarray(x, dtype=float)
    ax = a @ x
    denominator = np.linalg.norm(ax) * np.linalg.norm(x)
    if denominator == 0.0:
        raise ZeroVector()
    return float(ax @ x / denominator)


def quotient_gradient(matrix, x):
    """Analytic gradient of `quotient` with respect to ``x``."""
    a = _entries(matrix)
    x = np.asarray(x, dtype=float)
    ax = a @ x
    q = float(ax @ x)
    r2 = float(ax @ ax)
    s2 = float(x @ x)
    if r2 == 0.0 or s2 == 0.0:
        raise ZeroVector()
    f = q / math.sqrt(r2 * s2)
    return f * (2.0 * ax / q - (a @ ax) / r2 - x / s2)


def turning_angle(x, matrix):
    """Angle in radians between ``x`` and ``Ax``."""
    a = _entries(matrix)
    x = np.asarray(x, dtype=float)
    if x.shape != (a.shape[0],):
        raise DimensionMismatch(left='matrix of order %d' % a.shape[0],
                                right='vector of shape %s' % (x.shape,))
    size = np.linalg.norm(x)
    if size == 0.0:
        raise ZeroVector()
    u = x / size
    au = a @ u
    along = float(au @ u)
    across = float(np.linalg.norm(au - along * u))
    return math.atan2(across, along)


def _descend(a, x, grad_tol, max_iter):
    """Projected gradient descent of the quotient on the unit sphere.

    Returns ``(x, value, iterations, converged)``.
    """
    x = x / np.linalg.norm(x)
    f = quotient(a, x)
    g = quotient_gradient(a, x)
    step = 1.0
    previous = None
    for iteration in range(max_iter):
        gnorm = float(np.linalg.norm(g))
        if gnorm <= grad_tol:
            return x, f, iteration, True
        if previous is not None:
            s = x - previous[0]
            y = g - previous[1]
            sy = float(s @ y)
            if sy > 0:
                step = min(max(float(s @ s) / sy, STEP_MIN), STEP_MAX)
        t = step
        for _ in range(MAX_BACKTRACK):
            candidate = x - t * g
            candidate /= np.linalg.norm(candidate)
            fc = quotient(a, candidate)
            if fc <= f - ARMIJO * t * gnorm * gnorm:
                break
            t *= 0.5
        else:
            # No decrease left at working precision.
            return x, f, iteration, gnorm <= math.sqrt(grad_tol)
        previous = (x, g)
        x, f = candidate, fc
        g = quotient_gradient(a, x)
        step = t
    return x, f, max_iter, float(np.linalg.norm(g)) <= grad_tol


def mu1_variational(matrix, restarts=DEFAULT_RESTARTS, seed=DEFAULT_SEED,
                    grad_tol=DEFAULT_GRAD_TOL, max_iter=DEFAULT_MAX_ITER):
    """Minimise the turning quotient numerically.

    Runs ``restarts`` descents from seeded random unit vectors and returns
    ``(value, argmin)`` for the best converged one.
    """
    a = _entries(matrix)
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    best = None
    for restart in range(restarts):
        x0 = rng.standard_normal(n)
        x, value, iterations, converged = _descend(a, x0, grad_tol, max_iter)
        log.debug('restart %d: value %.17g after %d iterations (%s)',
                  restart, value, iterations,
                  converged and 'converged' or 'not converged')
        if converged and (best is None or value < best[0]):
            best = (value, x)
    if best is None:
        raise ConvergenceFailure(
            procedure='variational antieigenvalue search',
            reason='none of %d restarts converged' % (restarts,))
    return best


def nu1_convex(matrix, bracket_tol=DEFAULT_BRACKET_TOL, norm_method='power'):
    """Minimise ``|eps A - I|`` over ``eps`` in ``(0, 2 / lambda_1]``.

    Returns ``(value, argmin)``.  ``norm_method`` is ``'power'`` for block
    power iteration or ``'eigh'`` for a dense symmetric eigensolver.
    """
    a = _entries(matrix)
    identity = np.eye(a.shape[0])
    upper = 2.0 / _spectrum(matrix).smallest
    lower = np.finfo(float).tiny
    if norm_method == 'power':
        def objective(eps):
            return spectral_norm(eps * a - identity)[0]
    elif norm_method == 'eigh':
        def objective(eps):
            return float(np.max(np.abs(np.linalg.eigvalsh(eps * a - identity))))
    else:
        raise InvalidParameter(name='norm_method', value=norm_method,
                               reason='expected one of %s' % (
                                   ', '.join(NORM_METHODS),))
    result = golden_section(objective, lower, upper, rtol=bracket_tol)
    return result.minimum, result.argmin


def product_positivity_sufficient(a, b):
    """Whether ``sin phi(B) <= cos phi(A)``, and by what margin.

    Returns ``(holds, margin)`` with ``margin = cos phi(A) - sin phi(B)``.
    """
    if a.n != b.n:
        raise DimensionMismatch(left='A of order %d' % a.n,
                                right='B of order %d' % b.n)
    margin = mu1_closed(a) - nu1_closed(b)
    return nu1_closed(b) <= mu1_closed(a), margin


class TrigOptions(object):
    """Knobs for `trig_report`."""

    def __init__(self, restarts=DEFAULT_RESTARTS, seed=DEFAULT_SEED,
                 grad_tol=DEFAULT_GRAD_TOL, max_iter=DEFAULT_MAX_ITER,
                 bracket_tol=DEFAULT_BRACKET_TOL, norm_method='power',
                 eig_tol=DEFAULT_EIG_TOL, opt_tol=DEFAULT_OPT_TOL,
                 identity_tol=DEFAULT_IDENTITY_TOL):
        self.restarts = restarts
        self.seed = seed
        self.grad_tol = grad_tol
        self.max_iter = max_iter
        self.bracket_tol = bracket_tol
        self.norm_method = norm_method
        self.eig_tol = eig_tol
        self.opt_tol = opt_tol
        self.identity_tol = identity_tol


class TrigReport(object):
    """Everything known about the first antieigenvalue of a matrix."""

    method = {
        'mu1': CLOSED_FORM,
        'nu1': CLOSED_FORM,
        'phi': CLOSED_FORM,
        'epsilon_min': CLOSED_FORM,
        'antieigenvectors': CLOSED_FORM,
        'mu1_variational': VARIATIONAL,
        'nu1_convex': CONVEX_SEARCH,
        'epsilon_convex': CONVEX_SEARCH,
    }

    def __init__(self, mu1, nu1, epsilon_min, antieigenvectors,
                 mu1_variational, variational_argmin, nu1_convex,
                 epsilon_convex, eigenvalues, warnings=()):
        self.mu1 = mu1
        self.nu1 = nu1
        self.phi = math.atan2(nu1, mu1)
        self.epsilon_min = epsilon_min
        self.antieigenvectors = antieigenvectors
        self.mu1_variational = mu1_variational
        self.variational_argmin = variational_argmin
        self.nu1_convex = nu1_convex
        self.epsilon_convex = epsilon_convex
        self.eigenvalues = eigenvalues
        self.identity_residual = abs(mu1 * mu1 + nu1 * nu1 - 1.0)
        self.warnings = list(warnings)

    @property
    def degenerate(self):
        return self.antieigenvectors is None

    @property
    def phi_degrees(self):
        return math.degrees(self.phi)

    def as_dict(self):
        if self.degenerate:
            vectors = 'degenerate'
        else:
            vectors = {'plus': self.antieigenvectors[0],
                       'minus': self.antieigenvectors[1]}
        return {
            'mu1': self.mu1,
            'nu1': self.nu1,
            'phi': {'radians': self.phi, 'degrees': self.phi_degrees},
            'epsilon_min': self.epsilon_min,
            'antieigenvectors': vectors,
            'identity_residual': self.identity_residual,
            'lambda_min': self.eigenvalues[0],
            'lambda_max': self.eigenvalues[-1],
            'mu1_variational': self.mu1_variational,
            'variational_argmin': self.variational_argmin,
            'nu1_convex': self.nu1_convex,
            'epsilon_convex': self.epsilon_convex,
            'method': dict(self.method),
        }


def trig_report(matrix, options=None):
    """Run the closed form and both numerical paths on ``matrix``.

    A degenerate spectrum is reported as ``mu1 = 1``, ``nu1 = 0`` with no
    antieigenvectors instead of raising.
    """
    if options is None:
        options = TrigOptions()
    spectral = _spectrum(matrix)
    warnings = []
    if spectral.is_degenerate(options.eig_tol):
        mu1, nu1, vectors = 1.0, 0.0, None
        warnings.append('degenerate spectrum: every vector is an eigenvector')
    else:
        mu1 = mu1_closed(spectral)
        nu1 = nu1_closed(spectral)
        vectors = antieigenvectors(spectral, options.eig_tol)
    value, argmin = mu1_variational(
        matrix, restarts=options.restarts, seed=options.seed,
        grad_tol=options.grad_tol, max_iter=options.max_iter)
    convex_value, convex_argmin = nu1_convex(
        matrix, bracket_tol=options.bracket_tol,
        norm_method=options.norm_method)
    if abs(value - mu1) > options.opt_tol:
        warnings.append('variational mu1 %.17g differs from closed form'
                        ' %.17g' % (value, mu1))
    if abs(convex_value - nu1) > options.opt_tol:
        warnings.append('convex nu1 %.17g differs from closed form %.17g' % (
            convex_value, nu1))
    report = TrigReport(mu1, nu1, epsilon_min(spectral), vectors, value,
                        argmin, convex_value, convex_argmin,
                        spectral.eigenvalues, warnings)
    if report.identity_residual > options.identity_tol:
        report.warnings.append('identity residual %g exceeds %g' % (
            report.identity_residual, options.identity_tol))
    for warning in report.warnings:
        log.warning(warning)
    return report
