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

"""Validated symmetric positive definite matrices and their spectra.

The eigensolver is the cyclic Jacobi method: sweeps of plane rotations
over every off-diagonal pair until the off-diagonal Frobenius norm drops
below ``OFF_DIAGONAL_THRESHOLD`` times the norm of the matrix.
"""

import logging
import math

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    InvalidParameter,
    NonFiniteEntry,
    NotPositiveDefinite,
    NotSquare,
    NotSymmetric,
    )

log = logging.getLogger("optrig.spectral")

DEFAULT_SYM_TOL = 1e-10
DEFAULT_EIG_TOL = 1e-10
# pd_tol defaults to this multiple of the largest eigenvalue.
RELATIVE_PD_TOL = 1e-12

OFF_DIAGONAL_THRESHOLD = 1e-14
MAX_SWEEPS = 100
SIGN_TIE_TOL = 1e-12

_EPS = np.finfo(float).eps


class SpectralData(object):
    """Ascending eigenvalues with matching orthonormal eigenvectors.

    ``eigenvectors`` holds the vectors as columns.
    """

    def __init__(self, eigenvalues, eigenvectors):
        eigenvalues = np.array(eigenvalues, dtype=float)
        eigenvectors = np.array(eigenvectors, dtype=float)
        if eigenvectors.shape != (len(eigenvalues), len(eigenvalues)):
            raise DimensionMismatch(
                left='%d eigenvalues' % len(eigenvalues),
                right='eigenvector block %s' % (eigenvectors.shape,))
        eigenvalues.flags.writeable = False
        eigenvectors.flags.writeable = False
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors

    @property
    def n(self):
        return len(self.eigenvalues)

    @property
    def smallest(self):
        return float(self.eigenvalues[0])

    @property
    def largest(self):
        return float(self.eigenvalues[-1])

    def vector(self, index):
        return self.eigenvectors[:, index]

    def is_degenerate(self, eig_tol=DEFAULT_EIG_TOL):
        """Whether lambda_1 equals lambda_n within ``eig_tol``."""
        return self.largest - self.smallest <= eig_tol * abs(self.largest)

    def residual(self, matrix):
        """Largest Euclidean norm of ``A x_i - lambda_i x_i``."""
        a = np.asarray(getattr(matrix, 'entries', matrix))
        r = a @ self.eigenvectors - self.eigenvectors * self.eigenvalues
        return float(np.max(np.linalg.norm(r, axis=0)))

    def orthogonality_error(self):
        v = self.eigenvectors
        return float(np.max(np.abs(v.T @ v - np.eye(self.n))))

    def as_dict(self):
        return {
            'eigenvalues': self.eigenvalues,
            'eigenvectors': [self.vector(i) for i in range(self.n)],
        }


class SpdMatrix(object):
    """A dense real symmetric positive definite matrix.

    Build these with `validate_spd`; the spectral decomposition computed
    during validation is kept with the matrix.
    """

    def __init__(self, entries, spectral):
        entries = np.array(entries, dtype=float)
        entries.flags.writeable = False
        self.entries = entries
        self.spectral = spectral

    @property
    def n(self):
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries.copy()
        return self.entries.astype(dtype)

    def __repr__(self):
        return 'SpdMatrix(%r)' % (self.entries.tolist(),)

    def as_dict(self):
        return {'n': self.n, 'entries': self.entries}


def _rotate(a, v, p, q):
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    ap = a[:, p].copy()
    aq = a[:, q].copy()
    a[:, p] = c * ap - s * aq
    a[:, q] = s * ap + c * aq
    ap = a[p, :].copy()
    aq = a[q, :].copy()
    a[p, :] = c * ap - s * aq
    a[q, :] = s * ap + c * aq
    a[p, q] = a[q, p] = 0.0
    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * vq
    v[:, q] = s * vp + c * vq


def _off_diagonal_norm(a):
    return np.linalg.norm(a - np.diag(np.diag(a)))


def jacobi_eigh(matrix, max_sweeps=MAX_SWEEPS,
                threshold=OFF_DIAGONAL_THRESHOLD):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` in the order the rotations
    leave them; `spectral_decompose` sorts and fixes signs.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off <= threshold * scale:
            log.debug('Jacobi converged after %d sweeps (n=%d)', sweep, n)
            return np.diag(a).copy(), v
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                if abs(apq) <= _EPS * math.sqrt(abs(a[p, p] * a[q, q])):
                    # Below rounding level of both diagonal entries.
                    a[p, q] = a[q, p] = 0.0
                    continue
                _rotate(a, v, p, q)
    raise ConvergenceFailure(
        procedure='Jacobi eigensolver',
        reason='off-diagonal norm %g after %d sweeps' % (
            _off_diagonal_norm(a), max_sweeps))


def _fix_sign(vector):
    magnitudes = np.abs(vector)
    # lowest index among the (near) largest components
    index = int(np.argmax(magnitudes >= magnitudes.max() - SIGN_TIE_TOL))
    if vector[index] < 0:
        return -vector
    return vector


def _decompose(a):
    values, vectors = jacobi_eigh(a)
    order = np.argsort(values, kind='stable')
    values = values[order]
    vectors = vectors[:, order]
    for i in range(len(values)):
        vectors[:, i] = _fix_sign(vectors[:, i])
    return SpectralData(values, vectors)


def spectral_decompose(matrix):
    """Return the `SpectralData` of an `SpdMatrix`.

    Validated matrices carry their decomposition; any other symmetric
    array is decomposed afresh.
    """
    spectral = getattr(matrix, 'spectral', None)
    if spectral is not None:
        return spectral
    return _decompose(np.asarray(matrix, dtype=float))


def validate_spd(raw, sym_tol=DEFAULT_SYM_TOL, pd_tol=None):
    """Check ``raw`` and return it as an `SpdMatrix`.

    A matrix whose asymmetry is within ``sym_tol`` (relative to its largest
    entry) is symmetrised as ``(A + A.T) / 2``.  ``pd_tol`` defaults to
    ``RELATIVE_PD_TOL`` times the largest eigenvalue.
    """
    try:
        a = np.array(raw, dtype=float)
    except (TypeError, ValueError) as e:
        raise InvalidParameter(name='matrix', value=raw, reason=str(e))
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise NotSquare(shape=a.shape)
    bad = np.argwhere(~np.isfinite(a))
    if len(bad):
        raise NonFiniteEntry(row=int(bad[0][0]), column=int(bad[0][1]))
    scale = float(np.max(np.abs(a)))
    asymmetry = float(np.max(np.abs(a - a.T)))
    if asymmetry > sym_tol * scale:
        raise NotSymmetric(asymmetry=asymmetry, tolerance=sym_tol * scale)
    a = 0.5 * (a + a.T)
    spectral = _decompose(a)
    if pd_tol is None:
        pd_tol = RELATIVE_PD_TOL * max(spectral.largest, 0.0)
    if spectral.smallest <= pd_tol:
        raise NotPositiveDefinite(smallest=spectral.smallest,
                                  tolerance=pd_tol)
    return SpdMatrix(a, spectral)


def similar_matrix(matrix, q, orth_tol=1e-10):
    """Return ``Q.T A Q`` for an orthogonal ``Q`` as a new `SpdMatrix`."""
    q = np.asarray(q, dtype=float)
    if q.shape != (matrix.n, matrix.n):
        raise DimensionMismatch(left='matrix of order %d' % matrix.n,
                                right='transform %s' % (q.shape,))
    if np.max(np.abs(q.T @ q - np.eye(matrix.n))) > orth_tol:
        raise InvalidParameter(name='Q', value=q.tolist(),
                               reason='not orthogonal')
    return validate_spd(q.T @ matrix.entries @ q)
