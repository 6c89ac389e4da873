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

"""Stress tensors of granular piles and their angle of repose.

The largest sustainable slope of a pile has ``sin(theta) = tau / sigma``
with ``sigma`` the mean and ``tau`` the half difference of the principal
stresses.  This is also the sine of the maximal turning angle of the
stress tensor, which is what `repose_report` checks.

Coordinates: ``x`` runs along the slope, ``z`` points down from the free
surface at ``z = 0``.
"""

from collections import namedtuple
import logging
import math

import numpy as np

from .errors import (
    GridTooSmall,
    InvalidParameter,
    InvalidPrincipalStress,
    InvalidStressField,
    NotPositiveDefinite,
    UnstableParameters,
    )
from .search import golden_section
from .spectral import SpectralData, validate_spd
from . import trig

log = logging.getLogger("optrig.granular")

SURFACE_TOL = 1e-12


class StressTensor2(namedtuple('StressTensor2',
                               'sigma_xx sigma_xz sigma_zz')):
    """A symmetric 2x2 stress tensor; only one shear component is kept."""

    __slots__ = ()

    @property
    def matrix(self):
        return np.array([[self.sigma_xx, self.sigma_xz],
                         [self.sigma_xz, self.sigma_zz]])

    def as_dict(self):
        return dict(self._asdict())


class PrincipalStress(namedtuple('PrincipalStress', 'psi sigma1 sigma2')):
    """Principal direction angle ``psi`` and stresses sigma1 >= sigma2."""

    __slots__ = ()

    def as_dict(self):
        return dict(self._asdict())


def stress_tensor(sigma_xx, sigma_xz, sigma_zz):
    """Build a `StressTensor2`, rejecting tensors that are not SPD."""
    tensor = StressTensor2(float(sigma_xx), float(sigma_xz), float(sigma_zz))
    _check_positive_definite(tensor)
    return tensor


def _check_positive_definite(tensor):
    det = tensor.sigma_xx * tensor.sigma_zz - tensor.sigma_xz ** 2
    if not (tensor.sigma_xx > 0 and det > 0):
        smallest = 0.5 * (tensor.sigma_xx + tensor.sigma_zz) - math.hypot(
            0.5 * (tensor.sigma_xx - tensor.sigma_zz), tensor.sigma_xz)
        raise NotPositiveDefinite(smallest=smallest, tolerance=0.0)


def principal_decompose(tensor):
    """Closed form eigendecomposition of a 2x2 stress tensor.

    ``psi`` lies in ``(-pi/2, pi/2]`` and is 0 for an isotropic tensor.
    """
    _check_positive_definite(tensor)
    sxx, sxz, szz = tensor
    centre = 0.5 * (sxx + szz)
    radius = math.hypot(0.5 * (sxx - szz), sxz)
    psi = 0.5 * math.atan2(2.0 * sxz, sxx - szz)
    if psi <= -math.pi / 2:
        psi += math.pi
    return PrincipalStress(psi, centre + radius, centre - radius)


def compose_stress(principal):
    """Rotate ``diag(sigma1, sigma2)`` by ``psi`` back into a tensor."""
    psi, sigma1, sigma2 = principal
    if not (sigma2 > 0 and sigma1 >= sigma2):
        raise InvalidPrincipalStress(sigma1=sigma1, sigma2=sigma2)
    c = math.cos(psi)
    s = math.sin(psi)
    return StressTensor2(sigma1 * c * c + sigma2 * s * s,
                         (sigma1 - sigma2) * c * s,
                         sigma1 * s * s + sigma2 * c * c)


def plane_traction(tensor, alpha):
    """Normal and shear traction on the plane with normal at angle alpha."""
    n = np.array([math.cos(alpha), math.sin(alpha)])
    t = tensor.matrix @ n
    normal = float(t @ n)
    shear = float(n[0] * t[1] - n[1] * t[0])
    return normal, shear


def max_obliquity(tensor):
    """Largest angle between a plane normal and its traction vector.

    Returns ``(angle, alpha)`` where ``alpha`` orients the plane normal.
    The obliquity vanishes on principal planes, so the search runs over
    the quarter turn between the two principal directions.
    """
    psi = principal_decompose(tensor).psi
    matrix = tensor.matrix

    def negative_obliquity(alpha):
        return -trig.turning_angle(
            np.array([math.cos(alpha), math.sin(alpha)]), matrix)

    result = golden_section(negative_obliquity, psi, psi + math.pi / 2,
                            rtol=1e-10)
    return -result.minimum, result.argmin


def principal_spectral(principal):
    """The `SpectralData` of a tensor from its principal decomposition."""
    c = math.cos(principal.psi)
    s = math.sin(principal.psi)
    return SpectralData([principal.sigma2, principal.sigma1],
                        [[-s, c], [c, s]])


class ReposeReport(object):

    def __init__(self, tensor, principal, theta, phi, convex_value,
                 epsilon_m, obliquity):
        self.tensor = tensor
        self.principal = principal
        self.mean_stress = 0.5 * (principal.sigma1 + principal.sigma2)
        self.deviator = 0.5 * (principal.sigma1 - principal.sigma2)
        self.theta = theta
        # The friction angle has no computation of its own: it equals the
        # angle of repose.
        self.delta = theta
        self.phi = phi
        self.convex_value = convex_value
        self.epsilon_m = epsilon_m
        self.obliquity = obliquity

    @property
    def friction_coefficient(self):
        return math.tan(self.delta)

    def as_dict(self):
        def angle(value):
            return {'radians': value, 'degrees': math.degrees(value)}
        return {
            'tensor': self.tensor,
            'principal': {
                'psi': angle(self.principal.psi),
                'sigma1': self.principal.sigma1,
                'sigma2': self.principal.sigma2,
            },
            'mean_stress': self.mean_stress,
            'deviator': self.deviator,
            'theta': angle(self.theta),
            'delta': angle(self.delta),
            'phi': angle(self.phi),
            'obliquity': angle(self.obliquity),
            'friction_coefficient': self.friction_coefficient,
            'epsilon_m': self.epsilon_m,
            'convex_value': self.convex_value,
        }


def repose_report(tensor, norm_method='power'):
    """Angle of repose, turning angle and the convex minimum of a tensor."""
    principal = principal_decompose(tensor)
    sigma = 0.5 * (principal.sigma1 + principal.sigma2)
    tau = 0.5 * (principal.sigma1 - principal.sigma2)
    theta = math.asin(tau / sigma)
    spectral = principal_spectral(principal)
    phi = math.atan2(trig.nu1_closed(spectral), trig.mu1_closed(spectral))
    convex_value, _ = trig.nu1_convex(validate_spd(tensor.matrix),
                                      norm_method=norm_method)
    obliquity, _ = max_obliquity(tensor)
    report = ReposeReport(tensor, principal, theta, phi, convex_value,
                          trig.epsilon_min(spectral), obliquity)
    log.debug('repose: theta %.17g, phi %.17g, convex %.17g', theta, phi,
              convex_value)
    return report


class StressField(object):
    """Stress components on an ``nx`` by ``nz`` grid.

    Node ``(i, j)`` sits at ``x = i * dx`` and depth ``z = j * dz``; row
    ``j = 0`` is the free surface and must carry no stress.
    """

    def __init__(self, sigma_xx, sigma_xz, sigma_zz, dx, dz, rho, g,
                 theta_slope):
        self.sigma_xx = np.array(sigma_xx, dtype=float)
        self.sigma_xz = np.array(sigma_xz, dtype=float)
        self.sigma_zz = np.array(sigma_zz, dtype=float)
        shape = self.sigma_xx.shape
        if len(shape) != 2 or self.sigma_xz.shape != shape or \
                self.sigma_zz.shape != shape:
            raise InvalidStressField(
                reason='component grids must share one 2-d shape')
        if not (dx > 0 and dz > 0):
            raise InvalidStressField(reason='grid spacings must be positive')
        for component in (self.sigma_xx, self.sigma_xz, self.sigma_zz):
            if np.max(np.abs(component[:, 0])) > SURFACE_TOL:
                raise InvalidStressField(reason='surface row is not stress free')
        self.dx = float(dx)
        self.dz = float(dz)
        self.rho = float(rho)
        self.g = float(g)
        self.theta_slope = float(theta_slope)

    @property
    def nx(self):
        return self.sigma_xx.shape[0]

    @property
    def nz(self):
        return self.sigma_xx.shape[1]

    def tensor(self, i, j):
        return StressTensor2(float(self.sigma_xx[i, j]),
                             float(self.sigma_xz[i, j]),
                             float(self.sigma_zz[i, j]))

    def coordinates(self, i, j):
        return i * self.dx, j * self.dz


def linear_depth_field(theta_slope, rho, g, K=1.0, depth=1.0, nx=50, nz=50,
                       width=None):
    """The stress field growing linearly with depth under a slope.

    ``sigma_xz = rho g z sin(theta)``, ``sigma_zz = rho g z cos(theta)``
    and ``sigma_xx = K sigma_zz``.  Below the surface the tensor is
    positive definite only while ``tan(theta) < sqrt(K)``.
    """
    if not theta_slope >= 0:
        raise InvalidParameter(name='theta_slope', value=theta_slope,
                               reason='must be non-negative')
    for name, value in (('rho', rho), ('g', g), ('K', K)):
        if not value > 0:
            raise InvalidParameter(name=name, value=value,
                                   reason='must be positive')
    if math.tan(theta_slope) >= math.sqrt(K) or theta_slope >= math.pi / 2:
        raise UnstableParameters(theta=theta_slope, K=K)
    if not depth > 0:
        raise InvalidParameter(name='depth', value=depth,
                               reason='must be positive')
    if nx < 2 or nz < 2:
        raise GridTooSmall(nx=nx, nz=nz, minimum=2)
    if width is None:
        width = depth
    dx = width / (nx - 1)
    dz = depth / (nz - 1)
    z = np.arange(nz) * dz
    load = np.outer(np.ones(nx), rho * g * z)
    return StressField(K * load * math.cos(theta_slope),
                       load * math.sin(theta_slope),
                       load * math.cos(theta_slope),
                       dx, dz, rho, g, theta_slope)


class EquilibriumResidual(object):
    """Residuals of the momentum balance, NaN on boundary nodes."""

    def __init__(self, r1, r2):
        self.r1 = r1
        self.r2 = r2
        interior = np.hypot(r1[1:-1, 1:-1], r2[1:-1, 1:-1])
        self.max_norm = float(np.max(interior))
        self.rms = float(np.sqrt(np.mean(interior ** 2)))

    def as_dict(self):
        return {'max_norm': self.max_norm, 'rms': self.rms}


def equilibrium_residual(field):
    """Central difference residuals of the momentum balance::

        r1 = d_x sigma_xx + d_z sigma_xz - rho g sin(theta)
        r2 = d_x sigma_xz + d_z sigma_zz - rho g cos(theta)
    """
    if field.nx < 3 or field.nz < 3:
        raise GridTooSmall(nx=field.nx, nz=field.nz, minimum=3)

    def d_x(f):
        return (f[2:, 1:-1] - f[:-2, 1:-1]) / (2.0 * field.dx)

    def d_z(f):
        return (f[1:-1, 2:] - f[1:-1, :-2]) / (2.0 * field.dz)

    load = field.rho * field.g
    r1 = np.full((field.nx, field.nz), np.nan)
    r2 = np.full((field.nx, field.nz), np.nan)
    r1[1:-1, 1:-1] = (d_x(field.sigma_xx) + d_z(field.sigma_xz)
                      - load * math.sin(field.theta_slope))
    r2[1:-1, 1:-1] = (d_x(field.sigma_xz) + d_z(field.sigma_zz)
                      - load * math.cos(field.theta_slope))
    return EquilibriumResidual(r1, r2)
