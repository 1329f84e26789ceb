# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Spherical harmonics, rotations and Euler-angle differences.

Harmonics on ``S^{d-1}`` for ``d in {2, 3, 4}`` are built as solid
(homogeneous) polynomials by a ladder over the last coordinate:

.. math::

    Y_{m,k,\\ell}(x) = N_{m,k} \\|x\\|^{m-k} P^{(a,a)}_{m-k}(x_d/\\|x\\|)
        H_{k,\\ell}(x_1, \\dots, x_{d-1}),\\qquad a = k + (d-3)/2,

starting from the Fourier pair on the circle. For ``d = 3`` this is the real
associated-Legendre basis. The basis is orthonormal for the surface measure
``d sigma`` (total mass ``sigma_d``).

Axis indices ``i < j`` are 1-based. ``Q_{i,j,theta}`` turns ``e_i`` toward
``e_j``; ``T_Q f(x) = f(Q^{-1} x)`` and ``D_{i,j} = x_i d_j - x_j d_i`` is the
derivative of ``theta -> f(Q_{i,j,theta} x)`` at 0.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple
from itertools import combinations

import numpy as np
from scipy.special import comb, gammaln

from .cutoff import CutoffSpec, cutoff_eval
from .errors import BasisIndexError, CapabilityError, ConfigurationError, \
    DimensionError, ParameterDomainError
from .fields import ScalarField, as_field
from .jacobi import JacobiParams, gauss_jacobi_rule, jacobi_norm, zn_kernel
from .utils import binomial_signs, config_value, geometric_grid, lp_norm

SUPPORTED_DIMENSIONS = (2, 3, 4)


def _check_dimension(d):
    if d not in SUPPORTED_DIMENSIONS:
        raise DimensionError(d, SUPPORTED_DIMENSIONS)
    return d


def surface_area(d):
    """``sigma_d = 2 pi^{d/2} / Gamma(d/2)``."""
    return float(2 * np.exp(0.5 * d * np.log(np.pi) - gammaln(0.5 * d)))


def harmonic_dimension(d, m):
    """``dim H_m^d = C(m+d-1, d-1) - C(m+d-3, d-1)``."""
    if m < 0:
        return 0
    if m == 0:
        return 1
    return int(comb(m + d - 1, d - 1, exact=True) -
               comb(m + d - 3, d - 1, exact=True))


class UnitVector(namedtuple('UnitVector', ['coords'])):
    """Point of the unit sphere, renormalized on construction."""

    __slots__ = ()

    def __new__(cls, coords):
        """Normalize ``coords``."""
        coords = np.asarray(coords, dtype=float).ravel()
        norm = np.linalg.norm(coords)
        if norm == 0 or not np.isfinite(norm):
            raise ParameterDomainError('Cannot normalize a zero vector.')
        coords = coords / norm
        coords.setflags(write=False)
        return super(UnitVector, cls).__new__(cls, coords)

    @property
    def d(self):
        """Ambient dimension."""
        return len(self.coords)


class RotationSpec(namedtuple('RotationSpec', ['i', 'j', 'theta'])):
    """Plane rotation ``Q_{i,j,theta}`` (1-based axes, ``i < j``)."""

    __slots__ = ()

    def __new__(cls, i, j, theta):
        """Validate the axes."""
        if not 1 <= i < j:
            raise ParameterDomainError(
                'Rotation axes must satisfy 1 <= i < j, got ({}, {})'.format(
                    i, j))
        return super(RotationSpec, cls).__new__(cls, int(i), int(j),
                                                float(theta))


class SphericalQuadrature(namedtuple(
        'SphericalQuadrature', ['points', 'weights', 'exact_degree', 'd'])):
    """Points on ``S^{d-1}`` with weights summing to ``sigma_d``."""

    __slots__ = ()

    @property
    def normalized_weights(self):
        """Weights of the unit-mass measure."""
        return self.weights / np.sum(self.weights)

    def integrate(self, values):
        """Integrate values sampled at the points."""
        return np.dot(np.asarray(values, dtype=float), self.weights)


def spherical_quadrature(d, exact_degree):
    """Product rule exact for polynomials of degree ``exact_degree``.

    ``d = 2`` uses ``exact_degree + 1`` equispaced angles; higher dimensions
    combine Gauss-Gegenbauer nodes in the last coordinate with the rule one
    dimension down.
    """
    _check_dimension(d)
    exact_degree = max(int(exact_degree), 0)
    if d == 2:
        size = exact_degree + 1
        angles = 2 * np.pi * np.arange(size) / size
        points = np.column_stack([np.cos(angles), np.sin(angles)])
        weights = np.full(size, 2 * np.pi / size)
    else:
        a = (d - 3) / 2.0
        rule = gauss_jacobi_rule(JacobiParams(a, a), exact_degree // 2 + 1)
        lower = spherical_quadrature(d - 1, exact_degree)
        radius = np.sqrt(1 - rule.nodes ** 2)
        points = np.concatenate([
            np.column_stack([r * lower.points, np.full(len(lower.points), u)])
            for u, r in zip(rule.nodes, radius)])
        weights = np.concatenate([w * lower.weights for w in rule.weights])
    return SphericalQuadrature(points=points, weights=weights,
                               exact_degree=exact_degree, d=d)


def _homogeneous_jacobi(a, n, z, r2):
    """``r^n P_n^{(a,a)}(z / r)`` as a polynomial in ``z`` and ``r^2``."""
    prev = np.ones_like(z)
    if n == 0:
        return prev
    cur = (a + 1) * z
    for k in range(1, n):
        s = 2 * k + 2 * a
        lead = 2 * (k + 1) * (k + 2 * a + 1) * s
        nxt = ((s + 1) * (s + 2) * s * z * cur -
               2 * (k + a) ** 2 * (s + 2) * r2 * prev) / lead
        prev, cur = cur, nxt
    return cur


def _ladder_norm(a, n):
    params = JacobiParams(a, a)
    return 1.0 / np.sqrt(jacobi_norm(params, n) /
                         params.interval_normalization)


def harmonic_basis(d, m, x):
    """Orthonormal solid harmonics of degree ``m`` at points ``x``.

    :param x: array of shape ``(N, d)`` (unit vectors give the spherical
        harmonics).
    :returns: array of shape ``(N, dim H_m^d)``.
    """
    _check_dimension(d)
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if d == 2:
        if m == 0:
            return np.full((len(x), 1), 1.0 / np.sqrt(2 * np.pi))
        z = (x[:, 0] + 1j * x[:, 1]) ** m
        return np.column_stack([z.real, z.imag]) / np.sqrt(np.pi)
    z = x[:, d - 1]
    r2 = np.sum(x * x, axis=1)
    blocks = []
    for k in range(m + 1):
        a = k + (d - 3) / 2.0
        radial = _ladder_norm(a, m - k) * _homogeneous_jacobi(a, m - k, z, r2)
        blocks.append(radial[:, None] * harmonic_basis(d - 1, k, x[:, :d - 1]))
    return np.hstack(blocks)


def sph_harmonic_eval(d, m, ell, xi):
    """Value of the ``ell``-th (1-based) harmonic of degree ``m`` at ``xi``."""
    _check_dimension(d)
    size = harmonic_dimension(d, m)
    if not 1 <= ell <= size:
        raise BasisIndexError(
            'Harmonic index {} outside 1..{} for d={}, m={}'.format(
                ell, size, d, m))
    coords = xi.coords if isinstance(xi, UnitVector) else xi
    values = harmonic_basis(d, m, coords)[:, ell - 1]
    return float(values[0]) if np.ndim(coords) == 1 else values


def addition_kernel(d, m, u):
    """``sum_ell Y_ell^m(xi) Y_ell^m(eta)`` as a function of ``u = <xi,eta>``.

    Equals ``Z_m^{((d-3)/2,(d-3)/2)}(u) / sigma_d``.
    """
    a = (d - 3) / 2.0
    u = np.clip(np.asarray(u, dtype=float), -1.0, 1.0)
    return zn_kernel(JacobiParams(a, a), m, u) / surface_area(d)


def rotate_points(x, i, j, theta):
    """Rotate points ``x`` (last axis) in the ``(x_i, x_j)`` plane.

    ``theta`` broadcasts against ``x.shape[:-1]``.
    """
    x = np.array(x, dtype=float, copy=True)
    theta = np.remainder(np.asarray(theta, dtype=float), 2 * np.pi)
    c, s = np.cos(theta), np.sin(theta)
    xi, xj = x[..., i - 1].copy(), x[..., j - 1].copy()
    x[..., i - 1] = c * xi - s * xj
    x[..., j - 1] = s * xi + c * xj
    return x


def rotate(spec, x):
    """Apply ``Q_{i,j,theta}`` to a vector or a batch of vectors."""
    x = np.asarray(x, dtype=float)
    if spec.j > x.shape[-1]:
        raise ParameterDomainError(
            "Axis {} exceeds dimension {}".format(spec.j, x.shape[-1]))
    return rotate_points(x, spec.i, spec.j, spec.theta)


def plane_difference(evaluate, x, i, j, theta, r):
    """``sum_k (-1)^k C(r,k) evaluate(Q^{-k} x)`` with per-point angles."""
    total = 0.0
    for k, sign in enumerate(binomial_signs(r)):
        total = total + sign * evaluate(rotate_points(x, i, j, -k * theta))
    return total


def euler_difference(f, spec, r, xi):
    """``Delta^r_{i,j,theta} f(xi) = (I - T_Q)^r f(xi)``."""
    if r < 1:
        raise ParameterDomainError('Difference order must be positive.')
    f = as_field(f, 'sphere')
    coords = xi.coords if isinstance(xi, UnitVector) else np.asarray(xi)
    value = plane_difference(f, np.atleast_2d(coords), spec.i, spec.j,
                             spec.theta, r)
    return float(value[0]) if np.ndim(coords) == 1 else value


def trig_derivative_weights(degree, r):
    """Weights ``w_q`` with ``g^(r)(0) = sum_q w_q g(2 pi q / M)``.

    Exact for trigonometric polynomials of degree ``<= degree``, with
    ``M = 2 degree + 1`` samples.
    """
    size = 2 * degree + 1
    angles = 2 * np.pi * np.arange(size) / size
    k = np.arange(1, degree + 1)[:, None]
    if r == 1:
        return angles, 2.0 / size * np.sum(k * np.sin(k * angles), axis=0)
    if r == 2:
        return angles, -2.0 / size * np.sum(k * k * np.cos(k * angles),
                                           axis=0)
    raise ParameterDomainError('Only orders 1 and 2 are supported.')


def rotation_derivative(evaluate, x, i, j, r, degree):
    """``D_{i,j}^r`` of a polynomial of known degree, exactly."""
    angles, weights = trig_derivative_weights(max(degree, 1), r)
    total = 0.0
    for angle, weight in zip(angles, weights):
        total = total + weight * evaluate(rotate_points(x, i, j, angle))
    return total


def harmonic_angular_derivative(d, m, i, j, r, x):
    """``D_{i,j}^r`` applied to every harmonic of degree ``m``."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if m == 0:
        return np.zeros((len(x), 1))
    return rotation_derivative(lambda y: harmonic_basis(d, m, y),
                               x, i, j, r, m)


def _fd_step(r):
    if r == 1:
        return config_value('CONIC_APPROX_FD_STEP', 1e-5)
    return config_value('CONIC_APPROX_FD_STEP_SECOND', 1e-4)


def angular_derivative(f, i, j, r, x, *extra):
    """``D_{i,j}^r f(x)`` for ``r in {1, 2}``.

    Uses, in order: an exact rotation derivative for fields of known
    polynomial degree, the analytic gradient/Hessian, and central
    differences in the rotation angle for fields flagged differentiable.
    Additional arguments (``t`` for surface fields) are passed through.
    """
    if r not in (1, 2):
        raise ParameterDomainError('Angular derivatives of order 1 or 2.')
    scalar = np.ndim(x) == 1
    x = np.atleast_2d(np.asarray(x, dtype=float))
    extra = tuple(np.atleast_1d(np.asarray(e, dtype=float)) for e in extra)

    def evaluate(y):
        return f(y, *extra)

    i0, j0 = i - 1, j - 1
    if getattr(f, 'degree', None) is not None:
        value = rotation_derivative(evaluate, x, i, j, r, f.degree)
    elif r == 1 and getattr(f, 'grad', None) is not None:
        g = f.grad(x, *extra)
        value = x[:, i0] * g[:, j0] - x[:, j0] * g[:, i0]
    elif r == 2 and getattr(f, 'grad', None) is not None and \
            getattr(f, 'hess', None) is not None:
        g, hs = f.grad(x, *extra), f.hess(x, *extra)
        xi, xj = x[:, i0], x[:, j0]
        value = (xi * xi * hs[:, j0, j0] - 2 * xi * xj * hs[:, i0, j0] +
                 xj * xj * hs[:, i0, i0] - xi * g[:, i0] - xj * g[:, j0])
    elif getattr(f, 'differentiable', False):
        step = _fd_step(r)
        plus = evaluate(rotate_points(x, i, j, step))
        minus = evaluate(rotate_points(x, i, j, -step))
        if r == 1:
            value = (plus - minus) / (2 * step)
        else:
            value = (plus - 2 * evaluate(x) + minus) / step ** 2
    else:
        raise CapabilityError(
            '{!r} provides no derivative of order {}'.format(f, r))
    value = np.asarray(value, dtype=float)
    return float(value[0]) if scalar else value


def laplace_beltrami(f, d, x, *extra):
    """``Delta_0 f = sum_{i<j} D_{i,j}^2 f``."""
    return sum(angular_derivative(f, i, j, 2, x, *extra)
               for i, j in combinations(range(1, d + 1), 2))


class HarmonicExpansion(ScalarField):
    """``sum_m sum_ell c_{m,ell} Y_ell^m`` on ``S^{d-1}``."""

    def __init__(self, d, coefficients, name=None):
        """Constructor.

        :param coefficients: list indexed by ``m`` of arrays of length
            ``dim H_m^d``.
        """
        self.d = _check_dimension(d)
        self.coefficients = [np.asarray(c, dtype=float) for c in coefficients]
        super(HarmonicExpansion, self).__init__(
            self._evaluate, domain='sphere', name=name or 'harmonic-series',
            degree=len(self.coefficients) - 1)

    def _evaluate(self, x):
        x = np.atleast_2d(x)
        total = np.zeros(len(x))
        for m, c in enumerate(self.coefficients):
            total += harmonic_basis(self.d, m, x).dot(c)
        return total

    def angular(self, i, j, r, x):
        """Exact ``D_{i,j}^r`` of the expansion at ``x``."""
        x = np.atleast_2d(x)
        total = np.zeros(len(x))
        for m, c in enumerate(self.coefficients):
            total += harmonic_angular_derivative(self.d, m, i, j, r, x).dot(c)
        return total


def sphere_projection(f, d, degree, rule=None, cutoff=None):
    """Harmonic expansion of ``f`` up to ``degree``.

    With a cut-off the coefficients of degree ``m`` are damped by
    ``a(m / degree)`` and the expansion has degree up to ``2 degree - 1``.
    """
    f = as_field(f, 'sphere')
    top = 2 * degree - 1 if cutoff is not None else degree
    top = max(top, 0)
    rule = rule or spherical_quadrature(d, 2 * top + 8)
    values = f(rule.points) * rule.weights
    coefficients = []
    for m in range(top + 1):
        c = harmonic_basis(d, m, rule.points).T.dot(values)
        if cutoff is not None and degree > 0:
            c = c * cutoff_eval(CutoffSpec(cutoff), m / float(degree))
        coefficients.append(c)
    return HarmonicExpansion(d, coefficients,
                             name='P_{}({})'.format(degree, f.name))


def _sphere_angular(g, i, j, r, x):
    if isinstance(g, HarmonicExpansion):
        return g.angular(i, j, r, x)
    return angular_derivative(g, i, j, r, x)


def sphere_modulus(f, d, r, h, p=2, exact_degree=None, grid_size=None):
    """Euler-angle modulus ``omega_r(f; h)_p`` on ``S^{d-1}``.

    Norms use the unit-mass surface measure.
    """
    if h <= 0:
        raise ParameterDomainError('Increment must be positive.')
    f = as_field(f, 'sphere')
    exact_degree = exact_degree or config_value(
        'CONIC_APPROX_SPHERE_EXACTNESS', 48)
    rule = spherical_quadrature(d, exact_degree)
    weights = rule.normalized_weights
    grid_size = grid_size or config_value('CONIC_APPROX_THETA_GRID_SIZE', 16)
    best = 0.0
    for theta in geometric_grid(h, grid_size):
        for i, j in combinations(range(1, d + 1), 2):
            values = plane_difference(f, rule.points, i, j, theta, r)
            best = max(best, lp_norm(values, weights, p))
    return best


def sphere_kfunctional(f, d, r, h, p=2, candidates=None, jmax=4,
                       exact_degree=None):
    """Candidate minimum of ``||f - g|| + h^r max ||D_{i,j}^r g||``."""
    f = as_field(f, 'sphere')
    if candidates is None:
        cutoff = config_value('CONIC_APPROX_CUTOFF', 'smooth-exponential-bump')
        candidates = [sphere_projection(f, d, 2 ** k, cutoff=cutoff)
                      for k in range(jmax + 1)]
    if not candidates:
        raise ConfigurationError('The K-functional needs candidates.')
    exact_degree = exact_degree or config_value(
        'CONIC_APPROX_SPHERE_EXACTNESS', 48)
    rule = spherical_quadrature(d, exact_degree)
    weights = rule.normalized_weights
    f_values = f(rule.points)
    best = None
    for g in candidates:
        g = as_field(g, 'sphere')
        distance = lp_norm(f_values - g(rule.points), weights, p)
        smooth = max(
            lp_norm(_sphere_angular(g, i, j, r, rule.points), weights, p)
            for i, j in combinations(range(1, d + 1), 2))
        value = distance + h ** r * smooth
        best = value if best is None else min(best, value)
    return best
