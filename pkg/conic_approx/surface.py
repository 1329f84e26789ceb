# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Approximation on the conic surface ``||x|| = t, 0 <= t <= 1``.

Points are passed either as :class:`SurfacePoint` or as a pair ``(x, t)``
of arrays with ``x = t xi`` of shape ``(N, d)``. Every integral uses the
unit-mass measure

.. math::

    c_{d-2,\\gamma} t^{d-2} (1-t)^\\gamma \\, dt \\; d\\sigma(\\xi)/\\sigma_d,

which is ``t^{-1} (1-t)^gamma`` against the surface measure ``t^{d-1} dt
d sigma``. The orthogonal basis is

.. math::

    S^n_{m,\\ell}(x, t) = P^{(2m+d-2,\\gamma)}_{n-m}(1-2t) \\, Y^m_\\ell(x),

with solid harmonics ``Y^m_ell(x) = t^m Y^m_ell(xi)``.
"""

from __future__ import absolute_import, print_function

import logging
from collections import namedtuple
from itertools import combinations

import numpy as np
from scipy.special import comb
from werkzeug.utils import cached_property

from .cutoff import CutoffSpec, cutoff_eval
from .errors import BasisIndexError, CapabilityError, ConfigurationError, \
    DegenerateInputError, DimensionError, NumericalFailureError, \
    ParameterDomainError
from .fields import ScalarField, as_field
from .interval import IntervalKernelEvaluator, IntervalMeasure, \
    KFunctionalResult, ModulusReport, RatioReport, dt_difference, \
    interval_distance, main_part_interval, phi
from .jacobi import JacobiParams, gauss_jacobi_rule, jacobi_derivative_table, \
    jacobi_norms, jacobi_table, zn_table
from .sphere import SUPPORTED_DIMENSIONS, UnitVector, angular_derivative, \
    harmonic_angular_derivative, harmonic_basis, harmonic_dimension, \
    laplace_beltrami, plane_difference, spherical_quadrature, surface_area
from .utils import config_value, geometric_grid, lp_norm, max_growth

logger = logging.getLogger(__name__)

BACKENDS = ('basis-sum', 'addition-formula')


#
# Geometry and weights
#
class SurfacePoint(namedtuple('SurfacePoint', ['xi', 't'])):
    """The point ``(t xi, t)`` of the conic surface."""

    __slots__ = ()

    def __new__(cls, xi, t):
        """Validate ``t`` and normalize ``xi``."""
        t = float(t)
        if not 0.0 <= t <= 1.0:
            raise ParameterDomainError('t={} outside [0, 1]'.format(t))
        if not isinstance(xi, UnitVector):
            xi = UnitVector(xi)
        return super(SurfacePoint, cls).__new__(cls, xi, t)

    @property
    def x(self):
        """Ambient coordinates ``t xi``."""
        return self.t * self.xi.coords

    @property
    def d(self):
        """Dimension of ``x``."""
        return self.xi.d


class SurfaceWeight(namedtuple('SurfaceWeight', ['gamma', 'd'])):
    """The weight ``t^{-1} (1-t)^gamma`` on the surface in ``R^{d+1}``."""

    __slots__ = ()

    def __new__(cls, gamma=0.0, d=2):
        """Validate the parameters."""
        if gamma < 0:
            raise ParameterDomainError('gamma must be >= 0, got {}'.format(
                gamma))
        if d not in SUPPORTED_DIMENSIONS:
            raise DimensionError(d, SUPPORTED_DIMENSIONS)
        return super(SurfaceWeight, cls).__new__(cls, float(gamma), int(d))

    @property
    def t_params(self):
        """Jacobi exponents of the measure in ``t``."""
        return JacobiParams(self.d - 2, self.gamma)

    def params(self, m):
        """Jacobi exponents of the ``t`` factor of ``S^n_{m,ell}``."""
        return JacobiParams(2 * m + self.d - 2, self.gamma)

    @property
    def normalization(self):
        """``b_gamma`` such that the measure has unit mass."""
        return self.t_params.normalization / surface_area(self.d)

    def varpi(self, n, t):
        """``w_{gamma,d}(n; t)``."""
        eps = 1.0 / max(n, 1) ** 2
        t = np.asarray(t, dtype=float)
        return (t + eps) ** ((self.d - 2) / 2.0) * \
            (1 - t + eps) ** (self.gamma + 0.5)


class SurfaceBasisIndex(namedtuple('SurfaceBasisIndex', ['n', 'm', 'ell'])):
    """Index ``(n, m, ell)`` of ``S^n_{m,ell}``."""

    __slots__ = ()

    def __new__(cls, n, m, ell=1):
        """Validate ``0 <= m <= n`` and ``ell >= 1``."""
        if not 0 <= m <= n or ell < 1:
            raise BasisIndexError(
                'Invalid surface basis index ({}, {}, {})'.format(n, m, ell))
        return super(SurfaceBasisIndex, cls).__new__(cls, n, m, ell)


class SurfaceRule(object):
    """Tensor rule: Gauss-Jacobi in ``t`` times a spherical rule."""

    def __init__(self, t_rule, s_rule):
        """Constructor."""
        self.t_rule = t_rule
        self.s_rule = s_rule

    @property
    def shape(self):
        """``(number of t nodes, number of sphere points)``."""
        return len(self.t_rule.nodes), len(self.s_rule.weights)

    @property
    def exact_degree(self):
        """Total polynomial degree integrated exactly."""
        return min(self.t_rule.exact_degree, self.s_rule.exact_degree)

    @cached_property
    def points(self):
        """Flattened ``(x, t)`` with ``t`` varying slowest."""
        nt, ns = self.shape
        t = np.repeat(self.t_rule.nodes, ns)
        xi = np.tile(self.s_rule.points, (nt, 1))
        return t[:, None] * xi, t

    @cached_property
    def weights(self):
        """Flattened unit-mass weights."""
        return np.outer(self.t_rule.normalized_weights,
                        self.s_rule.normalized_weights).ravel()


def surface_rule(weight, t_nodes, sphere_exactness):
    """Tensor rule for ``weight`` with the given sizes."""
    return SurfaceRule(
        gauss_jacobi_rule(weight.t_params, t_nodes, '[0,1]'),
        spherical_quadrature(weight.d, sphere_exactness))


def _check_rule(weight, rule):
    if not rule.t_rule.matches(weight.t_params, '[0,1]'):
        raise ConfigurationError(
            't-rule for {} does not match the surface weight {}'.format(
                tuple(rule.t_rule.params), tuple(weight.t_params)))
    if rule.s_rule.d != weight.d:
        raise ConfigurationError(
            'Spherical rule of dimension {} used for d={}'.format(
                rule.s_rule.d, weight.d))


def _points(p):
    """``(x, t, scalar)`` from a point or a pair of arrays."""
    if isinstance(p, SurfacePoint):
        return p.x[None, :], np.array([p.t]), True
    x, t = p
    x = np.atleast_2d(np.asarray(x, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    return x, t, False


def _result(values, scalar):
    values = np.asarray(values, dtype=float)
    return float(values[0]) if scalar else values


def directions(x, t):
    """Unit vectors ``xi`` with ``x = t xi``; ``e_1`` at the apex."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    norm = np.linalg.norm(x, axis=1)
    xi = np.zeros_like(x)
    xi[:, 0] = 1.0
    inside = norm > 0
    xi[inside] = x[inside] / norm[inside, None]
    return xi


def surface_distance(a, b):
    """``arccos(sqrt((<x,y> + ts)/2) + sqrt(1-t) sqrt(1-s))``."""
    x, t, scalar = _points(a)
    y, s, _ = _points(b)
    inner = np.sqrt(np.clip((np.sum(x * y, axis=1) + t * s) / 2, 0, None)) + \
        np.sqrt(np.clip(1 - t, 0, None)) * np.sqrt(np.clip(1 - s, 0, None))
    return _result(np.arccos(np.clip(inner, -1.0, 1.0)), scalar)


def surface_dimension(n, d):
    """``dim Pi_n`` on the surface: ``C(n+d, n) + C(n+d-1, n-1)``."""
    if n < 0:
        return 0
    value = comb(n + d, n, exact=True)
    if n >= 1:
        value += comb(n + d - 1, n - 1, exact=True)
    return int(value)


#
# Integration and basis
#
def surface_measure_integrate(f, weight, t_rule, s_rule):
    """Integral of ``f`` against the unit-mass surface measure."""
    rule = SurfaceRule(t_rule, s_rule)
    _check_rule(weight, rule)
    f = as_field(f, 'surface')
    x, t = rule.points
    return float(np.dot(f(x, t), rule.weights))


def surface_basis_eval(idx, weight, p):
    """``S^n_{m,ell}`` at ``p``."""
    size = harmonic_dimension(weight.d, idx.m)
    if idx.ell > size:
        raise BasisIndexError(
            'Harmonic index {} outside 1..{} for d={}, m={}'.format(
                idx.ell, size, weight.d, idx.m))
    x, t, scalar = _points(p)
    radial = jacobi_table(weight.params(idx.m), idx.n - idx.m, 1 - 2 * t)[-1]
    return _result(radial * harmonic_basis(weight.d, idx.m, x)[:, idx.ell - 1],
                   scalar)


def basis_norms(weight, top):
    """Closed-form ``<S^{m+j}_m, S^{m+j}_m>`` as a list over ``m``."""
    c0 = weight.t_params.normalization
    sigma = surface_area(weight.d)
    return [c0 * jacobi_norms(weight.params(m), top - m) /
            (weight.params(m).normalization * sigma)
            for m in range(top + 1)]


def quadrature_basis_norms(weight, top):
    """``<S^{m+j}_m, S^{m+j}_m>`` by one-dimensional quadrature.

    Raises :class:`NumericalFailureError` unless the values agree with the
    closed form to relative ``1e-10``.
    """
    rule = gauss_jacobi_rule(weight.t_params, top + 2, '[0,1]')
    sigma = surface_area(weight.d)
    closed = basis_norms(weight, top)
    norms = []
    for m in range(top + 1):
        table = jacobi_table(weight.params(m), top - m, 1 - 2 * rule.nodes)
        values = (table ** 2 * rule.nodes ** (2 * m)).dot(
            rule.normalized_weights) / sigma
        if not np.allclose(values, closed[m], rtol=1e-10, atol=0):
            raise NumericalFailureError(
                'Basis norms for m={} disagree with the closed form'.format(m))
        norms.append(values)
    return norms


def _moments(weight, values, rule, top, m_top=None):
    """``C_m[j, ell] = <f, S^{m+j}_{m,ell}>`` for ``m + j <= top``."""
    nt, ns = rule.shape
    grid = np.asarray(values, dtype=float).reshape(nt, ns)
    t = rule.t_rule.nodes
    weighted = grid * rule.s_rule.normalized_weights * \
        rule.t_rule.normalized_weights[:, None]
    moments = []
    m_top = top if m_top is None else min(m_top, top)
    for m in range(m_top + 1):
        table = jacobi_table(weight.params(m), top - m, 1 - 2 * t) * t ** m
        harmonics = harmonic_basis(weight.d, m, rule.s_rule.points)
        moments.append(table.dot(weighted).dot(harmonics))
    return moments


class SurfaceExpansion(ScalarField):
    """``sum_{m,j,ell} A_m[j, ell] S^{m+j}_{m,ell}`` on the surface.

    Values, generator derivatives and angular derivatives are exact.
    """

    def __init__(self, weight, coefficients, name=None):
        """Constructor.

        :param weight: :class:`SurfaceWeight`.
        :param coefficients: list over ``m`` of arrays of shape
            ``(J_m, dim H_m^d)``; row ``j`` belongs to degree ``m + j``.
        """
        self.weight = weight
        self.coefficients = [np.atleast_2d(np.asarray(c, dtype=float))
                             for c in coefficients]
        top = max([m + len(c) - 1 for m, c in enumerate(self.coefficients)
                   if len(c)] or [0])
        super(SurfaceExpansion, self).__init__(
            self._evaluate, domain='surface', name=name or 'surface-series',
            degree=top)

    def _terms(self):
        for m, c in enumerate(self.coefficients):
            if c.size:
                yield m, c, self.weight.params(m)

    def _evaluate(self, x, t):
        x = np.atleast_2d(x)
        t = np.atleast_1d(t)
        total = np.zeros(len(t))
        for m, c, params in self._terms():
            table = jacobi_table(params, len(c) - 1, 1 - 2 * t)
            harmonics = harmonic_basis(self.weight.d, m, x).dot(c.T)
            total += np.einsum('jn,nj->n', table, harmonics)
        return total

    def generator_derivative(self, r, xi, t):
        """``d^r/dt^r`` of ``t -> f(t xi, t)``."""
        xi = np.atleast_2d(xi)
        t = np.atleast_1d(np.asarray(t, dtype=float))
        total = np.zeros(len(t))
        for m, c, params in self._terms():
            harmonics = harmonic_basis(self.weight.d, m, xi).dot(c.T)
            radial = np.zeros((len(c),) + t.shape)
            for q in range(r + 1):
                power = r - q
                if power > m:
                    continue
                falling = np.prod(np.arange(m - power + 1, m + 1))
                table = jacobi_derivative_table(params, len(c) - 1,
                                                1 - 2 * t, q)
                radial += (comb(r, q, exact=True) * (-2.0) ** q * falling *
                           table * t ** (m - power))
            total += np.einsum('jn,nj->n', radial, harmonics)
        return total

    def derivative(self, r):
        """Generator derivative of order ``r`` as a surface field."""
        if r == 0:
            return self

        def func(x, t):
            return self.generator_derivative(r, directions(x, t), t)

        return ScalarField(func, domain='surface',
                           name='{}^({})'.format(self.name, r))

    def has_derivative(self, r):
        """Expansions are differentiable to any order."""
        return True

    def angular(self, i, j, r, x, t):
        """Exact ``D_{i,j}^r`` at ``(x, t)``."""
        x = np.atleast_2d(x)
        t = np.atleast_1d(t)
        total = np.zeros(len(t))
        for m, c, params in self._terms():
            table = jacobi_table(params, len(c) - 1, 1 - 2 * t)
            harmonics = harmonic_angular_derivative(
                self.weight.d, m, i, j, r, x).dot(c.T)
            total += np.einsum('jn,nj->n', table, harmonics)
        return total

    def degree_norms(self):
        """Squared norms of the components of each total degree."""
        norms = basis_norms(self.weight, self.degree)
        out = np.zeros(self.degree + 1)
        for m, c in enumerate(self.coefficients):
            for j, row in enumerate(c):
                out[m + j] += np.sum(row ** 2) * norms[m][j]
        return out

    def l2_norm(self):
        """Norm by Parseval."""
        return float(np.sqrt(np.sum(self.degree_norms())))


def random_expansion(weight, n, rng):
    """Polynomial of degree ``n`` with independent normal coefficients.

    Coefficients are scaled so every basis element enters with unit norm.
    """
    norms = basis_norms(weight, n)
    coefficients = [rng.standard_normal((n - m + 1,
                                         harmonic_dimension(weight.d, m))) /
                    np.sqrt(norms[m])[:, None]
                    for m in range(n + 1)]
    return SurfaceExpansion(weight, coefficients,
                            name='random-{}'.format(n))


def surface_projection(f, weight, n, rule=None, factors=None):
    """Orthogonal projection of ``f`` on ``Pi_n`` as an expansion.

    ``factors`` optionally damps the degree-``k`` component by
    ``factors[k]``.
    """
    f = as_field(f, 'surface')
    rule = rule or surface_rule(weight, 2 * n + 64, 2 * n + 8)
    _check_rule(weight, rule)
    x, t = rule.points
    moments = _moments(weight, f(x, t), rule, n)
    norms = basis_norms(weight, n)
    coefficients = []
    for m, c in enumerate(moments):
        scale = 1.0 / norms[m]
        if factors is not None:
            scale = scale * np.asarray(factors)[m:n + 1]
        coefficients.append(c * scale[:, None])
    return SurfaceExpansion(weight, coefficients,
                            name='proj_{}({})'.format(n, f.name))


#
# Kernels and operators
#
class SurfaceKernelEvaluator(object):
    """Localized kernel ``L_n`` for a surface weight.

    :param weight: :class:`SurfaceWeight`.
    :param n: degree.
    :param cutoff: cut-off name or :class:`CutoffSpec`.
    :param backend: ``'basis-sum'`` or ``'addition-formula'``.
    """

    def __init__(self, weight, n, cutoff=None, backend=None):
        """Constructor."""
        if n < 0 or int(n) != n:
            raise ParameterDomainError('Degree must be nonnegative.')
        backend = backend or config_value('CONIC_APPROX_KERNEL_BACKEND',
                                          'basis-sum')
        if backend not in BACKENDS:
            raise ConfigurationError('Unknown kernel backend {!r}'.format(
                backend))
        self.weight = weight
        self.n = int(n)
        self.backend = backend
        self.cutoff = CutoffSpec(cutoff or config_value(
            'CONIC_APPROX_CUTOFF', 'smooth-exponential-bump'))
        self.degree = max(2 * self.n - 1, 0)
        if self.n == 0:
            self.factors = np.ones(1)
        else:
            self.factors = cutoff_eval(
                self.cutoff, np.arange(self.degree + 1) / float(self.n))
        self.norms = quadrature_basis_norms(weight, self.degree)
        self.multipliers = [self.factors[m:] / norm
                            for m, norm in enumerate(self.norms)]

    @property
    def exactness(self):
        """Exactness needed to reproduce ``Pi_n``."""
        return max(3 * self.n - 1, 0)

    @cached_property
    def v_rules(self):
        """Unit-mass rules in ``v_1`` and ``v_2`` of the addition formula."""
        size = 2 * self.n + 2
        d, gamma = self.weight.d, self.weight.gamma
        if d == 2:
            first = (np.array([-1.0, 1.0]), np.array([0.5, 0.5]))
        else:
            a = (d - 4) / 2.0
            rule = gauss_jacobi_rule(JacobiParams(a, a), size)
            first = (rule.nodes, rule.normalized_weights)
        rule = gauss_jacobi_rule(JacobiParams(gamma - 0.5, gamma - 0.5), size)
        return first, (rule.nodes, rule.normalized_weights)

    def default_rule(self):
        """``4n + 64`` nodes in ``t`` and sphere exactness ``4n + 8``."""
        return surface_rule(self.weight, 4 * self.n + 64, 4 * self.n + 8)

    def check_rule(self, rule):
        """Raise :class:`ConfigurationError` for an unsuitable rule."""
        _check_rule(self.weight, rule)
        if rule.exact_degree < self.exactness:
            raise ConfigurationError(
                'Quadrature exactness {} below the required {} for '
                'n={}'.format(rule.exact_degree, self.exactness, self.n))

    def _basis_pairs(self, x, t, y, s):
        total = np.zeros(len(t))
        for m, mult in enumerate(self.multipliers):
            params = self.weight.params(m)
            ta = jacobi_table(params, len(mult) - 1, 1 - 2 * t)
            tb = jacobi_table(params, len(mult) - 1, 1 - 2 * s)
            radial = np.sum(mult[:, None] * ta * tb, axis=0)
            angular = np.sum(harmonic_basis(self.weight.d, m, x) *
                             harmonic_basis(self.weight.d, m, y), axis=1)
            total += radial * angular
        return total

    def _addition_pairs(self, x, t, y, s):
        (v1, w1), (v2, w2) = self.v_rules
        params = JacobiParams(self.weight.gamma + self.weight.d - 1.5, -0.5)
        weights = np.outer(w1, w2)
        out = np.empty(len(t))
        for q in range(len(t)):
            first = np.sqrt(max((np.dot(x[q], y[q]) + t[q] * s[q]) / 2, 0.0))
            second = np.sqrt(max(1 - t[q], 0.0) * max(1 - s[q], 0.0))
            zeta = v1[:, None] * first + v2[None, :] * second
            table = zn_table(params, self.degree, 2 * zeta ** 2 - 1)
            kernel = np.tensordot(self.factors, table, axes=1)
            out[q] = np.sum(kernel * weights)
        return out

    def kernel(self, a, b):
        """``L_n(a_q, b_q)`` for paired points."""
        x, t, scalar = _points(a)
        y, s, _ = _points(b)
        x, y = np.broadcast_arrays(x, y)
        t, s = np.broadcast_arrays(t, s)
        if self.backend == 'basis-sum':
            value = self._basis_pairs(x, t, y, s)
        else:
            value = self._addition_pairs(x, t, y, s)
        return _result(value, scalar and len(value) == 1)

    def kernel_matrix(self, a, b):
        """``L_n(a_p, b_q)`` for all pairs, basis-sum backend."""
        x, t, _ = _points(a)
        y, s, _ = _points(b)
        total = np.zeros((len(t), len(s)))
        for m, mult in enumerate(self.multipliers):
            params = self.weight.params(m)
            ta = jacobi_table(params, len(mult) - 1, 1 - 2 * t)
            tb = jacobi_table(params, len(mult) - 1, 1 - 2 * s)
            radial = (ta * mult[:, None]).T.dot(tb)
            angular = harmonic_basis(self.weight.d, m, x).dot(
                harmonic_basis(self.weight.d, m, y).T)
            total += radial * angular
        return total

    def project(self, f, rule=None):
        """``L_n f`` as a :class:`SurfaceExpansion`."""
        rule = rule or self.default_rule()
        self.check_rule(rule)
        f = as_field(f, 'surface')
        x, t = rule.points
        moments = _moments(self.weight, f(x, t), rule, self.degree)
        coefficients = [c * mult[:, None]
                        for c, mult in zip(moments, self.multipliers)]
        return SurfaceExpansion(self.weight, coefficients,
                                name='L_{}({})'.format(self.n, f.name))

    def interval_evaluator(self):
        """The interval kernel behind ``G_n``."""
        return IntervalKernelEvaluator(self.weight.t_params, self.n,
                                       self.cutoff)


def surface_kernel_eval(ev, a, b):
    """Localized kernel ``L_n(a, b)``."""
    return ev.kernel(a, b)


def nearbest_apply(ev, f, p, rules=None):
    """``L_n f`` at ``p``; reproduces polynomials of degree ``n``."""
    x, t, scalar = _points(p)
    return _result(ev.project(f, rules)(x, t), scalar)


def gn_apply(ev, f, p, rules=None):
    """``G_n f(t xi, t)``: the interval operator along the generator."""
    f = as_field(f, 'surface')
    x, t, scalar = _points(p)
    rules = rules or ev.default_rule()
    ev.check_rule(rules)
    nodes = rules.t_rule.nodes
    xi = directions(x, t)
    kernel = ev.interval_evaluator().kernel(t, nodes)
    grid_x = nodes[None, :, None] * xi[:, None, :]
    grid_t = np.broadcast_to(nodes, (len(t), len(nodes)))
    values = f(grid_x.reshape(-1, x.shape[1]),
               grid_t.ravel()).reshape(len(t), len(nodes))
    result = np.sum(kernel * values * rules.t_rule.normalized_weights,
                    axis=1)
    return _result(result, scalar)


def gn_field(ev, f, rules=None):
    """``G_n f`` as a surface field."""
    f = as_field(f, 'surface')
    return ScalarField(lambda x, t: gn_apply(ev, f, (x, t), rules),
                       domain='surface', name='G_{}({})'.format(ev.n, f.name))


def split_f1_f2(ev, f, p, rules=None):
    """``(f - G_n f, G_n f - L_n f)`` at ``p``."""
    f = as_field(f, 'surface')
    x, t, scalar = _points(p)
    gn = gn_apply(ev, f, (x, t), rules)
    ln = nearbest_apply(ev, f, (x, t), rules)
    return _result(f(x, t) - gn, scalar), _result(gn - ln, scalar)


#
# Moduli, K-functionals and best approximation
#
class SurfaceMeasure(object):
    """Tensor grid with unit-mass weights for ``L^p`` norms.

    ``t`` may be restricted to ``[lo, hi]``; the weights stay those of the
    full surface.
    """

    def __init__(self, weight, lo=0.0, hi=1.0, p=2, num_nodes=None,
                 sphere_exactness=None):
        """Constructor."""
        num_nodes = num_nodes or config_value('CONIC_APPROX_SURFACE_NODES',
                                              128)
        sphere_exactness = sphere_exactness or config_value(
            'CONIC_APPROX_SPHERE_EXACTNESS', 32)
        interval = IntervalMeasure(
            weight.t_params, lo, hi, p, num_nodes,
            sup_grid=config_value('CONIC_APPROX_SURFACE_SUP_GRID', 257))
        sphere = spherical_quadrature(weight.d, sphere_exactness)
        nt, ns = len(interval.nodes), len(sphere.weights)
        self.p = p
        self.t = np.repeat(interval.nodes, ns)
        self.xi = np.tile(sphere.points, (nt, 1))
        self.x = self.t[:, None] * self.xi
        if interval.weights is None:
            self.weights = None
        else:
            self.weights = np.outer(interval.weights,
                                    sphere.normalized_weights).ravel()

    def norm(self, values):
        """``L^p`` norm of values on the grid."""
        return lp_norm(values, self.weights, self.p)


def radial_difference(f, x, t, theta, r):
    """``Delta^r_{theta phi}`` in ``t`` along the generator through ``x``."""
    xi = directions(x, t)
    return dt_difference(lambda s: f(s[:, None] * xi, s), t, theta, r)


def euler_surface_difference(f, x, t, theta, r, i, j):
    """``Delta^r_{i,j,theta/sqrt(t)} f`` with ``t`` fixed."""
    t = np.asarray(t, dtype=float)
    angle = np.where(t > 0, theta / np.sqrt(np.where(t > 0, t, 1.0)), 0.0)
    return plane_difference(lambda y: f(y, t), x, i, j, angle, r)


def _main_measure(weight, r, h, p, constant, allow_empty, **kwargs):
    lo, hi = main_part_interval(r, h, constant)
    if lo >= hi:
        if allow_empty:
            return None
        raise DegenerateInputError(
            'Main-part interval [{:.4g}, {:.4g}] is empty for r={}, '
            'h={}'.format(lo, hi, r, h))
    return SurfaceMeasure(weight, lo, hi, p, **kwargs)


def _pairs(d):
    return list(combinations(range(1, d + 1), 2))


def surface_modulus_report(f, weight, r, h_values, p=2, constant=None,
                           allow_empty=False, grid_size=None, groups=None,
                           radial_name='radial', **kwargs):
    """``omega_A`` (``'radial'``) and ``omega_B`` (``'euler'``) per ``h``.

    All increments share one union grid of angles, so the Euler components
    are nondecreasing in ``h``; the radial one also shrinks its main part.
    With ``allow_empty`` an empty main-part interval contributes 0 instead
    of raising. ``groups`` maps component names to the axis pairs of their
    Euler differences.
    """
    f = as_field(f, 'surface')
    h_values = sorted(float(h) for h in h_values)
    if not h_values or h_values[0] <= 0:
        raise ParameterDomainError('Increments must be positive.')
    groups = groups or {'euler': _pairs(weight.d)}
    grid_size = grid_size or config_value('CONIC_APPROX_THETA_GRID_SIZE', 16)
    thetas = np.unique(np.concatenate(
        [geometric_grid(h, grid_size) for h in h_values]))
    full = SurfaceMeasure(weight, p=p, **kwargs)
    cache = {}

    def euler_norm(name, theta):
        if (name, theta) not in cache:
            cache[name, theta] = max(
                full.norm(euler_surface_difference(f, full.x, full.t, theta,
                                                   r, i, j))
                for i, j in groups[name])
        return cache[name, theta]

    values = dict((name, []) for name in groups)
    values[radial_name] = []
    for h in h_values:
        active = thetas[thetas <= h * (1 + 1e-12)]
        measure = _main_measure(weight, r, h, p, constant, allow_empty,
                                **kwargs)
        if measure is None:
            values[radial_name].append(0.0)
        else:
            values[radial_name].append(max(
                measure.norm(radial_difference(f, measure.x, measure.t,
                                               theta, r))
                for theta in active))
        for name in groups:
            values[name].append(max(euler_norm(name, theta)
                                    for theta in active))
    return ModulusReport(h_values=h_values, component_values=values, p=p,
                         r=r)


def surface_modulus(f, weight, r, h, p=2, **kwargs):
    """``omega_r(f; h)_p`` as a one-increment :class:`ModulusReport`."""
    if not 0 < h <= 1:
        raise ParameterDomainError('h must lie in (0, 1], got {}'.format(h))
    return surface_modulus_report(f, weight, r, [h], p, **kwargs)


def _apex_scaled(values, t, r):
    """``t^{-r/2} values``, taken as 0 at the apex."""
    safe = np.where(t > 0, t, 1.0)
    return np.where(t > 0, values * safe ** (-r / 2.0), 0.0)


def _angular_values(g, i, j, r, x, t):
    if isinstance(g, SurfaceExpansion):
        return g.angular(i, j, r, x, t)
    return angular_derivative(g, i, j, r, x, t)


def surface_kfunctional_detail(f, weight, r, h, p=2, candidates=None,
                               jmax=None, cutoff=None, groups=None,
                               **kwargs):
    """Candidate minimum with the minimizing index and its terms.

    The terms are the distance, the generator term and one angular term
    per entry of ``groups`` (all axis pairs by default).
    """
    if r not in (1, 2):
        raise ParameterDomainError('The K-functional needs r in {1, 2}.')
    f = as_field(f, 'surface')
    groups = groups or [_pairs(weight.d)]
    if candidates is None:
        jmax = 4 if jmax is None else jmax
        candidates = [SurfaceKernelEvaluator(weight, 2 ** k, cutoff).project(f)
                      for k in range(jmax + 1)]
    if not candidates:
        raise ConfigurationError('The K-functional needs candidates.')
    measure = SurfaceMeasure(weight, p=p, **kwargs)
    x, t = measure.x, measure.t
    f_values = f(x, t)
    best = None
    for index, g in enumerate(candidates):
        g = as_field(g, 'surface')
        if not g.has_derivative(r):
            raise CapabilityError(
                'Candidate {} lacks the t-derivative of order {}'.format(
                    g.name, r))
        terms = [measure.norm(f_values - g(x, t)),
                 h ** r * measure.norm(phi(t) ** r * g.derivative(r)(x, t))]
        for pairs in groups:
            terms.append(h ** r * max(
                measure.norm(_apex_scaled(_angular_values(g, i, j, r, x, t),
                                          t, r))
                for i, j in pairs))
        value = sum(terms)
        if best is None or value < best.value:
            best = KFunctionalResult(value, index, tuple(terms))
    return best


def surface_kfunctional(f, weight, r, h, p=2, candidates=None, **kwargs):
    """Upper bound of ``K_r(f; h)_p`` over the candidates."""
    return surface_kfunctional_detail(f, weight, r, h, p, candidates,
                                      **kwargs).value


BestApproximation = namedtuple('BestApproximation',
                               ['value', 'p', 'surrogate'])
"""Best-approximation estimate; ``surrogate`` flags the near-best bound."""


def best_approx_rule(weight, n):
    """Rule for ``E_n``: ``4n + 64`` t nodes, sphere exactness ``4n + 8``."""
    return surface_rule(weight, 4 * n + 64, 4 * n + 8)


def _degree_energies(f, weight, rules):
    """``||f||^2`` and the squared norms of the projections per degree."""
    _check_rule(weight, rules)
    x, t = rules.points
    values = f(x, t)
    top = len(rules.t_rule.nodes) - 1
    m_top = rules.s_rule.exact_degree // 2
    moments = _moments(weight, values, rules, top, m_top)
    norms = basis_norms(weight, top)
    energies = np.zeros(top + 1)
    for m, c in enumerate(moments):
        energies[m:] += np.sum(c ** 2, axis=1) / norms[m]
    return float(np.dot(values ** 2, rules.weights)), energies


def best_approx_profile(f, weight, n_max, rules=None):
    """``E_k(f)_2`` for ``k = 0, ..., n_max`` from one rule."""
    f = as_field(f, 'surface')
    rules = rules or best_approx_rule(weight, n_max)
    _, energies = _degree_energies(f, weight, rules)
    tails = np.cumsum(energies[::-1])[::-1]
    return np.sqrt(np.append(tails[1:], 0.0)[:n_max + 1])


def best_approx_l2(f, weight, n, rules=None):
    """``E_n(f)_2`` as ``sqrt(||f||^2 - sum_{k<=n} ||proj_k f||^2)``.

    Both terms use one rule; a negative gap from rounding is clamped to 0
    and logged.
    """
    f = as_field(f, 'surface')
    rules = rules or best_approx_rule(weight, n)
    total, energies = _degree_energies(f, weight, rules)
    gap = total - float(np.sum(energies[:n + 1]))
    if gap < 0:
        logger.warning('Negative tail %.3g for E_%d clamped to 0', gap, n)
        return 0.0
    return float(np.sqrt(gap))


def best_approx(f, weight, n, p=2, rules=None, cutoff=None):
    """``E_n(f)_p``; for ``p != 2`` the surrogate ``||f - L_{n/2} f||_p``.

    ``cutoff`` selects the kernel of the surrogate.
    """
    if p == 2:
        return BestApproximation(best_approx_l2(f, weight, n, rules), p,
                                 False)
    f = as_field(f, 'surface')
    approx = SurfaceKernelEvaluator(weight, n // 2, cutoff).project(f)
    measure = SurfaceMeasure(weight, p=p)
    value = measure.norm(f(measure.x, measure.t) -
                         approx(measure.x, measure.t))
    return BestApproximation(value, p, True)


#
# Properties of the operators
#
def sample_points(d, count, rng, t_range=(0.0, 1.0)):
    """Random surface points as ``(x, t)`` arrays."""
    xi = rng.standard_normal((count, d))
    xi /= np.linalg.norm(xi, axis=1)[:, None]
    t = rng.uniform(t_range[0], t_range[1], count)
    return t[:, None] * xi, t


def commutation_check(ev, f, kind, theta, r=1, points=None, rng=None, i=1,
                      j=2, rules=None):
    """Largest ``|Delta(L_n f) - L_n(Delta f)|`` over sample points.

    ``kind`` is ``'radial-difference'`` (``Delta^r_{theta phi}``) or
    ``'euler-difference'`` (``Delta^r_{i,j,psi}`` with ``psi =
    theta/sqrt(t)`` frozen at each sample point).
    """
    f = as_field(f, 'surface')
    if points is None:
        rng = rng or np.random.default_rng(0)
        points = sample_points(ev.weight.d, 20, rng, (0.05, 0.95))
    x, t, _ = _points(points)
    rules = rules or ev.default_rule()
    approx = ev.project(f, rules)
    if kind == 'radial-difference':
        lhs = radial_difference(approx, x, t, theta, r)
        shifted = ScalarField(
            lambda y, s: radial_difference(f, y, s, theta, r),
            domain='surface')
        rhs = ev.project(shifted, rules)(x, t)
    elif kind == 'euler-difference':
        lhs = euler_surface_difference(approx, x, t, theta, r, i, j)
        rhs = np.empty(len(t))
        for q in range(len(t)):
            psi = theta / np.sqrt(t[q])
            rotated = ScalarField(
                lambda y, s, psi=psi: plane_difference(
                    lambda z: f(z, s), y, i, j, psi, r),
                domain='surface')
            rhs[q] = ev.project(rotated, rules)(x[q:q + 1], t[q:q + 1])[0]
    else:
        raise ParameterDomainError('Unknown commutation kind {!r}'.format(
            kind))
    return float(np.max(np.abs(lhs - rhs)))


def bernstein_ratio(n, weight, r, trials=20, p=2, rng=None):
    """Largest angular and radial Bernstein ratios over random polynomials.

    :returns: ``(max ||t^{-r/2} D^r f|| / (n^r ||f||),
        max ||phi^r d_t^r f|| / (n^r ||f||))``.
    """
    rng = rng or np.random.default_rng(0)
    measure = SurfaceMeasure(weight, p=p, num_nodes=2 * n + 16,
                             sphere_exactness=2 * n + 4)
    x, t, xi = measure.x, measure.t, measure.xi
    angular = radial = 0.0
    for _ in range(trials):
        g = random_expansion(weight, n, rng)
        size = measure.norm(g(x, t))
        if size == 0:
            continue
        scale = float(n) ** r * size
        angular = max(angular, max(
            measure.norm(_apex_scaled(g.angular(i, j, r, x, t), t, r))
            for i, j in _pairs(weight.d)) / scale)
        radial = max(radial, measure.norm(
            phi(t) ** r * g.generator_derivative(r, xi, t)) / scale)
    return angular, radial


def bernstein_report(weight, r, n_values=(4, 8, 16, 32), trials=20, p=2,
                     seed=0):
    """Bernstein ratios over ``n_values`` as two :class:`RatioReport`."""
    rng = np.random.default_rng(seed)
    pairs = [bernstein_ratio(n, weight, r, trials, p, rng) for n in n_values]
    angular = [a for a, _ in pairs]
    radial = [b for _, b in pairs]
    return (RatioReport(list(n_values), angular, max_growth(angular)),
            RatioReport(list(n_values), radial, max_growth(radial)))


def spectral_operator(f, weight, x, t, step=None):
    """``Delta_{gamma,0} f`` at ``(x, t)``.

    The generator part is
    ``t(1-t) f'' + ((d-1) - (d+gamma) t) f'`` with derivatives along the
    generator (exact when ``f`` supplies them, central differences
    otherwise); the angular part is ``t^{-1} sum D_{i,j}^2 f``.
    """
    f = as_field(f, 'surface')
    x = np.atleast_2d(np.asarray(x, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    xi = directions(x, t)
    if f.has_derivative(1) and f.has_derivative(2):
        first = f.derivative(1)(x, t)
        second = f.derivative(2)(x, t)
    else:
        step = step or config_value('CONIC_APPROX_FD_STEP_SECOND', 1e-4)

        def along(s):
            return f(s[:, None] * xi, s)

        plus, minus = along(t + step), along(t - step)
        first = (plus - minus) / (2 * step)
        second = (plus - 2 * along(t) + minus) / step ** 2
    d, gamma = weight.d, weight.gamma
    generator = t * (1 - t) * second + ((d - 1) - (d + gamma) * t) * first
    return generator + laplace_beltrami(f, d, x, t) / t


def surface_basis_field(idx, weight):
    """``S^n_{m,ell}`` as an exact :class:`SurfaceExpansion`."""
    coefficients = []
    for m in range(idx.m + 1):
        block = np.zeros((idx.n - m + 1, harmonic_dimension(weight.d, m)))
        if m == idx.m:
            block[idx.n - m, idx.ell - 1] = 1.0
        coefficients.append(block)
    return SurfaceExpansion(weight, coefficients,
                            name='S^{}_{{{},{}}}'.format(*idx))


def surface_basis_indices(weight, n):
    """All basis indices of total degree ``<= n``."""
    return [SurfaceBasisIndex(k, m, ell)
            for k in range(n + 1) for m in range(k + 1)
            for ell in range(1, harmonic_dimension(weight.d, m) + 1)]


def localization_profile(u, n, kappa, dim):
    """``G^kappa_{n,dim}(u) = n^dim / (1 + n u)^kappa``."""
    return float(n) ** dim / (1 + n * np.asarray(u, dtype=float)) ** kappa


def _pair_sample(weight, count, rng):
    a = sample_points(weight.d, count, rng)
    b = sample_points(weight.d, count, rng)
    # diagonal pairs carry the maxima
    x = np.vstack([a[0], a[0]])
    t = np.concatenate([a[1], a[1]])
    y = np.vstack([b[0], a[0]])
    s = np.concatenate([b[1], a[1]])
    return (x, t), (y, s)


def kernel_decay_report(weight, n_values=(8, 16, 32, 64), kappa=4,
                        cutoff=None, pairs=100, seed=0):
    """Normalized maxima of ``|L_n| sqrt(w(n;t) w(n;s)) / G^kappa_{n,d}``."""
    rng = np.random.default_rng(seed)
    a, b = _pair_sample(weight, pairs, rng)
    dist = surface_distance(a, b)
    maxima = []
    for n in n_values:
        ev = SurfaceKernelEvaluator(weight, n, cutoff)
        values = np.abs(ev.kernel(a, b)) * np.sqrt(
            weight.varpi(n, a[1]) * weight.varpi(n, b[1]))
        maxima.append(float(np.max(
            values / localization_profile(dist, n, kappa, weight.d))))
    return RatioReport(list(n_values), maxima, max_growth(maxima))


def kernel_product_bound_report(weight, n_values=(8, 16, 32, 64), kappa=4,
                                cutoff=None, pairs=100, seed=0):
    """Normalized maxima against the interval-times-sphere product bound."""
    rng = np.random.default_rng(seed)
    a, b = _pair_sample(weight, pairs, rng)
    (x, t), (y, s) = a, b
    d_interval = interval_distance(np.clip(s, 0, 1), np.clip(t, 0, 1))
    inner = np.sum(directions(x, t) * directions(y, s), axis=1)
    d_sphere = np.arccos(np.clip(inner, -1.0, 1.0))
    maxima = []
    for n in n_values:
        ev = SurfaceKernelEvaluator(weight, n, cutoff)
        values = np.abs(ev.kernel(a, b)) * np.sqrt(
            weight.varpi(n, t) * weight.varpi(n, s))
        bound = localization_profile(d_interval, n, kappa, 1) * \
            localization_profile(np.sqrt(s) * d_sphere, n, kappa,
                                 weight.d - 1)
        maxima.append(float(np.max(values / bound)))
    return RatioReport(list(n_values), maxima, max_growth(maxima))


def integral_bound_report(weight, n_values=(8, 16, 32, 64), kappa=4,
                          s_points=65):
    """Maxima over ``s`` of the weighted generator integral of ``G_{n,1}``.

    The integral is divided by ``(s + n^{-2})^{(d-1)/2}``.
    """
    s = np.linspace(0.0, 1.0, s_points)
    maxima = []
    for n in n_values:
        rule = gauss_jacobi_rule(weight.t_params, 4 * n + 64, '[0,1]')
        dist = interval_distance(s[:, None], rule.nodes[None, :])
        integrand = localization_profile(dist, n, kappa, 1) / np.sqrt(
            weight.varpi(n, rule.nodes)[None, :] *
            weight.varpi(n, s)[:, None])
        integral = integrand.dot(rule.normalized_weights)
        bound = (s + 1.0 / n ** 2) ** ((weight.d - 1) / 2.0)
        maxima.append(float(np.max(integral / bound)))
    return RatioReport(list(n_values), maxima, max_growth(maxima))


def sphere_average_check(ev, f, s_values=None, rules=None):
    """Largest deviation between sphere averages of ``L_n f`` and ``L_n f̄``.

    ``f̄(s)`` is the sphere average of ``f(s eta, s)``; the right-hand side
    applies the interval operator of the ``t`` weight to it.
    """
    f = as_field(f, 'surface')
    rules = rules or ev.default_rule()
    s_values = np.linspace(0.05, 0.95, 10) if s_values is None else \
        np.asarray(s_values, dtype=float)
    sphere = rules.s_rule
    weights = sphere.normalized_weights
    approx = ev.project(f, rules)

    def average(g, s):
        s = np.atleast_1d(s)
        x = s[:, None, None] * sphere.points[None, :, :]
        tt = np.repeat(s, len(weights))
        values = g(x.reshape(-1, sphere.d), tt).reshape(len(s), -1)
        return values.dot(weights)

    lhs = average(approx, s_values)
    mean = ScalarField(lambda u: average(f, u), domain='interval')
    rhs = ev.interval_evaluator().project(mean, rules.t_rule)(s_values)
    return float(np.max(np.abs(lhs - rhs)))


def distance_equivalence(d, pairs=1000, seed=0):
    """Fitted two-sided constants between the surface distance and
    ``d_[0,1](s,t) + (st)^{1/4} d_S(xi,eta)``.

    :returns: ``(min ratio, max ratio)`` over pairs at positive distance.
    """
    rng = np.random.default_rng(seed)
    (x, t), (y, s) = sample_points(d, pairs, rng), sample_points(d, pairs,
                                                                  rng)
    exact = surface_distance((x, t), (y, s))
    inner = np.sum(directions(x, t) * directions(y, s), axis=1)
    model = interval_distance(t, s) + (s * t) ** 0.25 * np.arccos(
        np.clip(inner, -1.0, 1.0))
    keep = model > 1e-8
    ratio = exact[keep] / model[keep]
    return float(ratio.min()), float(ratio.max())


def stability_report(f, weight, n_values=(4, 8, 16, 32), p=2, cutoff=None):
    """``||L_n f||_p / ||f||_p`` over ``n_values``."""
    f = as_field(f, 'surface')
    measure = SurfaceMeasure(weight, p=p)
    size = measure.norm(f(measure.x, measure.t))
    values = []
    for n in n_values:
        approx = SurfaceKernelEvaluator(weight, n, cutoff).project(f)
        values.append(measure.norm(approx(measure.x, measure.t)) / size
                      if size else 0.0)
    return RatioReport(list(n_values), values, max_growth(values))


def residual_field(ev, f, rules=None):
    """``f - L_n f`` as a surface field."""
    f = as_field(f, 'surface')
    approx = ev.project(f, rules)
    return ScalarField(lambda x, t: f(x, t) - approx(x, t), domain='surface',
                       name='{}-L_{}'.format(f.name, ev.n))


def corollary_report(f, weight, r, n_values=(4, 8, 16), p=2, cutoff=None):
    """``omega_r(f - L_n f; 1/n) / omega_r(f; 1/n)`` over ``n_values``."""
    f = as_field(f, 'surface')
    values = []
    for n in n_values:
        h = 1.0 / n
        ev = SurfaceKernelEvaluator(weight, n, cutoff)
        base = surface_modulus_report(f, weight, r, [h], p, allow_empty=True)
        rest = surface_modulus_report(residual_field(ev, f), weight, r, [h],
                                      p, allow_empty=True)
        top = base.component_values['radial'][0] + \
            base.component_values['euler'][0]
        low = rest.component_values['radial'][0] + \
            rest.component_values['euler'][0]
        values.append(low / top if top else 0.0)
    return RatioReport(list(n_values), values, max_growth(values))


def well_posedness_flag(r, p, d):
    """Whether ``||t^{-r/2} D^r_{i,j} x_i||_p`` is finite on the surface.

    ``D^r x_i`` is of size ``t``, so the norm is finite exactly when
    ``p (r/2 - 1) < d - 1``; for ``r <= 2`` it always is.
    """
    if r <= 2:
        return True
    if np.isinf(p):
        return False
    return p < 2.0 * (d - 1) / (r - 2)
