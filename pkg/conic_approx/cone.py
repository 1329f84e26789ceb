# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Approximation on the solid cone ``||x|| <= t, 0 <= t <= 1``.

A cone function ``f`` is extended evenly to the conic surface one
dimension up, ``f~((x, x_{d+1}), t) = f(x, t)`` with
``x_{d+1} = +-sqrt(t^2 - ||x||^2)``. Kernels, operators, norms, moduli and
K-functionals for the weight ``(t^2 - ||x||^2)^{-1/2} (1-t)^gamma`` are
computed on the lifted surface, where the weight is ``t^{-1} (1-t)^gamma``
and the lateral boundary is no longer singular.

Cone fields are called as ``f(x, t)`` with ``x`` of shape ``(N, d)``;
``grad``/``hess`` are taken in ``x``.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple
from itertools import combinations

import numpy as np
from scipy.special import comb

from .cutoff import CutoffSpec, cutoff_eval
from .errors import CapabilityError, ConfigurationError, DimensionError, \
    ParameterDomainError
from .fields import ScalarField, as_field
from .jacobi import JacobiParams, gauss_jacobi_rule, jacobi_table
from .sphere import angular_derivative, harmonic_basis
from .surface import BestApproximation, SurfaceKernelEvaluator, \
    SurfaceMeasure, SurfacePoint, SurfaceWeight, best_approx_l2, \
    surface_kfunctional_detail, surface_measure_integrate, \
    surface_modulus_report, surface_rule
from .utils import config_value

CONE_DIMENSIONS = (2,)


class ConePoint(namedtuple('ConePoint', ['x', 't'])):
    """Point ``(x, t)`` with ``||x|| <= t``."""

    __slots__ = ()

    def __new__(cls, x, t):
        """Validate the point."""
        x = np.asarray(x, dtype=float).ravel()
        t = float(t)
        if not 0.0 <= t <= 1.0 or np.linalg.norm(x) > t * (1 + 1e-12):
            raise ParameterDomainError(
                '({}, {}) lies outside the cone'.format(list(x), t))
        x.setflags(write=False)
        return super(ConePoint, cls).__new__(cls, x, t)

    @property
    def phi(self):
        """``Phi(x, t) = sqrt(t^2 - ||x||^2)``."""
        return float(np.sqrt(max(self.t ** 2 - np.dot(self.x, self.x), 0.0)))


class LiftedPoint(namedtuple('LiftedPoint', ['X', 't'])):
    """Point ``(X, t)`` of the conic surface in ``R^{d+2}``."""

    __slots__ = ()

    def surface_point(self):
        """The same point as a :class:`SurfacePoint`."""
        if self.t == 0:
            xi = np.zeros(len(self.X))
            xi[0] = 1.0
            return SurfacePoint(xi, 0.0)
        return SurfacePoint(self.X / self.t, self.t)


class ConeWeight(namedtuple('ConeWeight', ['gamma', 'd'])):
    """``W_gamma(x, t) = (t^2 - ||x||^2)^{-1/2} (1-t)^gamma``."""

    __slots__ = ()

    def __new__(cls, gamma=0.0, d=2):
        """Validate the parameters."""
        if gamma < 0:
            raise ParameterDomainError('gamma must be >= 0, got {}'.format(
                gamma))
        if d not in CONE_DIMENSIONS:
            raise DimensionError(d, CONE_DIMENSIONS)
        return super(ConeWeight, cls).__new__(cls, float(gamma), int(d))

    @property
    def surface_weight(self):
        """Weight of the lifted surface in ``R^{d+2}``."""
        return SurfaceWeight(self.gamma, self.d + 1)


def cone_phi(x, t):
    """``Phi(x, t)`` for arrays."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    return np.sqrt(np.clip(t ** 2 - np.sum(x * x, axis=1), 0.0, None))


def lift_points(x, t, sign=1):
    """Lifted coordinates ``X = (x, sign Phi(x, t))``."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    return np.column_stack([x, sign * cone_phi(x, t)])


def lift(p, sign=1):
    """Lift a :class:`ConePoint` to the conic surface one dimension up."""
    if sign not in (1, -1):
        raise ParameterDomainError('sign must be +1 or -1')
    X = np.append(p.x, sign * p.phi)
    return LiftedPoint(X, p.t)


def _cone_points(p):
    if isinstance(p, ConePoint):
        return p.x[None, :], np.array([p.t]), True
    x, t = p
    return (np.atleast_2d(np.asarray(x, dtype=float)),
            np.atleast_1d(np.asarray(t, dtype=float)), False)


def _result(values, scalar):
    values = np.asarray(values, dtype=float)
    return float(values[0]) if scalar else values


def _pad(d):
    def grad(X, t, f):
        g = f.grad(X[:, :d], t)
        return np.column_stack([g, np.zeros(len(g))])

    def hess(X, t, f):
        h = f.hess(X[:, :d], t)
        out = np.zeros((len(h), d + 1, d + 1))
        out[:, :d, :d] = h
        return out

    return grad, hess


def lift_field(f, d=2):
    """Even extension ``f~(X, t) = f(X_1..X_d, t)`` as a surface field.

    Gradients and Hessians in ``x`` are padded with zeros for ``X_{d+1}``.
    """
    f = as_field(f, 'cone')
    grad, hess = _pad(d)
    return ScalarField(
        lambda X, t: f(X[:, :d], t), domain='surface',
        name='lift({})'.format(f.name),
        grad=(lambda X, t: grad(X, t, f)) if f.grad is not None else None,
        hess=(lambda X, t: hess(X, t, f)) if f.hess is not None else None,
        differentiable=f.differentiable, degree=f.degree)


def restrict_field(g, d=2):
    """A lifted surface field read back on the cone (upper sheet)."""
    return ScalarField(lambda x, t: g(lift_points(x, t), t), domain='cone',
                       name='restrict({})'.format(getattr(g, 'name', 'g')),
                       degree=getattr(g, 'degree', None))


def cone_dimension(n, d=2):
    """``dim Pi_n`` on the cone, ``C(n+d+1, n)``."""
    return int(comb(n + d + 1, n, exact=True)) if n >= 0 else 0


def _check_evaluator(ev, d):
    if ev.weight.d != d + 1:
        raise ConfigurationError(
            'Cone of dimension {} needs a surface evaluator with d={}, got '
            '{}'.format(d, d + 1, ev.weight.d))


def cone_kernel_eval(ev, a, b, d=2):
    """``L_n((X,t),(Y,s)) + L_n((X,t),(Y_*,s))`` for paired points."""
    _check_evaluator(ev, d)
    x, t, scalar = _cone_points(a)
    y, s, _ = _cone_points(b)
    X = lift_points(x, t)
    value = ev.kernel((X, t), (lift_points(y, s), s)) + \
        ev.kernel((X, t), (lift_points(y, s, -1), s))
    return _result(value, scalar)


def cone_integrate(f, w, rules=None):
    """Integral against the unit-mass cone measure, through the lift."""
    surface = w.surface_weight
    if rules is None:
        rules = surface_rule(surface, 64, 32)
    return surface_measure_integrate(lift_field(f, w.d), surface,
                                     rules.t_rule, rules.s_rule)


def cone_rule(w, t_nodes=64, radial_nodes=32, angles=64):
    """Direct product rule on the cone for ``d = 2``.

    ``x = t sqrt(v) (cos a, sin a)`` with Gauss-Jacobi in ``t`` for
    ``t^{d-1} (1-t)^gamma`` and in ``v`` for ``(1-v)^{-1/2}``; unit mass.
    """
    t_rule = gauss_jacobi_rule(JacobiParams(w.d - 1, w.gamma), t_nodes,
                               '[0,1]')
    v_rule = gauss_jacobi_rule(JacobiParams(0, -0.5), radial_nodes, '[0,1]')
    a = 2 * np.pi * np.arange(angles) / angles
    T, V, A = np.meshgrid(t_rule.nodes, v_rule.nodes, a, indexing='ij')
    weights = np.einsum('i,j,k->ijk', t_rule.normalized_weights,
                        v_rule.normalized_weights,
                        np.full(angles, 1.0 / angles))
    rho = T * np.sqrt(V)
    x = np.stack([rho * np.cos(A), rho * np.sin(A)], axis=-1)
    return x.reshape(-1, 2), T.ravel(), weights.ravel()


def cone_direct_integrate(f, w, **kwargs):
    """Integral against the unit-mass cone measure, without the lift."""
    f = as_field(f, 'cone')
    x, t, weights = cone_rule(w, **kwargs)
    return float(np.dot(f(x, t), weights))


def cone_projection(f, w, n, rules=None, cutoff=None):
    """``L_n f~`` on the lifted surface as a surface expansion."""
    ev = SurfaceKernelEvaluator(w.surface_weight, n, cutoff)
    return ev.project(lift_field(f, w.d), rules)


def cone_nearbest_apply(f, w, n, p, rules=None, cutoff=None):
    """``L_n f(x, t)`` computed as ``L_n f~(X, t)`` on the lift."""
    x, t, scalar = _cone_points(p)
    approx = cone_projection(f, w, n, rules, cutoff)
    return _result(approx(lift_points(x, t), t), scalar)


def cone_nearbest_direct(f, w, n, p, cutoff=None, **kwargs):
    """``L_n f(x, t)`` by cone-side quadrature of the reflected kernel."""
    f = as_field(f, 'cone')
    x, t, scalar = _cone_points(p)
    ev = SurfaceKernelEvaluator(w.surface_weight, n, cutoff)
    y, s, weights = cone_rule(w, **kwargs)
    values = f(y, s) * weights
    Y, Ys = lift_points(y, s), lift_points(y, s, -1)
    X = lift_points(x, t)
    out = np.empty(len(t))
    for q in range(len(t)):
        kernel = ev.kernel_matrix((X[q:q + 1], t[q:q + 1]), (Y, s))[0] + \
            ev.kernel_matrix((X[q:q + 1], t[q:q + 1]), (Ys, s))[0]
        out[q] = 0.5 * np.dot(kernel, values)
    return _result(out, scalar)


def cone_groups(d):
    """Axis pairs of the cone's two angular components."""
    inner = list(combinations(range(1, d + 1), 2))
    outer = [(i, d + 1) for i in range(1, d + 1)]
    return inner, outer


def cone_modulus_report(f, w, r, h_values, p=2, convention='cone',
                        allow_empty=False, **kwargs):
    """Cone modulus components over ``h_values``.

    ``'a'`` holds ``Delta_{i,j,theta/sqrt(t)}`` for ``i < j <= d``, ``'b'``
    the differences ``Delta_{i,d+1,theta/sqrt(t)}`` of the lift and ``'c'``
    the radial part. ``convention='cone'`` restricts ``c`` to
    ``[r^2 h^2, 1 - r^2 h^2]``; ``'surface'`` uses the main-part constant
    of the surface modulus.
    """
    if convention == 'cone':
        constant = 1.0
    elif convention == 'surface':
        constant = None
    else:
        raise ParameterDomainError('Unknown convention {!r}'.format(
            convention))
    inner, outer = cone_groups(w.d)
    return surface_modulus_report(
        lift_field(f, w.d), w.surface_weight, r, h_values, p,
        constant=constant, allow_empty=allow_empty,
        groups={'a': inner, 'b': outer}, radial_name='c', **kwargs)


def cone_modulus(f, w, r, h, p=2, convention='cone', **kwargs):
    """``omega_r(f; h)_{p, W_gamma}`` as a one-increment report."""
    if not 0 < h <= 1:
        raise ParameterDomainError('h must lie in (0, 1], got {}'.format(h))
    return cone_modulus_report(f, w, r, [h], p, convention, **kwargs)


def phi_derivative_identity_check(g, i, r, samples, d=2, method=None):
    """Largest ``|(-Phi d_i)^r g(x,t) - D_{i,d+1}^r g~(X,t)|``.

    The left side uses the partial derivatives of ``g``. The right side
    uses them too (``method='analytic'``) or central differences in the
    rotation angle of the lifted field (``'finite-difference'``, the
    default for ``r = 2``). Samples with ``Phi < 1e-6`` are skipped.

    :returns: ``(max deviation, number of skipped samples)``.
    """
    if r not in (1, 2):
        raise ParameterDomainError('The identity is checked for r in {1, 2}.')
    g = as_field(g, 'cone')
    if g.grad is None or (r == 2 and g.hess is None):
        raise CapabilityError('{} lacks partial derivatives'.format(g.name))
    method = method or ('analytic' if r == 1 else 'finite-difference')
    x, t, _ = _cone_points(samples)
    phi = cone_phi(x, t)
    keep = phi >= 1e-6
    skipped = int(np.sum(~keep))
    x, t, phi = x[keep], t[keep], phi[keep]
    if not len(t):
        return 0.0, skipped
    grad = g.grad(x, t)[:, i - 1]
    if r == 1:
        lhs = -phi * grad
    else:
        hess = g.hess(x, t)[:, i - 1, i - 1]
        lhs = -x[:, i - 1] * grad + phi ** 2 * hess
    lifted = lift_field(g, d)
    if method == 'finite-difference':
        lifted = ScalarField(lifted.func, domain='surface',
                             differentiable=True)
    rhs = angular_derivative(lifted, i, d + 1, r, lift_points(x, t), t)
    return float(np.max(np.abs(lhs - rhs))), skipped


def cone_kfunctional_detail(f, w, r, h, p=2, candidates=None, jmax=None,
                            cutoff=None, **kwargs):
    """Candidate minimum of the four-term cone K-functional.

    Terms: distance, ``h^r ||phi^r d_t^r g||``, the angular term over
    ``i < j <= d`` and the ``(Phi d_i)^r`` term, all evaluated on the lift
    (``(-Phi d_i)^r g = D_{i,d+1}^r g~``). Candidates are surface fields on
    the lift; by default the lifted near-best polynomials of degree
    ``2^j``.
    """
    surface = w.surface_weight
    lifted = lift_field(f, w.d)
    if candidates is None:
        jmax = 4 if jmax is None else jmax
        candidates = [cone_projection(f, w, 2 ** k, cutoff=cutoff)
                      for k in range(jmax + 1)]
    inner, outer = cone_groups(w.d)
    return surface_kfunctional_detail(lifted, surface, r, h, p, candidates,
                                      groups=[inner, outer], **kwargs)


def cone_kfunctional(f, w, r, h, p=2, candidates=None, **kwargs):
    """Upper bound of ``K_r(f, h)_{p, W_gamma}``."""
    return cone_kfunctional_detail(f, w, r, h, p, candidates,
                                   **kwargs).value


def cone_best_approx(f, w, n, p=2, rules=None, cutoff=None):
    """``E_n(f)_{p, W_gamma}`` through the lift.

    For ``p != 2`` the surrogate ``||f - L_{n/2} f||_p`` is returned, with
    the kernel of ``cutoff``.
    """
    if p == 2:
        return BestApproximation(
            best_approx_l2(lift_field(f, w.d), w.surface_weight, n, rules),
            p, False)
    approx = cone_projection(f, w, n // 2, cutoff=cutoff)
    lifted = lift_field(f, w.d)
    measure = SurfaceMeasure(w.surface_weight, p=p)
    value = measure.norm(lifted(measure.x, measure.t) -
                         approx(measure.x, measure.t))
    return BestApproximation(value, p, True)


#
# Orthogonal basis of the cone for d = 2
#
def cone_basis_indices(n_max):
    """Indices ``(n, m, j, ell)`` of the cone basis with degree ``<= n_max``.

    ``m`` is the degree of the disk polynomial, ``j <= m/2`` its radial
    index and ``ell`` the circular harmonic of degree ``m - 2j``.
    """
    out = []
    for n in range(n_max + 1):
        for m in range(n + 1):
            for j in range(m // 2 + 1):
                size = 1 if m == 2 * j else 2
                out.extend((n, m, j, ell) for ell in range(size))
    return out


def cone_basis_eval(index, x, t):
    """Homogeneous part ``t^m P_j^{(-1/2, m-2j)}(2||u||^2-1) Y_{m-2j}(u)``.

    ``u = x/t`` and ``Y`` is the solid circular harmonic. The factor
    ``P_{n-m}^{(2m+1, gamma)}(1-2t)`` is applied by
    :func:`cone_basis_table`.
    """
    n, m, j, ell = index
    x = np.atleast_2d(np.asarray(x, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    u = x / np.where(t > 0, t, 1.0)[:, None]
    k = m - 2 * j
    radial = jacobi_table(JacobiParams(-0.5, k), j,
                          2 * np.sum(u * u, axis=1) - 1)[-1]
    return t ** m * radial * harmonic_basis(2, k, u)[:, ell]


def cone_basis_table(gamma, n_max, x, t):
    """Values of all cone basis elements with degree ``<= n_max``.

    :returns: ``(indices, array of shape (len(indices), N))``.
    """
    indices = cone_basis_indices(n_max)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    rows = []
    for index in indices:
        n, m = index[0], index[1]
        radial = jacobi_table(JacobiParams(2 * m + 1, gamma), n - m,
                              1 - 2 * t)[-1]
        rows.append(radial * cone_basis_eval(index, x, t))
    return indices, np.array(rows)


def cone_basis_kernel(w, n, a, b, cutoff=None):
    """Localized kernel from the cone basis, unit-mass normalization.

    Norms are computed by the direct cone rule. Equals half of
    :func:`cone_kernel_eval`.
    """
    if w.d != 2:
        raise DimensionError(w.d, (2,))
    top = max(2 * n - 1, 0)
    cutoff = CutoffSpec(cutoff or config_value('CONIC_APPROX_CUTOFF',
                                               'smooth-exponential-bump'))
    if n == 0:
        factors = np.ones(1)
    else:
        factors = cutoff_eval(cutoff, np.arange(top + 1) / float(n))
    rx, rt, weights = cone_rule(w, t_nodes=top + 8, radial_nodes=top + 8,
                                angles=2 * top + 8)
    indices, table = cone_basis_table(w.gamma, top, rx, rt)
    norms = (table ** 2).dot(weights)
    x, t, scalar = _cone_points(a)
    y, s, _ = _cone_points(b)
    _, ta = cone_basis_table(w.gamma, top, x, t)
    _, tb = cone_basis_table(w.gamma, top, y, s)
    scale = np.array([factors[index[0]] for index in indices]) / norms
    return _result(np.sum(scale[:, None] * ta * tb, axis=0), scalar)


def cone_sample_points(d, count, rng, t_range=(0.05, 0.95)):
    """Random cone points as ``(x, t)`` arrays."""
    t = rng.uniform(t_range[0], t_range[1], count)
    direction = rng.standard_normal((count, d))
    direction /= np.linalg.norm(direction, axis=1)[:, None]
    rho = np.sqrt(rng.uniform(0.0, 1.0, count)) * t
    return rho[:, None] * direction, t


def even_extension_residual(f, d, count, rng):
    """Largest ``|f~(X, t) - f~(X_*, t)|`` over random cone points."""
    lifted = lift_field(f, d)
    x, t = cone_sample_points(d, count, rng, (0.0, 1.0))
    return float(np.max(np.abs(lifted(lift_points(x, t), t) -
                               lifted(lift_points(x, t, -1), t))))
