# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Jacobi polynomials, their norms and Gauss-Jacobi quadrature.

Polynomials are evaluated with the forward three-term recurrence. Two
interval conventions are used throughout the package:

* ``'[-1,1]'``: weight ``(1-t)^alpha (1+t)^beta`` on ``[-1, 1]``;
* ``'[0,1]'``: weight ``t^alpha (1-t)^beta`` on ``[0, 1]``, reached through
  the map ``t -> 1 - 2t`` so that ``P_k(1 - 2t)`` are the orthogonal
  polynomials.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal
from scipy.special import betaln

from .errors import NumericalFailureError, ParameterDomainError
from .utils import pochhammer

INTERVALS = ('[-1,1]', '[0,1]')


class JacobiParams(namedtuple('JacobiParams', ['alpha', 'beta'])):
    """Exponent pair ``(alpha, beta)`` of a Jacobi weight."""

    __slots__ = ()

    def __new__(cls, alpha, beta):
        """Validate integrability of the weight."""
        alpha, beta = float(alpha), float(beta)
        if not (alpha > -1 and beta > -1):
            raise ParameterDomainError(
                'Jacobi exponents must exceed -1, got ({}, {})'.format(
                    alpha, beta))
        return super(JacobiParams, cls).__new__(cls, alpha, beta)

    @property
    def swapped(self):
        """Parameters with ``alpha`` and ``beta`` exchanged."""
        return JacobiParams(self.beta, self.alpha)

    def shifted(self, r):
        """Parameters ``(alpha + r, beta + r)`` of the r-th derivative."""
        return JacobiParams(self.alpha + r, self.beta + r)

    @property
    def normalization(self):
        """``c_{alpha,beta}``: inverse mass of ``t^alpha (1-t)^beta``."""
        return float(np.exp(-betaln(self.alpha + 1, self.beta + 1)))

    @property
    def interval_normalization(self):
        """``c'_{alpha,beta}``: inverse mass of the ``[-1,1]`` weight."""
        return self.normalization * 2.0 ** (-self.alpha - self.beta - 1)

    def mass(self, interval='[-1,1]'):
        """Total mass of the weight in the given interval convention."""
        if interval == '[0,1]':
            return 1.0 / self.normalization
        return 1.0 / self.interval_normalization

    def weight(self, t, interval='[0,1]'):
        """Evaluate the (unnormalized) weight function."""
        t = np.asarray(t, dtype=float)
        if interval == '[0,1]':
            return t ** self.alpha * (1 - t) ** self.beta
        return (1 - t) ** self.alpha * (1 + t) ** self.beta


def _check_degree(n):
    if n < 0 or int(n) != n:
        raise ParameterDomainError('Degree must be a nonnegative integer.')
    return int(n)


def jacobi_table(params, n, t):
    """Values ``P_0(t), ..., P_n(t)`` stacked along the first axis."""
    n = _check_degree(n)
    a, b = params
    t = np.asarray(t, dtype=float)
    out = np.empty((n + 1,) + t.shape)
    out[0] = 1.0
    if n >= 1:
        out[1] = (a + 1) + (a + b + 2) * (t - 1) / 2
    for k in range(1, n):
        s = 2 * k + a + b
        lead = 2 * (k + 1) * (k + a + b + 1) * s
        slope = (s + 1) * (s + 2) * s
        shift = (s + 1) * (a * a - b * b)
        back = 2 * (k + a) * (k + b) * (s + 2)
        out[k + 1] = ((slope * t + shift) * out[k] - back * out[k - 1]) / lead
    return out


def jacobi_eval(params, n, t):
    """Evaluate ``P_n^{(alpha,beta)}(t)``."""
    value = jacobi_table(params, n, t)[-1]
    return float(value) if np.ndim(value) == 0 else value


def jacobi_endpoint(params, n):
    """``P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!``."""
    n = _check_degree(n)
    value = 1.0
    for j in range(n):
        value *= (params.alpha + 1 + j) / (j + 1)
    return value


def jacobi_norms(params, n):
    """``h_0, ..., h_n`` for the normalized weight ``c' (1-t)^a (1+t)^b``.

    The same numbers are the squared norms of ``P_k(1 - 2t)`` for the
    normalized weight ``c t^a (1-t)^b`` on ``[0, 1]``.
    """
    n = _check_degree(n)
    a, b = params
    out = np.empty(n + 1)
    out[0] = 1.0
    ratio = 1.0
    for k in range(1, n + 1):
        j = k - 1
        ratio *= (a + 1 + j) * (b + 1 + j) / ((1 + j) * (a + b + 2 + j))
        out[k] = ratio * (a + b + k + 1) / (a + b + 2 * k + 1)
    return out


def jacobi_norm(params, n):
    """Closed form of ``h_n^{(alpha,beta)}``; ``h_0`` is exactly 1."""
    return float(jacobi_norms(params, n)[-1])


def zn_table(params, n, t):
    """``Z_0(t), ..., Z_n(t)`` with ``Z_k = P_k(t) P_k(1) / h_k``."""
    table = jacobi_table(params, n, t)
    ends = jacobi_table(params, n, 1.0)
    scale = ends / jacobi_norms(params, n)
    return table * scale.reshape((-1,) + (1,) * (table.ndim - 1))


def zn_kernel(params, n, t):
    """Evaluate ``Z_n^{(alpha,beta)}(t)``."""
    n = _check_degree(n)
    value = (jacobi_table(params, n, t)[-1] * jacobi_endpoint(params, n) /
             jacobi_norm(params, n))
    return float(value) if np.ndim(value) == 0 else value


def jacobi_derivative_table(params, n, t, r):
    """r-th derivatives of ``P_0, ..., P_n`` at ``t`` (``[-1,1]`` variable).

    Uses ``d/dt P_k^{(a,b)} = (k+a+b+1)/2 P_{k-1}^{(a+1,b+1)}``.
    """
    t = np.asarray(t, dtype=float)
    out = np.zeros((n + 1,) + t.shape)
    if r == 0:
        return jacobi_table(params, n, t)
    if n < r:
        return out
    lower = jacobi_table(params.shifted(r), n - r, t)
    for k in range(r, n + 1):
        out[k] = pochhammer(k + params.alpha + params.beta + 1, r) / \
            2.0 ** r * lower[k - r]
    return out


class QuadratureRule(namedtuple(
        'QuadratureRule',
        ['nodes', 'weights', 'exact_degree', 'params', 'interval'])):
    """Nodes and positive weights with a declared exactness degree."""

    __slots__ = ()

    @property
    def mass(self):
        """Sum of the weights."""
        return float(np.sum(self.weights))

    @property
    def normalized_weights(self):
        """Weights rescaled to unit total mass."""
        return self.weights / self.mass

    def integrate(self, values):
        """Integrate sampled values (last axis runs over the nodes)."""
        return np.dot(np.asarray(values, dtype=float), self.weights)

    def matches(self, params, interval):
        """Whether the rule belongs to the given weight and interval."""
        return (self.interval == interval and
                np.allclose(self.params, params, rtol=0, atol=1e-14))


def _recurrence(params, num_nodes):
    """Monic recurrence coefficients of the ``[-1,1]`` Jacobi weight."""
    a, b = params
    ab = a + b
    diag = np.empty(num_nodes)
    diag[0] = (b - a) / (ab + 2)
    k = np.arange(1, num_nodes, dtype=float)
    diag[1:] = (b * b - a * a) / ((2 * k + ab) * (2 * k + ab + 2))
    off = np.empty(num_nodes - 1)
    if num_nodes > 1:
        off[0] = 4 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
        k = np.arange(2, num_nodes, dtype=float)
        off[1:] = (4 * k * (k + a) * (k + b) * (k + ab) /
                   ((2 * k + ab) ** 2 * (2 * k + ab + 1) * (2 * k + ab - 1)))
    return diag, np.sqrt(off)


def gauss_jacobi_rule(params, num_nodes, interval='[-1,1]'):
    """Gauss-Jacobi rule by the Golub-Welsch eigenvalue method.

    :param params: :class:`JacobiParams` of the weight.
    :param num_nodes: number of nodes, at least 1.
    :param interval: ``'[-1,1]'`` for ``(1-t)^a (1+t)^b`` or ``'[0,1]'``
        for ``t^a (1-t)^b``.
    :returns: a :class:`QuadratureRule` exact up to ``2 num_nodes - 1``.
    """
    if num_nodes < 1 or int(num_nodes) != num_nodes:
        raise ParameterDomainError('A rule needs at least one node.')
    if interval not in INTERVALS:
        raise ParameterDomainError('Unknown interval {}'.format(interval))
    num_nodes = int(num_nodes)
    mass = params.mass('[-1,1]')
    diag, off = _recurrence(params, num_nodes)
    if num_nodes == 1:
        nodes, weights = diag.copy(), np.array([mass])
    else:
        try:
            nodes, vectors = eigh_tridiagonal(diag, off)
        except (LinAlgError, ValueError) as exc:
            raise NumericalFailureError(
                'Golub-Welsch eigen-solve failed: {}'.format(exc))
        weights = mass * vectors[0] ** 2

    if interval == '[0,1]':
        nodes = ((1 - nodes) / 2)[::-1]
        weights = (weights * 2.0 ** (-params.alpha - params.beta - 1))[::-1]
        lo, hi = 0.0, 1.0
    else:
        lo, hi = -1.0, 1.0

    if (np.any(np.diff(nodes) <= 0) or nodes[0] <= lo or nodes[-1] >= hi or
            np.any(weights <= 0) or not np.all(np.isfinite(weights))):
        raise NumericalFailureError(
            'Invalid Gauss-Jacobi rule for {} with {} nodes'.format(
                tuple(params), num_nodes))
    total = params.mass(interval)
    if abs(weights.sum() - total) > 1e-12 * total * max(1, num_nodes / 64.):
        raise NumericalFailureError('Quadrature mass mismatch.')
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights,
                          exact_degree=2 * num_nodes - 1,
                          params=params, interval=interval)
