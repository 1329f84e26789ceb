# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Jacobi polynomial and quadrature tests."""

import numpy as np
import pytest

from conic_approx.errors import ParameterDomainError
from conic_approx.jacobi import JacobiParams, gauss_jacobi_rule, \
    jacobi_derivative_table, jacobi_endpoint, jacobi_eval, jacobi_norms, \
    jacobi_table, zn_kernel

LEGENDRE = JacobiParams(0, 0)


def test_params_validation():
    """Exponents must exceed -1."""
    with pytest.raises(ParameterDomainError):
        JacobiParams(-1, 0)
    params = JacobiParams(1, 2.5)
    assert params.swapped == (2.5, 1.0)
    assert params.shifted(2) == (3.0, 4.5)
    assert JacobiParams(1, 0).normalization == pytest.approx(2.0)
    assert LEGENDRE.mass('[-1,1]') == pytest.approx(2.0)


def test_low_degrees():
    """Closed forms of the first polynomials."""
    t = np.linspace(-1, 1, 7)
    assert np.allclose(jacobi_eval(LEGENDRE, 2, t), (3 * t ** 2 - 1) / 2)
    params = JacobiParams(0.5, 2.0)
    assert np.allclose(jacobi_eval(params, 1, t),
                       1.5 + 4.5 * (t - 1) / 2)
    assert jacobi_table(params, 3, t).shape == (4, 7)
    assert jacobi_eval(params, 0, 0.3) == 1.0


def test_endpoint():
    """P_n(1) = (alpha+1)_n / n!."""
    params = JacobiParams(1.5, 0.2)
    for n in range(10):
        assert jacobi_eval(params, n, 1.0) == pytest.approx(
            jacobi_endpoint(params, n), rel=1e-12)
    with pytest.raises(ParameterDomainError):
        jacobi_endpoint(params, -1)


def test_norms():
    """Normalized squared norms; h_0 is exactly 1."""
    h = jacobi_norms(LEGENDRE, 5)
    assert h[0] == 1.0
    assert np.allclose(h, 1.0 / (2 * np.arange(6) + 1))

    params = JacobiParams(2.0, 0.5)
    rule = gauss_jacobi_rule(params, 20)
    table = jacobi_table(params, 8, rule.nodes)
    gram = (table * rule.normalized_weights).dot(table.T)
    assert np.allclose(gram, np.diag(jacobi_norms(params, 8)), atol=1e-12)


def test_zn_kernel():
    """Z_n(1) = P_n(1)^2 / h_n."""
    for n in range(6):
        assert zn_kernel(LEGENDRE, n, 1.0) == pytest.approx(2 * n + 1)


def test_derivative_table():
    """Derivatives through the shifted family."""
    t = np.linspace(-1, 1, 5)
    table = jacobi_derivative_table(LEGENDRE, 3, t, 1)
    assert np.allclose(table[0], 0.0)
    assert np.allclose(table[1], 1.0)
    assert np.allclose(table[2], 3 * t)
    assert np.allclose(jacobi_derivative_table(LEGENDRE, 1, t, 2), 0.0)


def test_gauss_legendre():
    """Golub-Welsch agrees with numpy's Gauss-Legendre rule."""
    rule = gauss_jacobi_rule(LEGENDRE, 12)
    nodes, weights = np.polynomial.legendre.leggauss(12)
    assert np.allclose(rule.nodes, nodes, atol=1e-13)
    assert np.allclose(rule.weights, weights, atol=1e-13)
    assert rule.exact_degree == 23
    assert rule.mass == pytest.approx(2.0)


def test_unit_interval_rule():
    """Rules for t^a (1-t)^b on [0, 1]."""
    params = JacobiParams(1, 0)
    rule = gauss_jacobi_rule(params, 4, '[0,1]')
    assert np.all(np.diff(rule.nodes) > 0)
    assert 0 < rule.nodes[0] and rule.nodes[-1] < 1
    assert rule.mass == pytest.approx(0.5)
    assert rule.integrate(rule.nodes) == pytest.approx(1.0 / 3)
    assert np.sum(rule.normalized_weights) == pytest.approx(1.0)
    assert rule.matches(params, '[0,1]')
    assert not rule.matches(params, '[-1,1]')
    assert not rule.nodes.flags.writeable


def test_rule_validation():
    """Invalid sizes and intervals are rejected."""
    with pytest.raises(ParameterDomainError):
        gauss_jacobi_rule(LEGENDRE, 0)
    with pytest.raises(ParameterDomainError):
        gauss_jacobi_rule(LEGENDRE, 4, '[0,2]')
    single = gauss_jacobi_rule(JacobiParams(1, 1), 1)
    assert single.nodes[0] == pytest.approx(0.0)
