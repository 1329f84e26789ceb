# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Interval operator, modulus and K-functional tests."""

import numpy as np
import pytest

from conic_approx.errors import ConfigurationError, DegenerateInputError, \
    ParameterDomainError
from conic_approx.fields import ScalarField
from conic_approx.interval import IntervalKernelEvaluator, JacobiSeries, \
    dt_difference, dt_kfunctional, dt_kfunctional_detail, dt_modulus, \
    dt_modulus_report, interval_distance, jacobi_kernel_integral_check, \
    localized_kernel_eval, localized_operator_apply, main_part_interval, \
    phi, report_total
from conic_approx.jacobi import JacobiParams, gauss_jacobi_rule

PARAMS = JacobiParams(1.0, 0.5)


def test_distance():
    """The interval distance and phi."""
    assert interval_distance(0.3, 0.3) == pytest.approx(0.0, abs=1e-7)
    assert interval_distance(0.0, 1.0) == pytest.approx(np.pi / 2)
    assert phi(0.25) == pytest.approx(np.sqrt(0.1875))
    assert phi(0.0) == 0.0
    with pytest.raises(ParameterDomainError):
        interval_distance(-0.5, 0.2)


def test_main_part_interval(app):
    """The main part shrinks with r h."""
    assert main_part_interval(1, 0.1) == pytest.approx((0.12, 0.88))
    assert main_part_interval(2, 0.1, constant=1.0) == pytest.approx(
        (0.04, 0.96))


def test_series_derivative():
    """Series differentiate exactly."""
    series = JacobiSeries(JacobiParams(0, 0), [0.0, 1.0])
    t = np.linspace(0, 1, 5)
    assert np.allclose(series(t), 1 - 2 * t)
    assert np.allclose(series.derivative(1)(t), -2.0)
    assert np.allclose(series.derivative(2)(t), 0.0)
    assert series.has_derivative(5)


def test_reproduction(rng):
    """L_n reproduces polynomials of degree n."""
    for n in (1, 3, 6):
        f = JacobiSeries(PARAMS, rng.standard_normal(n + 1))
        ev = IntervalKernelEvaluator(PARAMS, n)
        t = np.linspace(0, 1, 17)
        assert np.allclose(ev.project(f)(t), f(t), atol=1e-10)
        assert ev.degree == 2 * n
        assert ev.coefficients[-1] == 0.0


def test_kernel_symmetry():
    """The kernel is symmetric."""
    ev = IntervalKernelEvaluator(PARAMS, 5, 'raised-cosine')
    s = np.linspace(0, 1, 6)
    matrix = ev.kernel(s, s)
    assert np.allclose(matrix, matrix.T)
    assert localized_kernel_eval(ev, 0.2, 0.7) == pytest.approx(
        localized_kernel_eval(ev, 0.7, 0.2))
    assert isinstance(localized_kernel_eval(ev, 0.2, 0.7), float)
    assert np.allclose(localized_kernel_eval(ev, s, s[::-1]),
                       matrix[:, ::-1])


def test_rule_mismatch():
    """Rules for another weight are refused."""
    ev = IntervalKernelEvaluator(PARAMS, 4)
    rule = gauss_jacobi_rule(JacobiParams(0, 0), 40, '[0,1]')
    with pytest.raises(ConfigurationError):
        localized_operator_apply(ev, lambda t: t, 0.5, rule)
    with pytest.raises(ParameterDomainError):
        IntervalKernelEvaluator(PARAMS, -1)


def test_dt_difference():
    """Differences of linear functions."""
    f = ScalarField(lambda t: 3 * t + 1, domain='interval')
    t = np.array([0.0, 0.3, 0.5, 0.9])
    first = dt_difference(f, t, 0.1, 1)
    assert np.allclose(first[1:], 0.3 * phi(t[1:]))
    assert first[0] == 0.0
    assert np.allclose(dt_difference(f, t, 0.1, 2), 0.0)


def test_dt_modulus(app):
    """Moduli of low degree polynomials and monotonicity in h."""
    linear = ScalarField(lambda t: t, domain='interval')
    assert dt_modulus(linear, 2, 0.2, weight=PARAMS) < 1e-12
    assert dt_modulus(linear, 1, 0.2, weight=PARAMS) > 0

    rough = ScalarField(lambda t: np.abs(t - 0.5) ** 1.5, domain='interval')
    report = dt_modulus_report(rough, 1, [0.4, 0.1, 0.2], weight=PARAMS)
    assert report.h_values == [0.1, 0.2, 0.4]
    values = report.component_values['radial']
    assert np.all(np.diff(values) >= 0)
    assert np.allclose(report_total(report), values)
    single = dt_modulus_report(rough, 1, [0.4], weight=PARAMS)
    assert dt_modulus(rough, 1, 0.4, weight=PARAMS) == pytest.approx(
        single.component_values['radial'][0])


def test_dt_modulus_errors(app):
    """Invalid increments and empty main parts."""
    f = ScalarField(lambda t: t, domain='interval')
    with pytest.raises(ParameterDomainError):
        dt_modulus(f, 1, 0.0)
    with pytest.raises(ConfigurationError):
        dt_modulus(f, 1, 0.1, main_part=True)
    with pytest.raises(DegenerateInputError):
        dt_modulus(f, 1, 0.5, weight=PARAMS, main_part=True)


def test_kfunctional(app):
    """A candidate equal to f costs only its smoothness term."""
    f = JacobiSeries(PARAMS, [1.0, 0.5, -0.25])
    other = JacobiSeries(PARAMS, [0.0])
    result = dt_kfunctional_detail(f, 1, 0.1, 2, PARAMS,
                                   candidates=[other, f])
    assert result.index == 1
    assert result.terms[0] == pytest.approx(0.0, abs=1e-12)
    assert result.value == pytest.approx(sum(result.terms))
    with pytest.raises(ConfigurationError):
        dt_kfunctional_detail(f, 1, 0.1, 2, PARAMS, candidates=[])


def test_kernel_integral_bound(app):
    """Weighted integrals of |L_n| stay bounded."""
    report = jacobi_kernel_integral_check(JacobiParams(0, 0),
                                          n_values=(4, 8, 16), s_points=21)
    assert report.n_values == [4, 8, 16]
    assert all(np.isfinite(report.values))
    assert report.growth < 3
    with pytest.raises(ParameterDomainError):
        jacobi_kernel_integral_check(JacobiParams(-0.8, 0))


def test_kfunctional_increments(app):
    """The K-functional grows with the increment and vanishes on lines."""
    f = ScalarField(lambda t: np.exp(-2 * t), domain='interval')
    small = dt_kfunctional(f, 2, 0.05, 2, PARAMS, jmax=3)
    large = dt_kfunctional(f, 2, 0.5, 2, PARAMS, jmax=3)
    assert 0 < small <= large + 1e-12
    line = JacobiSeries(PARAMS, [1.0, 2.0])
    assert dt_kfunctional(line, 2, 0.5, 2, PARAMS, jmax=2) < 1e-8
