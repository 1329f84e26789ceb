# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Solid cone and lift tests."""

import numpy as np
import pytest

from conic_approx.cone import ConePoint, ConeWeight, cone_basis_indices, \
    cone_basis_kernel, cone_best_approx, cone_dimension, \
    cone_direct_integrate, cone_integrate, cone_kernel_eval, \
    cone_kfunctional, cone_modulus, cone_modulus_report, \
    cone_nearbest_apply, cone_phi, cone_sample_points, \
    even_extension_residual, lift, lift_field, lift_points, \
    phi_derivative_identity_check, restrict_field
from conic_approx.contrib.suite import coordinate, random_cone_polynomial, \
    smooth
from conic_approx.errors import CapabilityError, ConfigurationError, \
    DimensionError, ParameterDomainError
from conic_approx.fields import ScalarField
from conic_approx.surface import SurfaceKernelEvaluator, SurfaceWeight

WEIGHT = ConeWeight(gamma=0.5)


def test_weight_and_points():
    """Cone weights, points and their lift."""
    assert WEIGHT.surface_weight == SurfaceWeight(0.5, 3)
    with pytest.raises(DimensionError):
        ConeWeight(0.0, 3)
    with pytest.raises(ParameterDomainError):
        ConeWeight(-1.0)
    with pytest.raises(ParameterDomainError):
        ConePoint([0.8, 0.0], 0.5)
    p = ConePoint([0.3, 0.4], 1.0)
    assert p.phi == pytest.approx(np.sqrt(0.75))
    lifted = lift(p)
    assert np.linalg.norm(lifted.X) == pytest.approx(1.0)
    assert lifted.surface_point().d == 3
    assert lift(p, -1).X[-1] == pytest.approx(-lifted.X[-1])
    with pytest.raises(ParameterDomainError):
        lift(p, 0)


def test_lift_field(rng):
    """Lifted fields are even and restrict back."""
    f = smooth('cone')
    assert even_extension_residual(f, 2, 50, rng) == 0.0
    x, t = cone_sample_points(2, 10, rng)
    X = lift_points(x, t)
    assert np.allclose(np.linalg.norm(X, axis=1), t)
    assert np.allclose(cone_phi(x, t), X[:, 2])
    assert np.allclose(restrict_field(lift_field(f))(x, t), f(x, t))
    assert lift_field(f).grad(X, t).shape == (10, 3)


def test_dimension():
    """Basis counts on the cone."""
    assert cone_dimension(3) == 20
    assert len(cone_basis_indices(3)) == 20
    assert cone_dimension(-1) == 0


def test_integrals(rng):
    """Lifted and direct cone rules agree with unit mass."""
    assert cone_integrate(lambda x, t: 1.0, WEIGHT) == pytest.approx(1.0)
    assert cone_direct_integrate(lambda x, t: 1.0, WEIGHT) == \
        pytest.approx(1.0)
    q = random_cone_polynomial(3, rng)
    assert cone_integrate(q, WEIGHT) == pytest.approx(
        cone_direct_integrate(q, WEIGHT), abs=1e-9)


def test_reproduction(rng):
    """The lifted operator reproduces cone polynomials."""
    q = random_cone_polynomial(2, rng)
    x, t = cone_sample_points(2, 8, rng)
    approx = cone_nearbest_apply(q, WEIGHT, 2, (x, t))
    assert np.allclose(approx, q(x, t), atol=1e-9)


def test_kernels(rng):
    """The reflected kernel is symmetric and matches the cone basis."""
    ev = SurfaceKernelEvaluator(WEIGHT.surface_weight, 2)
    a, b = cone_sample_points(2, 5, rng), cone_sample_points(2, 5, rng)
    kernel = cone_kernel_eval(ev, a, b)
    assert np.allclose(kernel, cone_kernel_eval(ev, b, a))
    direct = cone_basis_kernel(WEIGHT, 2, a, b)
    assert np.allclose(kernel, 2 * direct, rtol=1e-7,
                       atol=1e-7 * np.max(np.abs(kernel)))
    with pytest.raises(ConfigurationError):
        cone_kernel_eval(SurfaceKernelEvaluator(SurfaceWeight(0.5, 2), 2),
                         a, b)


def test_phi_derivative_identity(rng):
    """(-Phi d_i)^r equals the lifted angular derivative."""
    x, t = cone_sample_points(2, 10, rng)
    first, skipped = phi_derivative_identity_check(coordinate('cone'), 1, 1,
                                                   (x, t))
    assert first < 1e-12
    assert skipped == 0
    second, _ = phi_derivative_identity_check(smooth('cone'), 1, 2, (x, t))
    assert second < 1e-4
    with pytest.raises(CapabilityError):
        phi_derivative_identity_check(
            ScalarField(lambda x, t: t, domain='cone'), 1, 1, (x, t))
    with pytest.raises(ParameterDomainError):
        phi_derivative_identity_check(coordinate('cone'), 1, 3, (x, t))


def test_modulus(app):
    """Cone moduli carry three components."""
    f = smooth('cone')
    report = cone_modulus_report(f, WEIGHT, 1, [0.05, 0.1])
    assert set(report.component_values) == {'a', 'b', 'c'}
    assert all(v > 0 for v in report.component_values['c'])
    with pytest.raises(ParameterDomainError):
        cone_modulus_report(f, WEIGHT, 1, [0.1], convention='disk')
    with pytest.raises(ParameterDomainError):
        cone_modulus(f, WEIGHT, 1, 0.0)
    constant = ScalarField(lambda x, t: 3.0, domain='cone')
    flat = cone_modulus(constant, WEIGHT, 2, 0.1, convention='surface')
    assert max(max(v) for v in flat.component_values.values()) < 1e-12


def test_best_approx(app, rng):
    """Cone polynomials are their own best approximation."""
    q = random_cone_polynomial(2, rng)
    best = cone_best_approx(q, WEIGHT, 2)
    assert not best.surrogate
    assert best.value < 1e-6
    rough = cone_best_approx(smooth('cone'), WEIGHT, 4, p=np.inf)
    assert rough.surrogate
    assert rough.value >= 0


def test_kfunctional(app):
    """The cone K-functional grows with the increment."""
    f = smooth('cone')
    small = cone_kfunctional(f, WEIGHT, 1, 0.05, jmax=2)
    large = cone_kfunctional(f, WEIGHT, 1, 0.5, jmax=2)
    assert 0 < small <= large + 1e-12
