# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sphere harmonics, rotations and moduli tests."""

import numpy as np
import pytest

from conic_approx.errors import BasisIndexError, CapabilityError, \
    ConfigurationError, DimensionError, ParameterDomainError
from conic_approx.fields import ScalarField
from conic_approx.sphere import RotationSpec, UnitVector, addition_kernel, \
    angular_derivative, euler_difference, harmonic_basis, \
    harmonic_dimension, laplace_beltrami, rotate, rotate_points, \
    sph_harmonic_eval, sphere_kfunctional, sphere_modulus, \
    sphere_projection, spherical_quadrature, surface_area


def _random_unit(rng, count, d):
    xi = rng.standard_normal((count, d))
    return xi / np.linalg.norm(xi, axis=1)[:, None]


def test_counts():
    """Surface areas and harmonic dimensions."""
    assert surface_area(2) == pytest.approx(2 * np.pi)
    assert surface_area(3) == pytest.approx(4 * np.pi)
    assert surface_area(4) == pytest.approx(2 * np.pi ** 2)
    assert harmonic_dimension(2, 0) == 1
    assert harmonic_dimension(2, 5) == 2
    assert harmonic_dimension(3, 4) == 9
    assert harmonic_dimension(4, 3) == 16
    assert harmonic_dimension(3, -1) == 0


@pytest.mark.parametrize('d,top', [(2, 6), (3, 5), (4, 4)])
def test_orthonormality(d, top):
    """Harmonics are orthonormal for the surface measure."""
    rule = spherical_quadrature(d, 2 * top)
    assert np.sum(rule.weights) == pytest.approx(surface_area(d))
    basis = np.column_stack([harmonic_basis(d, m, rule.points)
                             for m in range(top + 1)])
    assert basis.shape[1] == sum(harmonic_dimension(d, m)
                                 for m in range(top + 1))
    gram = (basis * rule.weights[:, None]).T.dot(basis)
    assert np.allclose(gram, np.eye(len(gram)), atol=1e-10)


@pytest.mark.parametrize('d', [2, 3, 4])
def test_addition_formula(d, rng):
    """Sums of products depend on the inner product only."""
    xi, eta = _random_unit(rng, 10, d), _random_unit(rng, 10, d)
    for m in range(4):
        direct = np.sum(harmonic_basis(d, m, xi) * harmonic_basis(d, m, eta),
                        axis=1)
        assert np.allclose(direct,
                           addition_kernel(d, m, np.sum(xi * eta, axis=1)))
    assert addition_kernel(d, 3, 1.0) == pytest.approx(
        harmonic_dimension(d, 3) / surface_area(d))


@pytest.mark.parametrize('d', [2, 3, 4])
def test_laplace_beltrami(d, rng):
    """Harmonics are eigenfunctions with eigenvalue -m(m+d-2)."""
    xi = _random_unit(rng, 8, d)
    for m in (1, 2, 3):
        f = ScalarField(lambda x, m=m: harmonic_basis(d, m, x)[:, -1],
                        domain='sphere', degree=m)
        assert np.allclose(laplace_beltrami(f, d, xi),
                           -m * (m + d - 2) * f(xi), atol=1e-9)


def test_points_and_rotations():
    """Unit vectors, rotation specs and plane rotations."""
    assert np.allclose(UnitVector([3.0, 4.0]).coords, [0.6, 0.8])
    assert UnitVector([0, 0, 2]).d == 3
    with pytest.raises(ParameterDomainError):
        UnitVector([0.0, 0.0])
    with pytest.raises(ParameterDomainError):
        RotationSpec(2, 1, 0.3)
    with pytest.raises(ParameterDomainError):
        rotate(RotationSpec(1, 3, 0.3), [1.0, 0.0])
    assert np.allclose(rotate(RotationSpec(1, 2, np.pi / 2), [1.0, 0.0, 0.0]),
                       [0.0, 1.0, 0.0])
    x = np.array([[0.6, 0.0, 0.8]])
    assert np.allclose(np.linalg.norm(rotate_points(x, 1, 3, 1.1), axis=1),
                       1.0)


def test_sph_harmonic_eval():
    """Single harmonics and their index range."""
    xi = UnitVector([1.0, 0.0])
    assert sph_harmonic_eval(2, 1, 1, xi) == pytest.approx(
        1 / np.sqrt(np.pi))
    with pytest.raises(BasisIndexError):
        sph_harmonic_eval(2, 1, 3, xi)
    with pytest.raises(DimensionError):
        harmonic_basis(5, 1, np.eye(5))


def test_euler_difference():
    """First difference of a coordinate."""
    f = ScalarField(lambda x: x[:, 0], domain='sphere')
    spec = RotationSpec(1, 2, 0.3)
    assert euler_difference(f, spec, 1, UnitVector([1.0, 0.0, 0.0])) == \
        pytest.approx(1 - np.cos(0.3))
    constant = ScalarField(lambda x: 2.0, domain='sphere')
    assert euler_difference(constant, spec, 2, [0.0, 1.0, 0.0]) == 0.0
    with pytest.raises(ParameterDomainError):
        euler_difference(f, spec, 0, [1.0, 0.0, 0.0])


def test_angular_derivative(rng):
    """Exact, analytic and finite-difference angular derivatives agree."""
    xi = _random_unit(rng, 6, 3)

    def func(x):
        return x[:, 0] * x[:, 1]

    def grad(x):
        return np.column_stack([x[:, 1], x[:, 0], np.zeros(len(x))])

    exact = angular_derivative(ScalarField(func, domain='sphere', degree=2),
                               1, 2, 1, xi)
    analytic = angular_derivative(ScalarField(func, domain='sphere',
                                              grad=grad), 1, 2, 1, xi)
    numeric = angular_derivative(ScalarField(func, domain='sphere',
                                             differentiable=True),
                                 1, 2, 1, xi)
    assert np.allclose(exact, xi[:, 0] ** 2 - xi[:, 1] ** 2)
    assert np.allclose(analytic, exact)
    assert np.allclose(numeric, exact, atol=1e-8)
    with pytest.raises(CapabilityError):
        angular_derivative(ScalarField(func, domain='sphere'), 1, 2, 1, xi)
    with pytest.raises(ParameterDomainError):
        angular_derivative(ScalarField(func, domain='sphere', degree=2),
                           1, 2, 3, xi)


def test_projection_and_moduli(app, rng):
    """Projections reproduce harmonics; constants have no modulus."""
    xi = _random_unit(rng, 5, 3)
    f = ScalarField(lambda x: harmonic_basis(3, 2, x)[:, 1],
                    domain='sphere', degree=2)
    projected = sphere_projection(f, 3, 2)
    assert np.allclose(projected(xi), f(xi))
    assert projected.degree == 2
    smoothed = sphere_projection(f, 3, 2, cutoff='raised-cosine')
    assert smoothed.degree == 3

    constant = ScalarField(lambda x: 1.5, domain='sphere')
    assert sphere_modulus(constant, 3, 1, 0.2) < 1e-12
    assert sphere_modulus(f, 3, 1, 0.4) >= sphere_modulus(f, 3, 1, 0.1)
    assert sphere_kfunctional(constant, 3, 1, 0.2, jmax=1) < 1e-10
    with pytest.raises(ParameterDomainError):
        sphere_modulus(f, 3, 1, 0.0)


def test_kfunctional_candidates(app):
    """Empty candidate lists are a configuration error."""
    constant = ScalarField(lambda x: 1.5, domain='sphere')
    with pytest.raises(ConfigurationError):
        sphere_kfunctional(constant, 3, 1, 0.2, candidates=[])
    with pytest.raises(ParameterDomainError):
        ScalarField(lambda x: 1.5, domain='ball')
