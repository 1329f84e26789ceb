# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Check registry and check function tests."""

import mock
import numpy as np
import pytest

from conic_approx import current_approx
from conic_approx.checks import CheckRecord, bernstein_check, \
    commutation_check_record, cone_lift_check, corollary_check, \
    direct_estimate_check, equivalence_check, generator_operator_check, \
    interval_equivalence_check, interval_operator_check, interval_params, \
    inverse_estimate_check, kernel_backends_check, kernel_bounds_check, \
    localization_check, modulus_properties_check, spectral_eigen_check, \
    stability_check, surface_weight, theta_refinement_check, \
    well_posedness_check
from conic_approx.experiments import ExperimentConfig, run_check
from conic_approx.jacobi import JacobiParams
from conic_approx.surface import SurfaceKernelEvaluator, SurfaceWeight, \
    bernstein_ratio, commutation_check, gn_apply, sample_points, \
    stability_report


def test_domain_helpers(experiment_config, cone_config):
    """Weights per domain."""
    assert surface_weight(experiment_config) == SurfaceWeight(1.0, 2)
    assert surface_weight(cone_config) == SurfaceWeight(1.0, 3)
    assert interval_params(experiment_config) == JacobiParams(0, 1.0)


def test_registry(app):
    """Every default check of every domain is registered."""
    for domain in ('interval', 'surface', 'cone'):
        for name in current_approx.verify_checks(domain):
            assert name in current_approx.checks
    assert 'cone-lift' in current_approx.verify_checks('cone')
    assert 'cone-lift' not in current_approx.verify_checks('surface')


@pytest.mark.parametrize('name', [
    'jacobi-identities',
    'cutoff-flatness',
    'sphere-harmonics',
    'surface-bookkeeping',
    'determinism',
])
def test_check_passes(experiment_config, name):
    """Cheap checks pass and are labelled by the registry."""
    record, elapsed = run_check(name, experiment_config)
    assert isinstance(record, CheckRecord)
    assert record.name == name
    assert record.anchor == current_approx.checks[name].anchor
    assert record.passed, record.values
    assert elapsed >= 0


def test_zero_tolerance_fails(app, experiment_data):
    """A zero tolerance turns a passing check into a failure."""
    config = ExperimentConfig.from_dict(
        experiment_data, tolerances={'cutoff-flatness': 0.0})
    record, _ = run_check('cutoff-flatness', config)
    assert not record.passed
    assert record.values['raised-cosine'] > 0


def test_kernel_backends(experiment_config, rng):
    """Both backends agree on small degrees."""
    record = kernel_backends_check(experiment_config, rng, degrees=(2, 3),
                                   pairs=5)
    assert record.passed
    assert set(record.values) == {
        'gamma=0.0,n=2', 'gamma=0.0,n=3', 'gamma=1.0,n=2', 'gamma=1.0,n=3'}


def test_well_posedness(experiment_config, rng):
    """Apex-scaled derivatives of x_1 are finite for r <= 2."""
    record = well_posedness_check(experiment_config, rng)
    assert record.passed
    assert record.values['p=2,r=1']['finite']
    assert np.isfinite(record.values['p=inf,r=2']['norm'])
    assert not record.values['p=inf,r=3']['finite']
    assert 'norm' not in record.values['p=1,r=3']


def test_distance_equivalence(experiment_config):
    """Fitted constants bracket the distance ratio."""
    record, _ = run_check('distance-equivalence', experiment_config)
    assert 0 < record.values['min'] <= record.values['max']
    assert record.fitted_constants['lower'] == record.values['min']


LOOSE = {
    'interval-operator': 10.0,
    'localization': 10.0,
    'kernel-bounds': 10.0,
    'stability': 10.0,
    'corollary': 10.0,
    'bernstein': 10.0,
    'direct-estimate': 10.0,
    'inverse-estimate': 10.0,
    'modulus-properties': 10.0,
}


@pytest.fixture()
def loose_config(app, experiment_data):
    """Small surface experiment with widened drift limits."""
    return ExperimentConfig.from_dict(experiment_data, tolerances=LOOSE)


@pytest.mark.parametrize('func,params', [
    (interval_operator_check, dict(degrees=(1, 2, 4), trials=2)),
    (localization_check, dict(degrees=(8, 16))),
    (kernel_bounds_check, dict(degrees=(8, 16))),
    (generator_operator_check, dict(pairs=((2, 4),), points=5)),
    (commutation_check_record, dict(n=4, points=5)),
    (spectral_eigen_check, dict(top=3, points=5)),
    (stability_check, {}),
    (corollary_check, dict(degrees=(4, 8))),
    (bernstein_check, dict(degrees=(4, 8), trials=3)),
    (direct_estimate_check, {}),
    (inverse_estimate_check, {}),
    (equivalence_check, {}),
    (modulus_properties_check, dict(exponents=range(0, 4))),
    (theta_refinement_check, dict(sizes=(4, 8))),
])
def test_surface_checks(loose_config, func, params):
    """Reduced surface checks pass and fit finite constants."""
    rng = np.random.default_rng(loose_config.seed)
    record = func(loose_config, rng, **params)
    assert record.passed, record.values
    for value in record.fitted_constants.values():
        if isinstance(value, dict):
            assert all(np.isfinite(v) for v in value.values())
        else:
            assert np.isfinite(value)


def test_cone_lift(cone_config, rng):
    """Lifted kernels, integrals and operators agree with direct ones."""
    record = cone_lift_check(cone_config, rng, n=2, points=5)
    assert record.passed, record.values
    assert record.values['dimension'] == 20


def test_exact_inequalities(loose_config, rng):
    """Scaling and composition are compared without drift slack."""
    record = interval_operator_check(loose_config, rng, degrees=(1, 2),
                                     trials=1)
    assert record.values['composition'] <= 1.0
    assert record.values['scaling'] <= 1.0
    record = modulus_properties_check(loose_config, rng,
                                      exponents=range(0, 3))
    assert record.values['smooth']['scaling']

    with mock.patch('conic_approx.checks.modulus_values',
                    side_effect=lambda config, f, r, h_values: dict(
                        (h, h ** 1.8) for h in h_values)):
        record = modulus_properties_check(loose_config, rng,
                                          exponents=range(0, 3))
    # doubling h multiplies by 2^1.8, between 3 and 3.75
    assert not record.values['smooth']['scaling']
    assert not record.passed


def test_interval_equivalence(interval_config, rng):
    """Interval modulus and K-functional are equivalent over the suite."""
    record = interval_equivalence_check(interval_config, rng, jmax=3)
    assert record.passed, record.values
    assert set(record.values) == {'f=smooth,r=1', 'f=smooth,r=2'}
    assert 1.0 <= record.fitted_constants['C'] <= 50.0
    assert all(len(v) == 2 and min(v) > 0 for v in record.values.values())

    config = interval_config._replace(
        tolerances={'interval-equivalence': 0.5})
    assert not interval_equivalence_check(config, rng, jmax=3).passed


@pytest.mark.parametrize('fixture', ['interval_config', 'experiment_config',
                                     'cone_config'])
def test_theta_refinement(request, fixture):
    """Doubling the angle grid leaves the moduli within 1%."""
    config = request.getfixturevalue(fixture)
    record = theta_refinement_check(config, np.random.default_rng(0),
                                    sizes=(16, 32))
    assert record.passed, record.values
    assert record.fitted_constants['relative_change'] < 0.01


def test_operator_helpers(experiment_config, rng):
    """Generator operator, Bernstein and stability helpers directly."""
    weight = surface_weight(experiment_config)
    f = current_approx.test_function('smooth', 'surface')
    ev = SurfaceKernelEvaluator(weight, 4)
    x, t = sample_points(2, 5, rng)
    q = ev.project(f)
    assert np.allclose(gn_apply(SurfaceKernelEvaluator(weight, 8), q,
                                (x, t)), q(x, t), atol=1e-7)

    angular, radial = bernstein_ratio(4, weight, 1, trials=2, rng=rng)
    assert angular > 0 and radial > 0

    residual = commutation_check(ev, f, 'euler-difference', 0.1, 1,
                                 (x, t))
    assert residual <= 1e-8

    report = stability_report(f, weight, (2, 4))
    assert report.n_values == [2, 4]
    assert all(0 < v < 2 for v in report.values)
