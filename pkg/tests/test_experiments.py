# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Experiment configuration and runner tests."""

import json

import numpy as np
import pytest

from conic_approx import current_approx
from conic_approx.errors import UsageError
from conic_approx.experiments import ExperimentConfig, fit_slope, \
    interval_best_profile, run_approx, run_convergence, \
    run_kernel_profile, run_modulus, run_verify
from conic_approx.interval import JacobiSeries
from conic_approx.jacobi import JacobiParams


def test_defaults(app):
    """Missing keys come from the configured defaults."""
    config = ExperimentConfig.from_dict({})
    assert config.domain == 'surface'
    assert config.p == 2.0
    assert config.degrees == [4, 8, 16, 32]
    assert config.cutoff == 'smooth-exponential-bump'
    assert config.tolerance('reproduction', 1e-8) == 1e-8


def test_overrides(app, experiment_data):
    """Overrides win and None overrides are ignored."""
    config = ExperimentConfig.from_dict(experiment_data, seed=7, p=None)
    assert config.seed == 7
    assert config.p == 2.0
    config = ExperimentConfig.from_dict(
        dict(experiment_data, p='inf', h_values=[0.5, 0.1],
             tolerances={'stability': 2}))
    assert np.isinf(config.p)
    assert config.h_values == [0.1, 0.5]
    assert config.tolerance('stability', 1.25) == 2.0


@pytest.mark.parametrize('key,value', [
    ('domain', 'ball'),
    ('d', 7),
    ('d', True),
    ('gamma', -1.0),
    ('p', 0.5),
    ('p', 'two'),
    ('r', 0),
    ('degrees', [8, 4]),
    ('degrees', []),
    ('functions', ['nope']),
    ('checks', ['nope']),
    ('cutoff', 'hat'),
    ('seed', -1),
    ('tolerances', [1e-3]),
    ('h_values', [0.0]),
    ('h_values', [1.5]),
    ('colour', 'blue'),
])
def test_invalid_values(app, experiment_data, key, value):
    """Invalid values are reported with their key."""
    with pytest.raises(UsageError) as excinfo:
        ExperimentConfig.from_dict(dict(experiment_data, **{key: value}))
    assert excinfo.value.field == key
    assert str(excinfo.value).startswith(key)


def test_cone_dimension(app, experiment_data):
    """The cone supports d = 2 only."""
    with pytest.raises(UsageError) as excinfo:
        ExperimentConfig.from_dict(dict(experiment_data, domain='cone', d=3))
    assert excinfo.value.field == 'd'


def test_not_an_object(app):
    """Experiments are JSON objects."""
    with pytest.raises(UsageError):
        ExperimentConfig.from_dict([1, 2])


def test_from_file(app, tmpdir, config_file):
    """Files are read, validated and overridden."""
    config = ExperimentConfig.from_file(config_file, seed=3)
    assert config.gamma == 1.0
    assert config.seed == 3

    broken = tmpdir.join('broken.json')
    broken.write('{"domain": ')
    with pytest.raises(UsageError) as excinfo:
        ExperimentConfig.from_file(str(broken))
    assert excinfo.value.field == 'config'


def test_unknown_test_function(app):
    """Unknown test functions are usage errors."""
    with pytest.raises(UsageError) as excinfo:
        current_approx.test_function('nope', 'surface')
    assert excinfo.value.field == 'functions'


def test_fit_slope():
    """Slopes of power laws and of too short windows."""
    scaled = np.linspace(0.0, 30.0, 301)
    values = (1 + scaled) ** -5.0
    assert fit_slope(scaled, values) == pytest.approx(-5.0)
    assert np.isnan(fit_slope(scaled[:15], values[:15]))


def test_interval_best_profile():
    """Best approximation of a polynomial vanishes from its degree on."""
    params = JacobiParams(0, 1)
    f = JacobiSeries(params, [1.0, 0.5, 0.25])
    profile = interval_best_profile(f, params, 4)
    assert len(profile) == 5
    assert profile[0] > profile[1] > 1e-3
    assert profile[2] < 1e-10


def test_run_verify(experiment_data, app):
    """Verify runs the listed checks into one table."""
    config = ExperimentConfig.from_dict(
        dict(experiment_data, checks=['cutoff-flatness', 'determinism']))
    report = run_verify(config)
    assert report.passed
    assert report.failed == []
    assert list(report.tables['verify']['name']) == [
        'cutoff-flatness', 'determinism']
    assert set(report.timings) == {'cutoff-flatness', 'determinism'}


def test_run_approx(interval_config):
    """Approximation errors per function and degree."""
    report = run_approx(interval_config)
    table = report.tables['approx']
    assert list(table.columns) == ['function', 'n', 'best', 'error',
                                   'surrogate']
    assert list(table['n']) == [2, 4]
    assert table['error'][1] < table['error'][0]
    assert (table['best'] >= 0).all()
    assert not table['surrogate'].any()
    assert report.records == []


def test_run_modulus(interval_config):
    """Moduli per order and increment."""
    report = run_modulus(interval_config)
    table = report.tables['modulus']
    assert list(table.columns) == ['function', 'r', 'h', 'radial', 'total']
    assert len(table) == 4
    assert (table['total'] >= 0).all()


def test_run_convergence(interval_config):
    """Convergence rows and both estimate records."""
    report = run_convergence(interval_config)
    table = report.tables['convergence']
    assert len(table) == 2
    assert [r.name for r in report.records] == ['direct-estimate',
                                                'inverse-estimate']
    assert 'convergence' in report.timings


def test_run_kernel_profile(interval_config):
    """Profiles, fits and the slope record."""
    report = run_kernel_profile(interval_config)
    assert len(report.tables['kernel-profile']) == 2 * 257
    assert list(report.tables['kernel-fit']['n']) == [2, 4]
    assert report.records[0].name == 'kernel-slope'


def test_report_config_is_serializable(interval_config):
    """Configurations dump to JSON."""
    report = run_modulus(interval_config)
    assert json.loads(json.dumps(report.to_dict()))['command'] == 'modulus'
