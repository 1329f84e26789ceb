# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Experiment configurations and the runners behind the CLI.

An experiment file is a flat JSON object, for instance:

.. code-block:: json

    {
        "domain": "surface",
        "d": 2,
        "gamma": 1.0,
        "p": 2,
        "degrees": [4, 8, 16, 32],
        "functions": ["smooth", "apex"],
        "tolerances": {"reproduction": 1e-9}
    }

Missing keys default from ``CONIC_APPROX_DEFAULT_EXPERIMENT``; unknown keys
are rejected. ``p`` may be the string ``"inf"``.
"""

from __future__ import absolute_import, print_function

import json
import time
from collections import namedtuple
from numbers import Integral, Real

import numpy as np
import pandas as pd
from flask import current_app

from .checks import CheckRecord, best_values, interval_params, \
    kfunctional_candidates, kfunctional_value, modulus_values, \
    surface_weight
from .cone import CONE_DIMENSIONS, ConeWeight, cone_kernel_eval, \
    cone_modulus_report, cone_projection, lift_field, lift_points
from .cutoff import CUTOFF_KINDS
from .errors import UsageError
from .interval import IntervalKernelEvaluator, IntervalMeasure, \
    dt_kfunctional_detail, dt_modulus_report, interval_distance, \
    report_total, varpi_n
from .jacobi import gauss_jacobi_rule, jacobi_norms, jacobi_table
from .proxies import current_approx
from .reports import RunReport
from .sphere import SUPPORTED_DIMENSIONS, rotate_points
from .surface import SurfaceKernelEvaluator, SurfaceMeasure, \
    localization_profile, surface_distance, surface_modulus_report
from .utils import config_value, drift, max_growth

DOMAINS = ('interval', 'surface', 'cone')

FIELDS = ('domain', 'd', 'gamma', 'p', 'r', 'degrees', 'functions', 'cutoff',
          'seed', 'tolerances', 'checks', 'h_values')


class ExperimentConfig(namedtuple('ExperimentConfig', FIELDS)):
    """Validated experiment configuration."""

    __slots__ = ()

    @classmethod
    def from_dict(cls, data, **overrides):
        """Validate ``data`` on top of the configured defaults.

        :param overrides: values taking precedence over ``data`` (``None``
            values are ignored).
        :raises UsageError: with the offending key as ``field``.
        """
        if not isinstance(data, dict):
            raise UsageError('An experiment must be a JSON object.')
        unknown = sorted(set(data) - set(FIELDS))
        if unknown:
            raise UsageError('Unknown key. Valid keys: {}'.format(
                ', '.join(FIELDS)), unknown[0])
        values = dict(config_value('CONIC_APPROX_DEFAULT_EXPERIMENT', {}))
        values.update(data)
        values.update((k, v) for k, v in overrides.items() if v is not None)
        missing = [k for k in FIELDS if k not in values]
        if missing:
            raise UsageError('Missing value.', missing[0])
        return cls(**_validate(values))

    @classmethod
    def from_file(cls, path, **overrides):
        """Load and validate a JSON experiment file."""
        try:
            with open(path) as fp:
                data = json.load(fp)
        except ValueError as e:
            raise UsageError('Invalid JSON: {}'.format(e), 'config')
        return cls.from_dict(data, **overrides)

    def tolerance(self, name, default):
        """Tolerance of check ``name``, or ``default``."""
        return float(self.tolerances.get(name, default))


def _integer(values, key, low=None):
    value = values[key]
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise UsageError('Expected an integer, got {!r}.'.format(value), key)
    if low is not None and value < low:
        raise UsageError('Must be at least {}.'.format(low), key)
    return int(value)


def _real(value, key):
    if isinstance(value, bool) or not isinstance(value, Real):
        raise UsageError('Expected a number, got {!r}.'.format(value), key)
    return float(value)


def _names(values, key, registry):
    names = values[key]
    if not isinstance(names, (list, tuple)) or \
            not all(isinstance(n, str) for n in names):
        raise UsageError('Expected a list of names.', key)
    invalid = [n for n in names if n not in registry]
    if invalid:
        raise UsageError('Invalid value(s): {}. Valid values: {}'.format(
            ', '.join(invalid), ', '.join(sorted(registry))), key)
    return list(names)


def _validate(values):
    out = {}
    domain = values['domain']
    if domain not in DOMAINS:
        raise UsageError('Invalid value {!r}. Valid values: {}'.format(
            domain, ', '.join(DOMAINS)), 'domain')
    out['domain'] = domain

    supported = CONE_DIMENSIONS if domain == 'cone' else SUPPORTED_DIMENSIONS
    out['d'] = _integer(values, 'd')
    if out['d'] not in supported:
        raise UsageError('Unsupported dimension {}. Supported: {}'.format(
            out['d'], ', '.join(str(s) for s in supported)), 'd')

    out['gamma'] = _real(values['gamma'], 'gamma')
    if out['gamma'] < 0:
        raise UsageError('Must be nonnegative.', 'gamma')

    p = values['p']
    p = np.inf if p in ('inf', 'infinity') else _real(p, 'p')
    if not p >= 1:
        raise UsageError('Must lie in [1, inf].', 'p')
    out['p'] = p

    out['r'] = _integer(values, 'r', 1)

    degrees = values['degrees']
    if not isinstance(degrees, (list, tuple)) or not degrees:
        raise UsageError('Expected a nonempty list of degrees.', 'degrees')
    out['degrees'] = [_integer({'degrees': n}, 'degrees', 1)
                      for n in degrees]
    if out['degrees'] != sorted(set(out['degrees'])):
        raise UsageError('Degrees must be strictly ascending.', 'degrees')

    out['functions'] = _names(values, 'functions', config_value(
        'CONIC_APPROX_SUITE', {}))
    out['checks'] = _names(values, 'checks', config_value(
        'CONIC_APPROX_CHECKS', {}))

    if values['cutoff'] not in CUTOFF_KINDS:
        raise UsageError('Invalid value {!r}. Valid values: {}'.format(
            values['cutoff'], ', '.join(CUTOFF_KINDS)), 'cutoff')
    out['cutoff'] = values['cutoff']

    out['seed'] = _integer(values, 'seed', 0)

    tolerances = values['tolerances']
    if not isinstance(tolerances, dict):
        raise UsageError('Expected an object.', 'tolerances')
    out['tolerances'] = dict(
        (name, _real(value, 'tolerances'))
        for name, value in sorted(tolerances.items()))

    h_values = values['h_values']
    if not isinstance(h_values, (list, tuple)) or not h_values:
        raise UsageError('Expected a nonempty list.', 'h_values')
    out['h_values'] = sorted(_real(h, 'h_values') for h in h_values)
    if not all(0 < h <= 1 for h in out['h_values']):
        raise UsageError('Increments must lie in (0, 1].', 'h_values')
    return out


#
# Checks
#
def run_check(name, config):
    """Run the registered check ``name`` with a generator seeded by
    ``config.seed``.

    :returns: ``(record, elapsed seconds)``.
    """
    check = current_approx.checks[name]
    rng = np.random.default_rng(config.seed)
    current_app.logger.info('Running check %s', name)
    start = time.perf_counter()
    record = check.func(config, rng, **check.params)
    elapsed = time.perf_counter() - start
    record = record._replace(name=name, anchor=check.anchor)
    current_app.logger.info('Check %s %s in %.2fs', name,
                            'passed' if record.passed else 'FAILED', elapsed)
    return record, elapsed


def run_verify(config):
    """Run the configured checks, or the domain's default list."""
    names = config.checks or current_approx.verify_checks(config.domain)
    records, timings = [], {}
    for name in names:
        record, timings[name] = run_check(name, config)
        records.append(record)
    table = pd.DataFrame(
        [dict(name=r.name, anchor=r.anchor, passed=r.passed)
         for r in records], columns=['name', 'anchor', 'passed'])
    return RunReport('verify', config, records, {'verify': table}, timings)


def _timed(command, config, build):
    start = time.perf_counter()
    tables, records = build(config)
    timings = {command: time.perf_counter() - start}
    return RunReport(command, config, records, tables, timings)


def _fields(config):
    return [(name, current_approx.test_function(name, config.domain))
            for name in config.functions]


def _anchor(name):
    check = current_approx.checks.get(name)
    return check.anchor if check else 'plumbing'


#
# Convergence
#
def interval_best_profile(f, params, n_max, num_nodes=None):
    """``E_k(f)_2`` on the interval for ``k = 0, ..., n_max``."""
    rule = gauss_jacobi_rule(params, num_nodes or 4 * n_max + 64, '[0,1]')
    values = f(rule.nodes)
    top = len(rule.nodes) - 1
    table = jacobi_table(params, top, 1 - 2 * rule.nodes)
    moments = table.dot(values * rule.normalized_weights)
    energies = moments ** 2 / jacobi_norms(params, top)
    tails = np.cumsum(energies[::-1])[::-1]
    return np.sqrt(np.append(tails[1:], 0.0)[:n_max + 1])


def _interval_moduli(f, config, r, h_values):
    report = dt_modulus_report(f, r, h_values, config.p,
                               interval_params(config))
    return dict(zip(report.h_values, report_total(report)))


def _convergence(config):
    config = config._replace(p=2)
    degrees = config.degrees
    h_values = [1.0 / n for n in degrees]
    rows = []
    direct, inverse = {}, {}
    for name, f in _fields(config):
        if config.domain == 'interval':
            params = interval_params(config)
            profile = interval_best_profile(f, params, max(degrees))
            best = [float(profile[n]) for n in degrees]
            first = _interval_moduli(f, config, 1, h_values)
            second = _interval_moduli(f, config, 2, h_values)
        else:
            profile = best_values(config, f,
                                  list(range(max(degrees) + 1)))
            best = [profile[n] for n in degrees]
            first = modulus_values(config, f, 1, h_values)
            second = modulus_values(config, f, 2, h_values)
        moduli = first if config.r == 1 else second
        ratios, bounds = [], []
        for n, h, e in zip(degrees, h_values, best):
            bound = n ** (-config.r) * float(np.sum(
                (np.arange(n + 1) + 1.0) ** (config.r - 1) *
                np.asarray(profile[:n + 1])))
            bounds.append(bound)
            ratios.append(moduli[h] / bound if bound > 0 else 0.0)
            rows.append(dict(
                function=name, n=n, best=e, omega_1=first[h],
                omega_2=second[h],
                direct_ratio=e / first[h] if first[h] > 0 else 0.0,
                inverse_bound=bound, inverse_ratio=ratios[-1]))
        direct[name] = [row['direct_ratio'] for row in rows
                        if row['function'] == name]
        inverse[name] = ratios
    limit = config_value('CONIC_APPROX_BOUNDED_DRIFT', 1.25)
    records = [
        CheckRecord('direct-estimate', _anchor('direct-estimate'), direct,
                    dict((k, max(v)) for k, v in direct.items()),
                    all(max_growth(v) <= config.tolerance(
                        'direct-estimate', limit) for v in direct.values())),
        CheckRecord('inverse-estimate', _anchor('inverse-estimate'), inverse,
                    dict((k, max(v)) for k, v in inverse.items()),
                    all(drift(v) <= config.tolerance(
                        'inverse-estimate', limit)
                        for v in inverse.values())),
    ]
    columns = ['function', 'n', 'best', 'omega_1', 'omega_2',
               'direct_ratio', 'inverse_bound', 'inverse_ratio']
    return {'convergence': pd.DataFrame(rows, columns=columns)}, records


def run_convergence(config):
    """``E_n``, moduli at ``1/n`` and both estimate ratios per function.

    The inverse bound is ``n^{-r} sum_{k<=n} (k+1)^{r-1} E_k`` in ``L^2``.
    """
    return _timed('convergence', config, _convergence)


#
# Kernel profiles
#
def _profile_points(config, count):
    """A fixed point and ``count`` partners at growing distance."""
    angles = np.linspace(0.0, np.pi, count)
    if config.domain == 'interval':
        return 0.3, np.linspace(0.3, 1.0, count)
    d = config.d
    base = np.zeros((1, d))
    base[0, 0] = 0.25
    if config.domain == 'cone':
        t = np.full(count, 0.5)
        x = rotate_points(np.tile(base, (count, 1)), 1, 2, angles)
        return (base, np.array([0.5])), (x, t)
    t = np.full(count, 0.5)
    x = rotate_points(np.tile(2 * base, (count, 1)), 1, 2, angles)
    return (2 * base, np.array([0.5])), (x, t)


def _kernel_values(config, n, a, b):
    """``|kernel|``, distance and the weight normalization."""
    if config.domain == 'interval':
        params = interval_params(config)
        ev = IntervalKernelEvaluator(params, n, config.cutoff)
        values = np.abs(ev.kernel(b, np.array([a]))[:, 0])
        dist = interval_distance(b, a)
        return values * np.sqrt(varpi_n(params, n, a) *
                                varpi_n(params, n, b)), dist, 1
    weight = surface_weight(config)
    ev = SurfaceKernelEvaluator(weight, n, config.cutoff)
    (x, t), (y, s) = a, b
    if config.domain == 'cone':
        X = np.tile(lift_points(x, t), (len(s), 1))
        T = np.repeat(t, len(s))
        values = np.abs(cone_kernel_eval(ev, (np.tile(x, (len(s), 1)), T),
                                         (y, s), config.d))
        dist = np.minimum(
            surface_distance((X, T), (lift_points(y, s), s)),
            surface_distance((X, T), (lift_points(y, s, -1), s)))
    else:
        X, T = np.tile(x, (len(s), 1)), np.repeat(t, len(s))
        values = np.abs(ev.kernel((X, T), (y, s)))
        dist = surface_distance((X, T), (y, s))
    norm = np.sqrt(weight.varpi(n, T) * weight.varpi(n, s))
    return values * norm, dist, weight.d


def fit_slope(scaled, values, window=(2.0, 20.0)):
    """Least-squares slope of ``log envelope`` against ``log(1 + scaled)``.

    The envelope is the running maximum from the far end, so zeros of the
    kernel do not enter the fit.
    """
    order = np.argsort(scaled)
    scaled, values = np.asarray(scaled)[order], np.asarray(values)[order]
    envelope = np.maximum.accumulate(values[::-1])[::-1]
    keep = (scaled >= window[0]) & (scaled <= window[1]) & (envelope > 0)
    if np.sum(keep) < 2:
        return float('nan')
    slope, _ = np.polyfit(np.log1p(scaled[keep]), np.log(envelope[keep]), 1)
    return float(slope)


def _kernel_profile(config, count=257, kappa=4):
    a, b = _profile_points(config, count)
    rows, fits = [], []
    for n in config.degrees:
        values, dist, dim = _kernel_values(config, n, a, b)
        normalized = values / localization_profile(dist, n, kappa, dim)
        for u, v, w in zip(dist, values, normalized):
            rows.append(dict(n=n, distance=u, scaled_distance=n * u,
                             kernel=v, normalized=w))
        fits.append(dict(n=n, slope=fit_slope(n * dist, values),
                         maximum=float(np.max(normalized))))
    slopes = [fit['slope'] for fit in fits]
    maxima = [fit['maximum'] for fit in fits]
    limit = config.tolerance('kernel-slope', -3.0)
    record = CheckRecord(
        'kernel-slope', _anchor('localization'),
        dict(slopes=slopes, maxima=maxima),
        dict(slope=max(slopes), maximum=max(maxima)),
        any(np.isfinite(slopes)) and
        all(s <= limit for s in slopes if np.isfinite(s)))
    tables = {
        'kernel-profile': pd.DataFrame(
            rows, columns=['n', 'distance', 'scaled_distance', 'kernel',
                           'normalized']),
        'kernel-fit': pd.DataFrame(fits, columns=['n', 'slope', 'maximum']),
    }
    return tables, [record]


def run_kernel_profile(config):
    """Kernel size against distance and fitted decay slopes per degree.

    Slopes are fitted on ``n dist`` in ``[2, 20]``; the ``kernel-slope``
    record passes when every slope is at most the ``kernel-slope``
    tolerance (``-3`` by default).
    """
    return _timed('kernel-profile', config, _kernel_profile)


#
# Moduli, K-functionals and approximation errors
#
def _modulus(config):
    rows = []
    for name, f in _fields(config):
        for r in sorted({1, 2, config.r}):
            if config.domain == 'interval':
                report = dt_modulus_report(f, r, config.h_values, config.p,
                                           interval_params(config))
            elif config.domain == 'cone':
                report = cone_modulus_report(
                    f, ConeWeight(config.gamma, config.d), r,
                    config.h_values, config.p, allow_empty=True)
            else:
                report = surface_modulus_report(
                    f, surface_weight(config), r, config.h_values, config.p,
                    allow_empty=True)
            totals = report_total(report)
            for k, h in enumerate(report.h_values):
                row = dict(function=name, r=r, h=h, total=totals[k])
                for component, values in report.component_values.items():
                    row[component] = values[k]
                rows.append(row)
    table = pd.DataFrame(rows)
    columns = ['function', 'r', 'h'] + sorted(
        c for c in table.columns if c not in ('function', 'r', 'h', 'total'))
    return {'modulus': table[columns + ['total']]}, []


def run_modulus(config):
    """Modulus components over ``h_values`` per function and order."""
    return _timed('modulus', config, _modulus)


def _kfunctional(config):
    rows = []
    for name, f in _fields(config):
        if config.domain == 'interval':
            candidates = None
        else:
            candidates = kfunctional_candidates(config, f)
        for r in (1, 2):
            for h in config.h_values:
                if config.domain == 'interval':
                    result = dt_kfunctional_detail(
                        f, r, h, config.p, interval_params(config))
                else:
                    result = kfunctional_value(config, f, r, h, candidates)
                rows.append(dict(function=name, r=r, h=h, value=result.value,
                                 degree=2 ** result.index,
                                 distance=result.terms[0],
                                 smoothness=sum(result.terms[1:])))
    columns = ['function', 'r', 'h', 'value', 'degree', 'distance',
               'smoothness']
    return {'kfunctional': pd.DataFrame(rows, columns=columns)}, []


def run_kfunctional(config):
    """Candidate-minimum K-functionals and the minimizing degree."""
    return _timed('kfunc', config, _kfunctional)


def _approx(config):
    rows = []
    degrees = config.degrees
    for name, f in _fields(config):
        if config.domain == 'interval':
            params = interval_params(config)
            measure = IntervalMeasure(params, p=config.p)
            values = f(measure.nodes)
            if config.p == 2:
                profile = interval_best_profile(f, params, max(degrees))
                best = [float(profile[n]) for n in degrees]
            else:
                best = [measure.norm(values - IntervalKernelEvaluator(
                    params, n // 2, config.cutoff).project(f)(measure.nodes))
                    for n in degrees]
            errors = [measure.norm(values - IntervalKernelEvaluator(
                params, n, config.cutoff).project(f)(measure.nodes))
                for n in degrees]
        else:
            weight = surface_weight(config)
            measure = SurfaceMeasure(weight, p=config.p)
            x, t = measure.x, measure.t
            if config.domain == 'cone':
                w = ConeWeight(config.gamma, config.d)
                values = lift_field(f, config.d)(x, t)
                approxes = [cone_projection(f, w, n, cutoff=config.cutoff)
                            for n in degrees]
            else:
                values = f(x, t)
                approxes = [SurfaceKernelEvaluator(
                    weight, n, config.cutoff).project(f) for n in degrees]
            best = best_values(config, f, degrees)
            errors = [measure.norm(values - g(x, t)) for g in approxes]
        for n, e, err in zip(degrees, best, errors):
            rows.append(dict(function=name, n=n, best=e, error=err,
                             surrogate=config.p != 2))
    columns = ['function', 'n', 'best', 'error', 'surrogate']
    return {'approx': pd.DataFrame(rows, columns=columns)}, []


def run_approx(config):
    """``E_n(f)_p`` and ``||f - L_n f||_p`` per function and degree.

    For ``p != 2``, ``E_n`` is the surrogate ``||f - L_{n/2} f||_p``.
    """
    return _timed('approx', config, _approx)


RUNNERS = {
    'verify': run_verify,
    'convergence': run_convergence,
    'kernel-profile': run_kernel_profile,
    'modulus': run_modulus,
    'kfunc': run_kfunctional,
    'approx': run_approx,
}
