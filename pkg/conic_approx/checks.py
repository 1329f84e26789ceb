# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Named numerical checks.

A check is a function ``check(config, rng, **params)`` returning a
:class:`CheckRecord` whose ``name`` and ``anchor`` are filled in by the
runner from the registry (see ``CONIC_APPROX_CHECKS``). Test functions are
resolved through :data:`~conic_approx.proxies.current_approx`, so checks
run inside an application context.

"Bounded" sequences are judged by their last-to-first ratio
(:func:`~conic_approx.utils.drift`) unless a check says otherwise.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple

import numpy as np
from scipy.integrate import trapezoid

from .cone import ConeWeight, cone_basis_kernel, cone_basis_indices, \
    cone_dimension, cone_direct_integrate, cone_integrate, \
    cone_kernel_eval, cone_kfunctional_detail, cone_modulus_report, \
    cone_nearbest_apply, cone_nearbest_direct, cone_projection, \
    cone_sample_points, even_extension_residual, lift_field, \
    phi_derivative_identity_check
from .contrib.suite import coordinate, random_cone_polynomial
from .cutoff import CutoffSpec, cutoff_eval
from .fields import ScalarField
from .interval import IntervalKernelEvaluator, JacobiSeries, \
    dt_kfunctional, dt_modulus_report, interval_distance, \
    jacobi_kernel_integral_check, report_total, varpi_n
from .jacobi import JacobiParams, gauss_jacobi_rule, jacobi_endpoint, \
    jacobi_eval, jacobi_norms, jacobi_table
from .proxies import current_approx
from .sphere import addition_kernel, angular_derivative, harmonic_basis, \
    laplace_beltrami, rotate_points, spherical_quadrature
from .surface import SurfaceKernelEvaluator, SurfaceMeasure, SurfaceWeight, \
    _apex_scaled, bernstein_report, best_approx, \
    best_approx_profile, commutation_check, corollary_report, \
    distance_equivalence, gn_apply, gn_field, integral_bound_report, \
    kernel_decay_report, kernel_product_bound_report, quadrature_basis_norms, \
    random_expansion, sample_points, spectral_operator, \
    sphere_average_check, stability_report, surface_basis_field, \
    surface_basis_indices, surface_dimension, surface_kfunctional_detail, \
    surface_modulus_report, well_posedness_flag
from .utils import binomial_signs, config_value, drift, max_growth, \
    pochhammer

CheckRecord = namedtuple(
    'CheckRecord', ['name', 'anchor', 'values', 'fitted_constants', 'passed'])
"""Outcome of one named check."""

ROUNDING = 1e-12
"""Relative slack of inequalities that hold exactly on computed values."""


def _record(values, fitted=None, passed=True):
    return CheckRecord(None, None, values, fitted or {}, bool(passed))


def _bounded(sequence, limit):
    return drift(sequence) <= limit


def _at_most(value, bound):
    return value <= bound * (1 + ROUNDING)


def _key(**parts):
    return ','.join('{}={}'.format(k, parts[k]) for k in sorted(parts))


#
# Domain plumbing
#
def surface_weight(config):
    """Surface weight of the configuration; the lift's for the cone."""
    if config.domain == 'cone':
        return ConeWeight(config.gamma, config.d).surface_weight
    return SurfaceWeight(config.gamma, config.d)


def interval_params(config):
    """Interval weight ``t^{d-2} (1-t)^gamma`` of the configuration."""
    return JacobiParams(max(config.d - 2, 0), config.gamma)


def suite_fields(config):
    """Named test functions of the configuration, lifted for the cone."""
    fields = []
    for name in config.functions:
        f = current_approx.test_function(name, config.domain)
        fields.append((name, f))
    return fields


def _surface_view(config, f):
    if config.domain == 'cone':
        return lift_field(f, config.d)
    return f


def modulus_values(config, f, r, h_values, grid_size=None):
    """Total modulus ``omega_r(f; h)`` keyed by ``h``."""
    if config.domain == 'cone':
        report = cone_modulus_report(f, ConeWeight(config.gamma, config.d),
                                     r, h_values, config.p, allow_empty=True,
                                     grid_size=grid_size)
    else:
        report = surface_modulus_report(f, surface_weight(config), r,
                                        h_values, config.p, allow_empty=True,
                                        grid_size=grid_size)
    return dict(zip(report.h_values, report_total(report)))


def best_values(config, f, degrees):
    """``E_n(f)_p`` for ``n`` in ``degrees``."""
    weight = surface_weight(config)
    g = _surface_view(config, f)
    if config.p == 2:
        profile = best_approx_profile(g, weight, max(degrees))
        return [float(profile[n]) for n in degrees]
    return [best_approx(g, weight, n, config.p, cutoff=config.cutoff).value
            for n in degrees]


def kfunctional_candidates(config, f, jmax=4):
    """Near-best polynomials of degree ``2^j`` on the surface or the lift."""
    if config.domain == 'cone':
        w = ConeWeight(config.gamma, config.d)
        return [cone_projection(f, w, 2 ** j, cutoff=config.cutoff)
                for j in range(jmax + 1)]
    weight = surface_weight(config)
    return [SurfaceKernelEvaluator(weight, 2 ** j, config.cutoff).project(f)
            for j in range(jmax + 1)]


def kfunctional_value(config, f, r, h, candidates):
    """Candidate minimum of the K-functional of the configured domain."""
    if config.domain == 'cone':
        return cone_kfunctional_detail(
            f, ConeWeight(config.gamma, config.d), r, h, config.p,
            candidates)
    return surface_kfunctional_detail(f, surface_weight(config), r, h,
                                      config.p, candidates)


#
# Jacobi polynomials and cut-offs
#
ORTHOGONALITY_PARAMS = ((-0.5, -0.5), (0.0, 0.0), (1.0, 0.0), (2.5, 0.7))


def _hypergeometric(params, n, t):
    a, b = params
    total = 0.0
    for k in range(n + 1):
        total += (pochhammer(-n, k) * pochhammer(n + a + b + 1, k) /
                  (pochhammer(a + 1, k) * pochhammer(1, k)) *
                  ((1 - t) / 2.0) ** k)
    return jacobi_endpoint(params, n) * total


def _relative(a, b):
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1.0)))


def jacobi_identities_check(config, rng, top=40):
    """Orthogonality, hypergeometric agreement, endpoints and symmetry."""
    values = {}
    points = np.array([-0.9, 0.0, 0.6, 1.0])
    t = np.linspace(-1, 1, 11)
    for pair in ORTHOGONALITY_PARAMS:
        params = JacobiParams(*pair)
        rule = gauss_jacobi_rule(params, top + 1 + int(np.ceil(max(pair))))
        table = jacobi_table(params, top, rule.nodes)
        gram = (table * rule.normalized_weights).dot(table.T)
        h = jacobi_norms(params, top)
        orthogonality = float(np.max(np.abs(gram - np.diag(h)) /
                                     np.sqrt(np.outer(h, h))))
        direct = max(_relative(jacobi_eval(params, n, points),
                               _hypergeometric(params, n, points))
                     for n in range(11))
        endpoint = max(
            abs(jacobi_eval(params, n, 1.0) / jacobi_endpoint(params, n) - 1)
            for n in range(31))
        symmetry = max(_relative(jacobi_eval(params, n, -t),
                                 (-1) ** n * jacobi_eval(params.swapped, n,
                                                         t))
                       for n in range(16))
        values[_key(alpha=pair[0], beta=pair[1])] = dict(
            orthogonality=orthogonality, hypergeometric=direct,
            endpoint=endpoint, symmetry=symmetry)
    tol = config.tolerance('jacobi-identities', 1e-10)
    passed = all(v['orthogonality'] <= tol and v['hypergeometric'] <= 1e-9 and
                 v['endpoint'] <= 1e-11 and v['symmetry'] <= 1e-9
                 for v in values.values())
    return _record(values, passed=passed)


def _central_difference(spec, t, order, step):
    total = 0.0
    for k, sign in enumerate(binomial_signs(order)):
        total += sign * cutoff_eval(spec, t + (order / 2.0 - k) * step)
    return total / step ** order


def cutoff_flatness_check(config, rng):
    """Vanishing derivatives of the cut-offs at ``t = 1`` and ``t = 2``."""
    cosine = CutoffSpec('raised-cosine')
    bump = CutoffSpec('smooth-exponential-bump')
    first = max(abs(_central_difference(cosine, t, 1, 1e-7))
                for t in (1.0, 2.0))
    higher = max(abs(_central_difference(bump, t, order, 1e-2))
                 for t in (1.0, 2.0) for order in range(1, 5))
    values = {'raised-cosine': first, 'smooth-exponential-bump': higher}
    passed = first <= config.tolerance('cutoff-flatness', 1e-6) and \
        higher <= 1e-4
    return _record(values, passed=passed)


#
# Interval operators
#
def interval_operator_check(config, rng, degrees=(1, 2, 4, 8, 16), trials=5):
    """Reproduction, localization, moduli and the kernel integral bound.

    Composition (``omega_2 <= 2 omega_1``) and scaling
    (``omega_r(2h) <= 3^r omega_r(h)``) are compared exactly, up to
    rounding; the drift limit applies to the localization and integral
    sequences only.
    """
    params = interval_params(config)
    grid = np.linspace(0.0, 1.0, 101)
    reproduction = 0.0
    for n in degrees:
        ev = IntervalKernelEvaluator(params, n, config.cutoff)
        for _ in range(trials):
            q = JacobiSeries(params, rng.standard_normal(n + 1) /
                             np.sqrt(jacobi_norms(params, n)))
            exact = q(grid)
            reproduction = max(reproduction, float(
                np.max(np.abs(ev.project(q)(grid) - exact)) /
                max(np.max(np.abs(exact)), 1.0)))

    t = 0.3
    s = np.linspace(0.0, 1.0, 201)
    localization = []
    for n in (16, 32, 64, 128):
        ev = IntervalKernelEvaluator(params, n, config.cutoff)
        kernel = np.abs(ev.kernel(s, np.array([t]))[:, 0])
        scaled = kernel * (1 + n * interval_distance(s, t)) ** 4 * np.sqrt(
            varpi_n(params, n, s) * varpi_n(params, n, t)) / n
        localization.append(float(np.max(scaled)))

    limit = config.tolerance('interval-operator', 1.25)
    composition = scaling = 0.0
    for name in config.functions:
        f = current_approx.test_function(name, 'interval')
        h_values = [0.05, 0.1]
        first = dt_modulus_report(f, 1, h_values, config.p, params)
        second = dt_modulus_report(f, 2, h_values, config.p, params)
        for low, high in zip(first.component_values['radial'],
                             second.component_values['radial']):
            if low > 0:
                composition = max(composition, high / (2 * low))
        for r, report in ((1, first), (2, second)):
            small, large = report.component_values['radial']
            if small > 0:
                scaling = max(scaling, large / (3 ** r * small))
    integral = jacobi_kernel_integral_check(params)

    values = dict(reproduction=reproduction, localization=localization,
                  composition=composition, scaling=scaling,
                  kernel_integral=list(integral.values))
    fitted = dict(localization=max(localization),
                  kernel_integral=max(integral.values))
    passed = (reproduction <= 1e-8 and _at_most(composition, 1.0) and
              _at_most(scaling, 1.0) and _bounded(localization, limit) and
              _bounded(integral.values, limit))
    return _record(values, fitted, passed)


def interval_equivalence_check(config, rng, orders=(1, 2), jmax=5):
    """``dt_modulus / dt_kfunctional`` within ``[1/C, C]`` over the suite.

    ``C`` is the ``interval-equivalence`` tolerance (50 by default); the
    fitted constant is the largest ratio or inverse ratio seen.
    """
    params = interval_params(config)
    limit = config.tolerance('interval-equivalence', 50.0)
    values = {}
    worst = 1.0
    for name in config.functions:
        f = current_approx.test_function(name, 'interval')
        candidates = [
            IntervalKernelEvaluator(params, 2 ** j, config.cutoff).project(f)
            for j in range(jmax + 1)]
        for r in orders:
            report = dt_modulus_report(f, r, config.h_values, config.p,
                                       params)
            ratios = []
            for h, modulus in zip(report.h_values,
                                  report.component_values['radial']):
                k = dt_kfunctional(f, r, h, config.p, params, candidates)
                ratio = modulus / k if k > 0 else 0.0
                if ratio > 0:
                    worst = max(worst, ratio, 1.0 / ratio)
                ratios.append(ratio)
            values[_key(f=name, r=r)] = ratios
    return _record(values, {'C': worst}, worst <= limit)


def theta_refinement_check(config, rng, sizes=(16, 32)):
    """Doubling the angle grid changes the moduli by less than 1%."""
    coarse, fine = sizes
    limit = config.tolerance('theta-refinement', 0.01)
    values = {}
    worst = 0.0
    for name, f in suite_fields(config):
        if config.domain == 'interval':
            params = interval_params(config)
            before, after = [
                dt_modulus_report(f, config.r, config.h_values, config.p,
                                  params, grid_size=size)
                .component_values['radial'] for size in (coarse, fine)]
        else:
            before, after = [
                list(modulus_values(config, f, config.r, config.h_values,
                                    grid_size=size).values())
                for size in (coarse, fine)]
        changes = [abs(b - a) / a if a > 0 else 0.0
                   for a, b in zip(after, before)]
        values[name] = changes
        worst = max([worst] + changes)
    return _record(values, {'relative_change': worst}, worst < limit)


#
# Sphere
#
def _harmonic_field(d, m):
    return ScalarField(lambda x: harmonic_basis(d, m, x)[:, 0],
                       domain='sphere', name='Y_{}'.format(m), degree=m)


def sphere_harmonics_check(config, rng, pairs=20):
    """Orthonormality, Laplace-Beltrami eigenvalues, rotation invariance."""
    values = {}
    tol = config.tolerance('sphere-harmonics', 1e-10)
    passed = True
    for d, top in ((2, 10), (3, 8), (4, 6)):
        rule = spherical_quadrature(d, 2 * top)
        basis = np.column_stack([harmonic_basis(d, m, rule.points)
                                 for m in range(top + 1)])
        gram = (basis * rule.weights[:, None]).T.dot(basis)
        orthonormality = float(np.max(np.abs(gram - np.eye(len(gram)))))

        xi = rng.standard_normal((pairs, d))
        xi /= np.linalg.norm(xi, axis=1)[:, None]
        eta = rng.standard_normal((pairs, d))
        eta /= np.linalg.norm(eta, axis=1)[:, None]
        invariance = eigen = 0.0
        for m in range(1, 6):
            kernel = addition_kernel(d, m, np.sum(xi * eta, axis=1))
            turned = np.sum(
                harmonic_basis(d, m, rotate_points(xi, 1, d, 0.7)) *
                harmonic_basis(d, m, rotate_points(eta, 1, d, 0.7)), axis=1)
            invariance = max(invariance, _relative(turned, kernel))

            f = _harmonic_field(d, m)
            lhs = laplace_beltrami(f, d, xi)
            eigen = max(eigen, _relative(lhs, -m * (m + d - 2) * f(xi)))
        values[_key(d=d)] = dict(orthonormality=orthonormality,
                                 invariance=invariance, eigen=eigen)
        passed = passed and max(orthonormality, invariance, eigen) <= tol
    return _record(values, passed=passed)


#
# Conic surface
#
def surface_bookkeeping_check(config, rng):
    """Basis counts, closed-form norms and the sphere-average identity."""
    weight = surface_weight(config)
    counts = {}
    counted = True
    for d in (2, 3, 4):
        w = SurfaceWeight(config.gamma, d)
        for n in range(7):
            found = len(surface_basis_indices(w, n))
            counts[_key(d=d, n=n)] = found
            counted = counted and found == surface_dimension(n, d)
    quadrature_basis_norms(weight, 20)
    ev = SurfaceKernelEvaluator(weight, 8, config.cutoff)
    f = current_approx.test_function('smooth', 'surface')
    average = sphere_average_check(ev, f)
    values = dict(counts=counts, sphere_average=average)
    passed = counted and counts[_key(d=2, n=2)] == 9 and \
        average <= config.tolerance('surface-bookkeeping', 1e-8)
    return _record(values, passed=passed)


def kernel_backends_check(config, rng, degrees=(2, 5, 10, 20), pairs=50):
    """Basis-sum against addition-formula kernels at random pairs."""
    values = {}
    gammas = sorted({0.0, 1.0, float(config.gamma)})
    for gamma in gammas:
        weight = SurfaceWeight(gamma, 2)
        a = sample_points(2, pairs, rng)
        b = sample_points(2, pairs, rng)
        for n in degrees:
            basis = SurfaceKernelEvaluator(weight, n, config.cutoff,
                                           'basis-sum').kernel(a, b)
            formula = SurfaceKernelEvaluator(weight, n, config.cutoff,
                                             'addition-formula').kernel(a, b)
            values[_key(gamma=gamma, n=n)] = float(
                np.max(np.abs(basis - formula)) / np.max(np.abs(basis)))
    passed = max(values.values()) <= config.tolerance('kernel-backends', 1e-8)
    return _record(values, passed=passed)


def reproduction_check(config, rng, degrees=(2, 4, 8, 16), trials=5,
                       points=50):
    """``L_n q = q`` for random polynomials ``q`` of degree ``n``."""
    values = {}
    if config.domain == 'cone':
        w = ConeWeight(config.gamma, config.d)
        for n in degrees:
            worst = 0.0
            for _ in range(trials):
                q = random_cone_polynomial(n, rng, config.d)
                x, t = cone_sample_points(config.d, points, rng)
                exact = q(x, t)
                approx = cone_nearbest_apply(q, w, n, (x, t),
                                             cutoff=config.cutoff)
                worst = max(worst, float(np.max(np.abs(approx - exact)) /
                                         max(np.max(np.abs(exact)), 1e-12)))
            values[_key(d=config.d, n=n)] = worst
    else:
        for d in (2, 3):
            weight = SurfaceWeight(config.gamma, d)
            for n in degrees:
                ev = SurfaceKernelEvaluator(weight, n, config.cutoff)
                worst = 0.0
                for _ in range(trials):
                    q = random_expansion(weight, n, rng)
                    x, t = sample_points(d, points, rng)
                    exact = q(x, t)
                    worst = max(worst, float(
                        np.max(np.abs(ev.project(q)(x, t) - exact)) /
                        max(np.max(np.abs(exact)), 1.0)))
                values[_key(d=d, n=n)] = worst
    passed = max(values.values()) <= config.tolerance('reproduction', 1e-8)
    return _record(values, passed=passed)


def localization_check(config, rng, degrees=(8, 16, 32, 64), kappa=4):
    """Normalized kernel maxima against ``G^kappa_{n,d}``."""
    report = kernel_decay_report(surface_weight(config), degrees, kappa,
                                 config.cutoff, seed=config.seed)
    limit = config.tolerance('localization', 1.25)
    return _record({'maxima': list(report.values)},
                   {'c': max(report.values)},
                   _bounded(report.values, limit))


def kernel_bounds_check(config, rng, degrees=(8, 16, 32, 64), kappa=4):
    """Product bound of the kernel and the weighted integral bound."""
    weight = surface_weight(config)
    product = kernel_product_bound_report(weight, degrees, kappa,
                                          config.cutoff, seed=config.seed)
    integral = integral_bound_report(weight, degrees, kappa)
    limit = config.tolerance('kernel-bounds', 1.25)
    values = dict(product=list(product.values),
                  integral=list(integral.values))
    fitted = dict(product=max(product.values),
                  integral=max(integral.values))
    passed = _bounded(product.values, limit) and \
        _bounded(integral.values, limit)
    return _record(values, fitted, passed)


def generator_operator_check(config, rng,
                             pairs=((2, 4), (4, 8), (8, 16)), points=20):
    """``G_n L_m f = L_m G_n f = L_m f`` for ``n >= 2m - 1``."""
    weight = surface_weight(config)
    f = current_approx.test_function('smooth', 'surface')
    values = {}
    for m, n in pairs:
        ev_m = SurfaceKernelEvaluator(weight, m, config.cutoff)
        ev_n = SurfaceKernelEvaluator(weight, n, config.cutoff)
        x, t = sample_points(weight.d, points, rng)
        approx = ev_m.project(f)
        expected = approx(x, t)
        left = gn_apply(ev_n, approx, (x, t))
        right = ev_m.project(gn_field(ev_n, f))(x, t)
        values[_key(m=m, n=n)] = dict(
            outer=float(np.max(np.abs(left - expected))),
            inner=float(np.max(np.abs(right - expected))))
    tol = config.tolerance('generator-operator', 1e-7)
    passed = all(v['outer'] <= tol and v['inner'] <= tol
                 for v in values.values())
    return _record(values, passed=passed)


def commutation_check_record(config, rng, n=8, theta=0.1, points=20):
    """Euler differences commute with ``L_n``; the radial residual is kept
    as a diagnostic."""
    weight = surface_weight(config)
    f = current_approx.test_function('smooth', 'surface')
    ev = SurfaceKernelEvaluator(weight, n, config.cutoff)
    sample = sample_points(weight.d, points, rng, (0.05, 0.95))
    values = {}
    for r in (1, 2):
        values[_key(kind='euler', r=r)] = commutation_check(
            ev, f, 'euler-difference', theta, r, sample)
        values[_key(kind='radial', r=r)] = commutation_check(
            ev, f, 'radial-difference', theta, r, sample)
    tol = config.tolerance('commutation', 1e-8)
    passed = all(v <= tol for k, v in values.items() if 'euler' in k)
    return _record(values, passed=passed)


def spectral_eigen_check(config, rng, top=4, points=20):
    """Basis elements of degree ``n`` have eigenvalue ``-n(n+gamma+d-1)``."""
    weight = surface_weight(config)
    x, t = sample_points(weight.d, points, rng, (0.1, 0.9))
    values = {}
    for idx in surface_basis_indices(weight, top):
        if idx.ell > 1:
            continue
        s = surface_basis_field(idx, weight)
        eigenvalue = -idx.n * (idx.n + weight.gamma + weight.d - 1)
        exact = s(x, t)
        lhs = spectral_operator(s, weight, x, t)
        values[_key(n=idx.n, m=idx.m)] = float(
            np.max(np.abs(lhs - eigenvalue * exact)) /
            max(np.max(np.abs(exact)), 1e-12))
    passed = max(values.values()) <= config.tolerance('spectral-eigen', 1e-8)
    return _record(values, passed=passed)


def stability_check(config, rng):
    """``||L_n f||_p <= c ||f||_p`` over the suite."""
    weight = surface_weight(config)
    values = {}
    fitted = {}
    passed = True
    limit = config.tolerance('stability', 1.25)
    for name, f in suite_fields(config):
        report = stability_report(_surface_view(config, f), weight,
                                  config.degrees, config.p, config.cutoff)
        values[name] = list(report.values)
        fitted[name] = max(report.values)
        passed = passed and _bounded(report.values, limit)
    return _record(values, fitted, passed)


def corollary_check(config, rng, degrees=(4, 8, 16)):
    """``omega_r(f - L_n f; 1/n) <= c omega_r(f; 1/n)``."""
    weight = surface_weight(config)
    values = {}
    fitted = {}
    passed = True
    limit = config.tolerance('corollary', 1.25)
    for name, f in suite_fields(config):
        report = corollary_report(_surface_view(config, f), weight,
                                  config.r, degrees, config.p, config.cutoff)
        values[name] = list(report.values)
        fitted[name] = max(report.values)
        passed = passed and _bounded(report.values, limit)
    return _record(values, fitted, passed)


def well_posedness_check(config, rng, orders=(1, 2, 3, 4),
                         exponents=(1, 2, 4, np.inf)):
    """Integrability of ``t^{-r/2} D^r x_1`` against the flag."""
    weight = surface_weight(config)
    field = coordinate('surface', 1)
    values = {}
    passed = True
    for r in orders:
        for p in exponents:
            finite = well_posedness_flag(r, p, weight.d)
            entry = {'finite': finite}
            if finite and r <= 2:
                measure = SurfaceMeasure(weight, p=p)
                norm = measure.norm(_apex_scaled(
                    angular_derivative(field, 1, 2, r, measure.x,
                                       measure.t), measure.t, r))
                entry['norm'] = norm
                passed = passed and np.isfinite(norm)
            values[_key(p=p, r=r)] = entry
    return _record(values, passed=passed)


def distance_equivalence_check(config, rng, pairs=1000):
    """Two-sided comparison of the surface distance with its model."""
    low, high = distance_equivalence(surface_weight(config).d, pairs,
                                     config.seed)
    limit = config.tolerance('distance-equivalence', 10.0)
    return _record({'min': low, 'max': high}, {'lower': low, 'upper': high},
                   low >= 1.0 / limit and high <= limit)


def bernstein_check(config, rng, degrees=(4, 8, 16, 32), trials=20):
    """Angular and radial Bernstein ratios over random polynomials."""
    angular, radial = bernstein_report(surface_weight(config), config.r,
                                       degrees, trials, config.p,
                                       config.seed)
    limit = config.tolerance('bernstein', 1.2)
    values = dict(angular=list(angular.values), radial=list(radial.values))
    fitted = dict(angular=max(angular.values), radial=max(radial.values))
    return _record(values, fitted, _bounded(angular.values, limit) and
                   _bounded(radial.values, limit))


#
# Direct and inverse estimates
#
def direct_estimate_check(config, rng):
    """``E_n(f) / omega_1(f; 1/n)`` does not grow over the degrees."""
    values = {}
    fitted = {}
    passed = True
    limit = config.tolerance('direct-estimate', 1.25)
    h_values = [1.0 / n for n in config.degrees]
    for name, f in suite_fields(config):
        best = best_values(config, f, config.degrees)
        moduli = modulus_values(config, f, 1, h_values)
        ratios = [e / moduli[h] if moduli[h] > 0 else 0.0
                  for e, h in zip(best, h_values)]
        values[name] = dict(best=best, modulus=[moduli[h] for h in h_values],
                            ratio=ratios)
        fitted[name] = max(ratios)
        passed = passed and max_growth(ratios) <= limit
    return _record(values, fitted, passed)


def inverse_estimate_check(config, rng):
    """``omega_r(f; 1/n) <= c n^{-r} sum_{k<=n} (k+1)^{r-1} E_k(f)``.

    Evaluated in ``L^2``.
    """
    values = {}
    fitted = {}
    passed = True
    limit = config.tolerance('inverse-estimate', 1.25)
    degrees = config.degrees
    h_values = [1.0 / n for n in degrees]
    l2 = config._replace(p=2)
    for name, f in suite_fields(config):
        profile = best_approx_profile(_surface_view(config, f),
                                      surface_weight(config), max(degrees))
        for r in (1, 2):
            moduli = modulus_values(l2, f, r, h_values)
            bounds = [n ** (-r) * np.sum((np.arange(n + 1) + 1.0) ** (r - 1) *
                                         profile[:n + 1])
                      for n in degrees]
            ratios = [moduli[h] / b if b > 0 else 0.0
                      for h, b in zip(h_values, bounds)]
            values[_key(f=name, r=r)] = dict(
                modulus=[moduli[h] for h in h_values],
                bound=[float(b) for b in bounds], ratio=ratios)
            fitted[_key(f=name, r=r)] = max(ratios)
            passed = passed and _bounded(ratios, limit)
    return _record(values, fitted, passed)


def equivalence_check(config, rng):
    """``omega_r / K_r`` stays within ``[1/C, C]`` over the suite."""
    values = {}
    limit = config.tolerance('equivalence', 50.0)
    ratios = []
    for name, f in suite_fields(config):
        candidates = kfunctional_candidates(config, f)
        for r in (1, 2):
            moduli = modulus_values(config, f, r, config.h_values)
            for h in config.h_values:
                k = kfunctional_value(config, f, r, h, candidates)
                ratio = moduli[h] / k.value if k.value > 0 else 0.0
                entry = dict(modulus=moduli[h], kfunctional=k.value,
                             ratio=ratio, candidate=k.index)
                if config.domain == 'cone':
                    entry.update(_lift_ratios(config, f, r, h, candidates,
                                              k.value))
                values[_key(f=name, h=h, r=r)] = entry
                ratios.append(ratio)
    passed = all(1.0 / limit <= ratio <= limit for ratio in ratios)
    fitted = dict(lower=min(ratios), upper=max(ratios))
    return _record(values, fitted, passed)


def _lift_ratios(config, f, r, h, candidates, cone_k):
    """Cone quantities against the lifted surface ones."""
    w = ConeWeight(config.gamma, config.d)
    lifted = lift_field(f, config.d)
    cone = report_total(cone_modulus_report(f, w, r, [h], config.p,
                                            allow_empty=True))[0]
    surface = report_total(surface_modulus_report(
        lifted, w.surface_weight, r, [h], config.p, allow_empty=True))[0]
    k_surface = surface_kfunctional_detail(lifted, w.surface_weight, r, h,
                                           config.p, candidates).value
    return dict(modulus_lift_ratio=cone / surface if surface else 0.0,
                kfunctional_lift_ratio=cone_k / k_surface
                if k_surface else 0.0)


def modulus_properties_check(config, rng, exponents=range(0, 8)):
    """Boundedness, scaling at ``lambda = 2`` and the Marchaud inequality.

    Scaling is compared exactly, up to rounding; the drift limit bounds the
    Marchaud ratios.
    """
    r = config.r
    h0 = config_value('CONIC_APPROX_H0', 0.5)
    grid = sorted(set([2.0 ** (-k) for k in exponents] +
                      list(config.h_values)))
    values = {}
    fitted = {}
    passed = True
    limit = config.tolerance('modulus-properties', 1.25)
    weight = surface_weight(config)
    measure = SurfaceMeasure(weight, p=config.p)
    for name, f in suite_fields(config):
        g = _surface_view(config, f)
        size = measure.norm(g(measure.x, measure.t))
        lower = modulus_values(config, f, r, grid)
        upper = modulus_values(config, f, r + 1, grid)

        bound = max(lower[h] for h in grid if h <= h0) / size if size else 0.0

        scaling = True
        for h in grid:
            if 2 * h in lower:
                scaling = scaling and \
                    _at_most(lower[2 * h], 3 ** r * lower[h])

        marchaud = []
        for h in sorted(config.h_values, reverse=True):
            u = np.array([v for v in grid if v >= h])
            integrand = np.array([upper[v] for v in u]) / u ** (r + 1)
            integral = trapezoid(integrand, u)
            if integral > 0:
                marchaud.append(lower[h] / (h ** r * integral))
        values[name] = dict(bound=bound, scaling=scaling, marchaud=marchaud)
        fitted[name] = dict(bound=bound, marchaud=max(marchaud or [0.0]))
        passed = passed and np.isfinite(bound) and scaling and \
            _bounded(marchaud, limit)
    return _record(values, fitted, passed)


#
# Solid cone
#
def cone_lift_check(config, rng, n=4, points=20):
    """Kernel, integral, operator and derivative identities of the lift."""
    d = config.d
    w = ConeWeight(config.gamma, d)
    smooth = current_approx.test_function('smooth', 'cone')
    values = {}

    values['even_extension'] = even_extension_residual(smooth, d, 1000, rng)

    ev = SurfaceKernelEvaluator(w.surface_weight, n, config.cutoff)
    x, t = cone_sample_points(d, points, rng)
    y, s = cone_sample_points(d, points, rng)
    kernel = cone_kernel_eval(ev, (x, t), (y, s), d)
    swapped = cone_kernel_eval(ev, (y, s), (x, t), d)
    values['kernel_symmetry'] = float(np.max(np.abs(kernel - swapped)))

    basis = 0.0
    for degree in (1, 3, 6):
        ev_k = SurfaceKernelEvaluator(w.surface_weight, degree, config.cutoff)
        lifted = cone_kernel_eval(ev_k, (x[:10], t[:10]), (y[:10], s[:10]),
                                  d)
        direct = cone_basis_kernel(w, degree, (x[:10], t[:10]),
                                   (y[:10], s[:10]), config.cutoff)
        basis = max(basis, float(np.max(np.abs(lifted - 2 * direct)) /
                                 np.max(np.abs(lifted))))
    values['basis_kernel'] = basis

    q = random_cone_polynomial(4, rng, d)
    values['integral'] = abs(cone_integrate(q, w) -
                             cone_direct_integrate(q, w))

    lifted = cone_nearbest_apply(smooth, w, n, (x, t), cutoff=config.cutoff)
    direct = cone_nearbest_direct(smooth, w, n, (x, t),
                                  cutoff=config.cutoff)
    values['operator'] = float(np.max(np.abs(lifted - direct)))

    first, skipped = phi_derivative_identity_check(coordinate('cone', 1), 1,
                                                   1, (x, t), d)
    second, skipped_second = phi_derivative_identity_check(smooth, 1, 2,
                                                           (x, t), d)
    values['phi_first'] = first
    values['phi_second'] = second
    values['skipped'] = skipped + skipped_second

    values['dimension'] = cone_dimension(3, d)
    tol = config.tolerance('cone-lift', 1e-8)
    passed = (values['even_extension'] == 0.0 and
              values['kernel_symmetry'] <= 1e-9 and basis <= 1e-7 and
              values['integral'] <= 1e-9 and values['operator'] <= tol and
              first <= tol and second <= 1e-4 and
              values['dimension'] == len(cone_basis_indices(3)) == 20)
    return _record(values, passed=passed)


def determinism_check(config, rng):
    """Two runs of a seeded check produce identical records."""
    first = kernel_backends_check(config, np.random.default_rng(config.seed),
                                  degrees=(2, 5), pairs=10)
    second = kernel_backends_check(config,
                                   np.random.default_rng(config.seed),
                                   degrees=(2, 5), pairs=10)
    return _record({'identical': first == second}, passed=first == second)
