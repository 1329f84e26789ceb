# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Localized Jacobi kernels, near-best operators and moduli on an interval.

The default convention is ``[0, 1]`` with the weight
``c_{alpha,beta} t^alpha (1-t)^beta``; kernels there compose the
``[-1, 1]`` kernel with ``t -> 1 - 2t``.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple

import numpy as np

from .cutoff import CutoffSpec, cutoff_eval
from .errors import CapabilityError, ConfigurationError, \
    DegenerateInputError, ParameterDomainError
from .fields import ScalarField, as_field
from .jacobi import INTERVALS, JacobiParams, gauss_jacobi_rule, \
    jacobi_norms, jacobi_table
from .utils import binomial_signs, config_value, geometric_grid, lp_norm, \
    max_growth

ModulusReport = namedtuple(
    'ModulusReport', ['h_values', 'component_values', 'p', 'r'])
"""Modulus values per increment, split by component."""

RatioReport = namedtuple('RatioReport', ['n_values', 'values', 'growth'])
"""A sequence indexed by degree together with its largest growth."""

KFunctionalResult = namedtuple(
    'KFunctionalResult', ['value', 'index', 'terms'])
"""Candidate minimum, the minimizing candidate index and its terms."""


def report_total(report):
    """Sum of all components of a :class:`ModulusReport` per increment."""
    values = [np.asarray(v, dtype=float)
              for v in report.component_values.values()]
    return np.sum(values, axis=0)


def _as_params(params):
    if isinstance(params, JacobiParams):
        return params
    return JacobiParams(*params)


def _check_unit(*values):
    for value in values:
        arr = np.asarray(value, dtype=float)
        if np.any(arr < -1e-12) or np.any(arr > 1 + 1e-12):
            raise ParameterDomainError('Points must lie in [0, 1].')


def phi(t):
    """``sqrt(t (1 - t))``."""
    t = np.asarray(t, dtype=float)
    return np.sqrt(np.clip(t * (1 - t), 0.0, None))


def interval_distance(s, t):
    """``arccos(sqrt(s t) + sqrt((1-s)(1-t)))`` on ``[0, 1]``."""
    _check_unit(s, t)
    s = np.clip(np.asarray(s, dtype=float), 0, 1)
    t = np.clip(np.asarray(t, dtype=float), 0, 1)
    inner = np.sqrt(s) * np.sqrt(t) + np.sqrt(1 - s) * np.sqrt(1 - t)
    value = np.arccos(np.clip(inner, -1.0, 1.0))
    return float(value) if value.ndim == 0 else value


def varpi_n(params, n, t):
    """``(t + n^-2)^{alpha+1/2} (1 - t + n^-2)^{beta+1/2}`` on ``[0, 1]``."""
    eps = 1.0 / max(n, 1) ** 2
    t = np.asarray(t, dtype=float)
    return (t + eps) ** (params.alpha + 0.5) * \
        (1 - t + eps) ** (params.beta + 0.5)


def main_part_interval(r, h, constant=None):
    """``J_{rh} = [c r^2 h^2, 1 - c r^2 h^2]``; ``c`` defaults to 12."""
    if constant is None:
        constant = config_value('CONIC_APPROX_MAIN_PART_CONSTANT', 12.0)
    lo = constant * r * r * h * h
    return lo, 1.0 - lo


class JacobiSeries(ScalarField):
    """Finite Jacobi expansion ``sum_k a_k P_k`` with exact derivatives."""

    def __init__(self, params, coefficients, interval='[0,1]', name=None):
        """Constructor.

        :param params: :class:`JacobiParams` of the polynomials.
        :param coefficients: expansion coefficients ``a_0, ..., a_K``.
        :param interval: ``'[0,1]'`` (argument ``1 - 2t``) or ``'[-1,1]'``.
        """
        self.params = _as_params(params)
        self.coefficients = np.atleast_1d(
            np.asarray(coefficients, dtype=float))
        self.interval = interval
        super(JacobiSeries, self).__init__(
            self._evaluate, domain='interval', name=name or 'jacobi-series',
            degree=len(self.coefficients) - 1)

    def _evaluate(self, t):
        arg = 1 - 2 * t if self.interval == '[0,1]' else t
        table = jacobi_table(self.params, len(self.coefficients) - 1, arg)
        return np.tensordot(self.coefficients, table, axes=1)

    def _differentiate(self):
        a = self.coefficients
        if len(a) == 1:
            return JacobiSeries(self.params.shifted(1), [0.0],
                                self.interval, self.name + "'")
        k = np.arange(1, len(a))
        speed = k + self.params.alpha + self.params.beta + 1
        factor = -speed if self.interval == '[0,1]' else speed / 2.0
        return JacobiSeries(self.params.shifted(1), a[1:] * factor,
                            self.interval, self.name + "'")

    def derivative(self, r):
        """The r-th derivative, again a :class:`JacobiSeries`."""
        series = self
        for _ in range(r):
            series = series._differentiate()
        return series

    def has_derivative(self, r):
        """Series are differentiable to any order."""
        return True


class IntervalKernelEvaluator(object):
    """Localized kernel ``L_n^{(alpha,beta)}`` of degree ``n``.

    Coefficients ``a(k/n)/h_k`` are precomputed for ``k <= 2n``; the last
    one vanishes because the cut-off does.
    """

    def __init__(self, params, n, cutoff=None, interval='[0,1]'):
        """Constructor.

        :param params: weight exponents.
        :param n: degree, nonnegative.
        :param cutoff: :class:`~conic_approx.cutoff.CutoffSpec` or its name.
        :param interval: ``'[0,1]'`` or ``'[-1,1]'``.
        """
        if n < 0 or int(n) != n:
            raise ParameterDomainError('Degree must be nonnegative.')
        if interval not in INTERVALS:
            raise ConfigurationError('Unknown interval {}'.format(interval))
        self.params = _as_params(params)
        self.n = int(n)
        self.cutoff = CutoffSpec(cutoff or config_value(
            'CONIC_APPROX_CUTOFF', 'smooth-exponential-bump'))
        self.interval = interval
        self.degree = 2 * self.n
        self.norms = jacobi_norms(self.params, self.degree)
        if self.n == 0:
            factors = np.ones(1)
        else:
            factors = cutoff_eval(
                self.cutoff, np.arange(self.degree + 1) / float(self.n))
        self.coefficients = factors / self.norms
        self.coefficients.setflags(write=False)

    @property
    def normalization(self):
        """Inverse mass of the weight in the evaluator's convention."""
        if self.interval == '[0,1]':
            return self.params.normalization
        return self.params.interval_normalization

    def argument(self, t):
        """Map points of the evaluator's interval to ``[-1, 1]``."""
        t = np.asarray(t, dtype=float)
        return 1 - 2 * t if self.interval == '[0,1]' else t

    def kernel(self, s, t):
        """Kernel matrix of shape ``s.shape + t.shape``."""
        ps = jacobi_table(self.params, self.degree, self.argument(s))
        pt = jacobi_table(self.params, self.degree, self.argument(t))
        scaled = ps * self.coefficients.reshape(
            (-1,) + (1,) * (ps.ndim - 1))
        return np.tensordot(scaled, pt, axes=(0, 0))

    def check_rule(self, rule):
        """Raise unless ``rule`` integrates against this evaluator's weight."""
        if not rule.matches(self.params, self.interval):
            raise ConfigurationError(
                'Rule for {} on {} does not match evaluator weight {} on '
                '{}'.format(tuple(rule.params), rule.interval,
                            tuple(self.params), self.interval))

    def default_rule(self):
        """Gauss-Jacobi rule with ``4n + 64`` nodes."""
        return gauss_jacobi_rule(self.params, 4 * self.n + 64, self.interval)

    def project(self, f, rule=None):
        """The near-best polynomial ``L_n f`` as a :class:`JacobiSeries`."""
        rule = rule or self.default_rule()
        self.check_rule(rule)
        f = as_field(f, 'interval')
        values = f(rule.nodes)
        table = jacobi_table(self.params, self.degree,
                             self.argument(rule.nodes))
        moments = table.dot(values * rule.normalized_weights)
        return JacobiSeries(self.params, self.coefficients * moments,
                            self.interval,
                            name='L_{}({})'.format(self.n, f.name))


def localized_kernel_eval(ev, s, t):
    """``sum_k a(k/n) P_k(s) P_k(t) / h_k`` in the evaluator's convention."""
    value = ev.kernel(s, t)
    return float(value) if value.ndim == 0 else value


def localized_operator_apply(ev, f, t, rule):
    """``c int f(s) L_n(s, t) w(s) ds`` computed with ``rule``."""
    ev.check_rule(rule)
    value = ev.project(f, rule)(t)
    return float(value) if value.ndim == 0 else value


def dt_difference(f, t, theta, r):
    """Central difference ``Delta^r_{theta phi} f(t)``.

    The difference is 0 wherever the stencil ``t +- r theta phi(t) / 2``
    leaves ``[0, 1]``.
    """
    t = np.asarray(t, dtype=float)
    step = theta * phi(t)
    half = r * step / 2.0
    inside = (t - half >= -1e-15) & (t + half <= 1 + 1e-15)
    total = np.zeros_like(t)
    for k, sign in enumerate(binomial_signs(r)):
        total = total + sign * f(np.clip(t + (r / 2.0 - k) * step, 0, 1))
    return np.where(inside, total, 0.0)


class IntervalMeasure(object):
    """Nodes and normalized weights for ``L^p`` norms on (part of) [0,1]."""

    def __init__(self, weight=None, lo=0.0, hi=1.0, p=2, num_nodes=None,
                 sup_grid=None):
        num_nodes = num_nodes or config_value(
            'CONIC_APPROX_INTERVAL_NODES', 256)
        sup_grid = sup_grid or config_value('CONIC_APPROX_SUP_GRID', 2049)
        self.p = p
        if np.isinf(p):
            self.nodes = np.linspace(lo, hi, sup_grid)
            self.weights = None
        elif weight is None:
            rule = gauss_jacobi_rule(JacobiParams(0, 0), num_nodes)
            self.nodes = lo + (hi - lo) * (rule.nodes + 1) / 2
            self.weights = rule.weights * (hi - lo) / 2
        elif lo == 0.0 and hi == 1.0:
            rule = gauss_jacobi_rule(weight, num_nodes, '[0,1]')
            self.nodes = rule.nodes
            self.weights = rule.normalized_weights
        else:
            rule = gauss_jacobi_rule(JacobiParams(0, 0), num_nodes)
            self.nodes = lo + (hi - lo) * (rule.nodes + 1) / 2
            self.weights = (rule.weights * (hi - lo) / 2 *
                            weight.normalization *
                            weight.weight(self.nodes, '[0,1]'))

    def norm(self, values):
        return lp_norm(values, self.weights, self.p)


def _measure(weight, main_part, r, h, p, num_nodes, constant):
    if main_part:
        if weight is None:
            raise ConfigurationError(
                'The main-part modulus requires a weight.')
        lo, hi = main_part_interval(r, h, constant)
        if lo >= hi:
            raise DegenerateInputError(
                'Main-part interval [{:.4g}, {:.4g}] is empty for r={}, '
                'h={}'.format(lo, hi, r, h))
        return IntervalMeasure(weight, lo, hi, p, num_nodes)
    return IntervalMeasure(weight, 0.0, 1.0, p, num_nodes)


def _theta_grid(h, size=None):
    size = size or config_value('CONIC_APPROX_THETA_GRID_SIZE', 16)
    return geometric_grid(h, size)


def dt_modulus(f, r, h, p=2, weight=None, main_part=False, num_nodes=None,
               constant=None, grid_size=None):
    """Ditzian-Totik modulus ``omega^r_phi(f; h)_p``.

    :param f: interval field.
    :param r: difference order.
    :param h: increment, positive.
    :param p: norm exponent in ``[1, inf]``.
    :param weight: :class:`JacobiParams` of the weight, or ``None`` for the
        Lebesgue measure.
    :param main_part: restrict the norm to ``J_{rh}``.
    """
    if h <= 0:
        raise ParameterDomainError('Increment must be positive.')
    f = as_field(f, 'interval')
    weight = _as_params(weight) if weight is not None else None
    measure = _measure(weight, main_part, r, h, p, num_nodes, constant)
    return max(measure.norm(dt_difference(f, measure.nodes, theta, r))
               for theta in _theta_grid(h, grid_size))


def dt_modulus_report(f, r, h_values, p=2, weight=None, main_part=False,
                      num_nodes=None, constant=None, grid_size=None):
    """Modulus over several increments sharing one union grid of angles."""
    f = as_field(f, 'interval')
    weight = _as_params(weight) if weight is not None else None
    h_values = sorted(float(h) for h in h_values)
    thetas = np.unique(np.concatenate(
        [_theta_grid(h, grid_size) for h in h_values]))
    values = []
    cache = {}
    for h in h_values:
        measure = _measure(weight, main_part, r, h, p, num_nodes, constant)
        best = 0.0
        for theta in thetas[thetas <= h * (1 + 1e-12)]:
            key = (theta, measure.nodes[0]) if main_part else theta
            if key not in cache:
                cache[key] = measure.norm(
                    dt_difference(f, measure.nodes, theta, r))
            best = max(best, cache[key])
        values.append(best)
    return ModulusReport(h_values=h_values,
                         component_values={'radial': values}, p=p, r=r)


def dt_kfunctional_detail(f, r, h, p, weight, candidates=None, jmax=None,
                          num_nodes=None):
    """Candidate minimum of ``||f - g|| + h^r ||phi^r g^(r)||``."""
    f = as_field(f, 'interval')
    weight = _as_params(weight)
    if candidates is None:
        jmax = 6 if jmax is None else jmax
        candidates = []
        for j in range(jmax + 1):
            ev = IntervalKernelEvaluator(weight, 2 ** j)
            candidates.append(ev.project(f))
    if not candidates:
        raise ConfigurationError('The K-functional needs candidates.')
    measure = IntervalMeasure(weight, 0.0, 1.0, p, num_nodes)
    f_values = f(measure.nodes)
    best = None
    for index, g in enumerate(candidates):
        g = as_field(g, 'interval')
        if not g.has_derivative(r):
            raise CapabilityError(
                'Candidate {} lacks derivative {}'.format(g.name, r))
        distance = measure.norm(f_values - g(measure.nodes))
        smooth = h ** r * measure.norm(
            phi(measure.nodes) ** r * g.derivative(r)(measure.nodes))
        value = distance + smooth
        if best is None or value < best.value:
            best = KFunctionalResult(value, index, (distance, smooth))
    return best


def dt_kfunctional(f, r, h, p, weight, candidates=None, jmax=None,
                   num_nodes=None):
    """Weighted K-functional ``K^r_phi(f; h)`` as a candidate minimum."""
    return dt_kfunctional_detail(f, r, h, p, weight, candidates, jmax,
                                 num_nodes).value


def jacobi_kernel_integral_check(params, gamma_shift=0.0, delta_shift=0.0,
                                 n_values=(8, 16, 32, 64), s_points=101):
    """Maxima of ``int |L_n(s,t)| w_{a+g,b+d}(t) dt / w_{g-1/2,d-1/2}(n;s)``.

    :returns: :class:`RatioReport` over ``n_values``.
    """
    params = _as_params(params)
    if params.alpha < -0.5 or params.beta < -0.5:
        raise ParameterDomainError('The bound needs alpha, beta >= -1/2.')
    if gamma_shift < 0 or delta_shift < 0:
        raise ParameterDomainError('Shifts must be nonnegative.')
    shifted = JacobiParams(params.alpha + gamma_shift,
                           params.beta + delta_shift)
    target = JacobiParams(gamma_shift - 0.5, delta_shift - 0.5)
    s = np.linspace(0.0, 1.0, s_points)
    maxima = []
    for n in n_values:
        ev = IntervalKernelEvaluator(params, n)
        rule = gauss_jacobi_rule(shifted, 4 * n + 64, '[0,1]')
        integrals = np.abs(ev.kernel(s, rule.nodes)).dot(rule.weights)
        maxima.append(float(np.max(integrals / varpi_n(target, n, s))))
    return RatioReport(list(n_values), maxima, max_growth(maxima))
