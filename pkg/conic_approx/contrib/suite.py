# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Named test functions.

Every builder takes the domain (``interval``, ``surface`` or ``cone``) and
returns a :class:`~conic_approx.fields.ScalarField`:

``smooth``
    ``(1 + x_1 + x_2^2) e^{-t}``; analytic.
``apex``
    ``x_1 / sqrt(t) + sin(pi t)``; continuous with limited smoothness at the
    apex.
``edge``
    ``(1 - t)^{3/2} (1 + x_1)``; limited smoothness at ``t = 1``.
``rough``
    ``|t - 1/2|^{3/2} (1 + x_1)``; limited smoothness inside.

On the interval only the ``t`` factor is kept (``sqrt(t)`` for ``apex``).
"""

from __future__ import absolute_import, print_function

import numpy as np

from ..errors import UsageError
from ..fields import ScalarField
from ..surface import directions

DOMAINS = ('interval', 'surface', 'cone')


def _check(domain):
    if domain not in DOMAINS:
        raise UsageError('Unknown domain {!r}'.format(domain), 'domain')


def _linear_grad(factor):
    def grad(x, t):
        out = np.zeros_like(np.atleast_2d(x))
        out[:, 0] = factor(t)
        return out
    return grad


def _zero_hess(x, t):
    x = np.atleast_2d(x)
    return np.zeros(x.shape + (x.shape[1],))


def smooth(domain='surface'):
    """``(1 + x_1 + x_2^2) e^{-t}``."""
    _check(domain)
    if domain == 'interval':
        return ScalarField(
            lambda t: np.exp(-t), domain='interval', name='smooth',
            derivatives={1: lambda t: -np.exp(-t), 2: lambda t: np.exp(-t)},
            differentiable=True)

    def func(x, t):
        return (1 + x[:, 0] + x[:, 1] ** 2) * np.exp(-t)

    def grad(x, t):
        out = np.zeros_like(x)
        out[:, 0] = np.exp(-t)
        out[:, 1] = 2 * x[:, 1] * np.exp(-t)
        return out

    def hess(x, t):
        out = np.zeros(x.shape + (x.shape[1],))
        out[:, 1, 1] = 2 * np.exp(-t)
        return out

    derivatives = {}
    if domain == 'surface':
        # along t -> (1 + t xi_1 + t^2 xi_2^2) e^{-t}
        def first(x, t):
            xi = directions(x, t)
            q = 1 + t * xi[:, 0] + t * t * xi[:, 1] ** 2
            return (xi[:, 0] + 2 * t * xi[:, 1] ** 2 - q) * np.exp(-t)

        def second(x, t):
            xi = directions(x, t)
            q = 1 + t * xi[:, 0] + t * t * xi[:, 1] ** 2
            slope = xi[:, 0] + 2 * t * xi[:, 1] ** 2
            return (2 * xi[:, 1] ** 2 - 2 * slope + q) * np.exp(-t)

        derivatives = {1: first, 2: second}
    return ScalarField(func, domain=domain, name='smooth',
                       derivatives=derivatives, grad=grad, hess=hess,
                       differentiable=True)


def _sqrt_inverse(t):
    return np.where(t > 0, 1.0 / np.sqrt(np.where(t > 0, t, 1.0)), 0.0)


def apex(domain='surface'):
    """``x_1 / sqrt(t) + sin(pi t)``, zero first term at the apex."""
    _check(domain)
    if domain == 'interval':
        return ScalarField(lambda t: np.sqrt(t) + np.sin(np.pi * t),
                           domain='interval', name='apex')

    def func(x, t):
        return x[:, 0] * _sqrt_inverse(t) + np.sin(np.pi * t)

    return ScalarField(func, domain=domain, name='apex',
                       grad=_linear_grad(_sqrt_inverse), hess=_zero_hess)


def edge(domain='surface'):
    """``(1 - t)^{3/2} (1 + x_1)``."""
    _check(domain)

    def radial(t):
        return np.clip(1 - t, 0, None) ** 1.5

    if domain == 'interval':
        return ScalarField(radial, domain='interval', name='edge')
    return ScalarField(lambda x, t: radial(t) * (1 + x[:, 0]), domain=domain,
                       name='edge', grad=_linear_grad(radial),
                       hess=_zero_hess)


def rough(domain='surface'):
    """``|t - 1/2|^{3/2} (1 + x_1)``."""
    _check(domain)

    def radial(t):
        return np.abs(t - 0.5) ** 1.5

    if domain == 'interval':
        return ScalarField(radial, domain='interval', name='rough')
    return ScalarField(lambda x, t: radial(t) * (1 + x[:, 0]), domain=domain,
                       name='rough', grad=_linear_grad(radial),
                       hess=_zero_hess)


def coordinate(domain='surface', i=1):
    """``x_i``; the well-posedness test field of the K-functional."""
    _check(domain)
    if domain == 'interval':
        return ScalarField(lambda t: t, domain='interval', name='t',
                           derivatives={1: lambda t: 1.0, 2: lambda t: 0.0},
                           degree=1)

    def grad(x, t):
        out = np.zeros_like(np.atleast_2d(x))
        out[:, i - 1] = 1.0
        return out

    return ScalarField(lambda x, t: x[:, i - 1], domain=domain,
                       name='x_{}'.format(i), grad=grad, hess=_zero_hess,
                       degree=1)


def _monomials(n, d):
    """Exponents ``(a_1, ..., a_d, c)`` of total degree ``<= n``."""
    if d == 0:
        return [(c,) for c in range(n + 1)]
    return [(a,) + rest for a in range(n + 1)
            for rest in _monomials(n - a, d - 1)]


def random_cone_polynomial(n, rng, d=2, block=4096):
    """Polynomial ``sum c_a x^a t^c`` of degree ``n`` on the cone.

    The coefficients are standard normal divided by the number of terms.
    Points are evaluated in blocks of ``block`` against power tables.
    """
    exponents = np.array(_monomials(n, d), dtype=int)
    coefficients = rng.standard_normal(len(exponents)) / len(exponents)

    def func(x, t):
        values = np.column_stack([np.atleast_2d(x), t])
        out = np.empty(len(values))
        for start in range(0, len(values), block):
            chunk = values[start:start + block]
            powers = chunk[:, :, None] ** np.arange(n + 1)
            terms = np.ones((len(chunk), len(exponents)))
            for k in range(d + 1):
                terms *= powers[:, k, exponents[:, k]]
            out[start:start + block] = terms.dot(coefficients)
        return out

    return ScalarField(func, domain='cone', name='random-cone-{}'.format(n),
                       degree=n)
