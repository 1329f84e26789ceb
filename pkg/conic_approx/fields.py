# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Scalar fields consumed and produced by the operators.

Call conventions by ``domain``:

* ``interval``: ``f(t)`` with ``t`` an array of points in ``[0, 1]``;
* ``sphere``: ``f(xi)`` with ``xi`` of shape ``(N, d)``;
* ``surface``: ``f(x, t)`` with ``x = t xi`` of shape ``(N, d)`` and ``t``
  of shape ``(N,)``;
* ``cone``: ``f(x, t)`` with ``||x|| <= t``.

Optional derivative capabilities:

``derivatives``
    mapping ``r -> callable`` for the r-th derivative in ``t`` (for surface
    fields: along the generator, ``d^r/dt^r f(t xi, t)`` at fixed ``xi``).
``grad``/``hess``
    ambient partial derivatives in the vector argument (``x`` or ``xi``)
    with shapes ``(N, d)`` and ``(N, d, d)``.
``differentiable``
    allows finite-difference fallbacks when explicit derivatives are
    missing.
"""

from __future__ import absolute_import, print_function

import numpy as np

from .errors import CapabilityError, ParameterDomainError

DOMAINS = ('interval', 'sphere', 'surface', 'cone')


class ScalarField(object):
    """Deterministic real valued function with optional derivatives."""

    def __init__(self, func, domain='surface', name=None, derivatives=None,
                 grad=None, hess=None, differentiable=False, degree=None):
        """Constructor.

        :param func: the callable.
        :param domain: one of ``interval``, ``sphere``, ``surface``, ``cone``.
        :param name: label used in reports.
        :param derivatives: mapping order -> callable for ``d^r/dt^r``.
        :param grad: callable returning the gradient in the vector argument.
        :param hess: callable returning the Hessian in the vector argument.
        :param differentiable: whether finite differences are acceptable.
        :param degree: polynomial degree, when the field is a polynomial.
        """
        if domain not in DOMAINS:
            raise ParameterDomainError('Unknown domain {!r}'.format(domain))
        self.func = func
        self.domain = domain
        self.name = name or getattr(func, '__name__', 'field')
        self.derivatives = dict(derivatives or {})
        self.grad = grad
        self.hess = hess
        self.differentiable = differentiable
        self.degree = degree

    def _shape(self, args):
        last = np.asarray(args[-1])
        if self.domain == 'sphere':
            return last.shape[:-1]
        return last.shape

    def __call__(self, *args):
        """Evaluate, broadcasting constants to the sample shape."""
        args = [np.asarray(a, dtype=float) for a in args]
        value = np.asarray(self.func(*args), dtype=float)
        return np.broadcast_to(value, self._shape(args)).copy()

    def derivative(self, r):
        """Field of the r-th ``t``-derivative."""
        if r == 0:
            return self
        if r not in self.derivatives:
            raise CapabilityError(
                '{} has no derivative of order {}'.format(self.name, r))
        return ScalarField(self.derivatives[r], domain=self.domain,
                           name='{}^({})'.format(self.name, r))

    def has_derivative(self, r):
        """Whether the r-th ``t``-derivative is available."""
        return r == 0 or r in self.derivatives

    def __repr__(self):
        """Short representation."""
        return '<ScalarField {} on {}>'.format(self.name, self.domain)


def as_field(f, domain):
    """Wrap plain callables into :class:`ScalarField`."""
    if isinstance(f, ScalarField):
        return f
    if callable(f):
        return ScalarField(f, domain=domain)
    value = float(f)
    return ScalarField(lambda *args: value, domain=domain,
                       name='const({})'.format(value),
                       derivatives={1: lambda *a: 0.0, 2: lambda *a: 0.0},
                       grad=_zero_grad, hess=_zero_hess, degree=0)


def _zero_grad(x, *rest):
    return np.zeros_like(np.asarray(x, dtype=float))


def _zero_hess(x, *rest):
    x = np.asarray(x, dtype=float)
    return np.zeros(x.shape + (x.shape[-1],))
