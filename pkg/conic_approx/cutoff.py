# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Cut-off functions of the localized kernels.

Every cut-off equals 1 on ``[0, 1]``, vanishes on ``[2, inf)`` and decreases
in between. Two kinds are available:

* ``smooth-exponential-bump``: the ``C^inf`` transition built from
  ``sigma(u) = exp(-1/u)``; the default.
* ``raised-cosine``: ``(1 + cos(pi (t - 1))) / 2`` on ``(1, 2)``; only
  ``C^1``.
"""

from __future__ import absolute_import, print_function

from collections import namedtuple

import numpy as np

from .errors import ParameterDomainError

CUTOFF_KINDS = ('smooth-exponential-bump', 'raised-cosine')


def _sigma(u):
    positive = u > 0
    safe = np.where(positive, u, 1.0)
    return np.where(positive, np.exp(-1.0 / safe), 0.0)


class CutoffSpec(namedtuple('CutoffSpec', ['kind'])):
    """Named cut-off function."""

    __slots__ = ()

    def __new__(cls, kind='smooth-exponential-bump'):
        """Validate the kind."""
        if isinstance(kind, CutoffSpec):
            return kind
        if kind not in CUTOFF_KINDS:
            raise ParameterDomainError(
                'Unknown cut-off {!r}. Valid values: {}'.format(
                    kind, ', '.join(CUTOFF_KINDS)))
        return super(CutoffSpec, cls).__new__(cls, kind)

    def __call__(self, t):
        """Shortcut for :func:`cutoff_eval`."""
        return cutoff_eval(self, t)


def cutoff_eval(spec, t):
    """Evaluate the cut-off at ``t >= 0`` (scalar or array)."""
    spec = CutoffSpec(spec)
    arr = np.asarray(t, dtype=float)
    u = np.clip(arr - 1, 0.0, 1.0)
    if spec.kind == 'raised-cosine':
        middle = (1 + np.cos(np.pi * u)) / 2
    else:
        left, right = _sigma(1 - u), _sigma(u)
        middle = left / (left + right)
    value = np.where(arr <= 1, 1.0, np.where(arr >= 2, 0.0, middle))
    return float(value) if value.ndim == 0 else value
