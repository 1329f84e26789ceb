# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Utilities for Conic-Approx."""

from __future__ import absolute_import, print_function

import numpy as np
from flask import current_app
from scipy.special import comb
from werkzeug.utils import import_string


def obj_or_import_string(value, default=None):
    """Import string or return object.

    :params value: Import path or class object to instantiate.
    :params default: Default object to return if the import fails.
    :returns: The imported object.
    """
    if isinstance(value, str):
        return import_string(value)
    elif value:
        return value
    return default


def pochhammer(a, n):
    """Rising factorial ``(a)_n`` computed by iterated products."""
    result = 1.0
    for j in range(n):
        result *= a + j
    return result


def binomial_signs(r):
    """Coefficients ``(-1)^k C(r, k)`` of an order ``r`` difference."""
    return [(-1) ** k * comb(r, k, exact=True) for k in range(r + 1)]


def lp_norm(values, weights, p):
    """Weighted ``L^p`` norm of sampled values.

    ``weights`` must already be normalized to unit total mass. ``p`` equal
    to ``numpy.inf`` gives the maximum of ``|values|``.
    """
    values = np.abs(np.asarray(values, dtype=float))
    if np.isinf(p):
        return float(values.max()) if values.size else 0.0
    return float(np.sum(weights * values ** p) ** (1.0 / p))


def geometric_grid(h, size):
    """Increments ``h 2^{-j/2}`` for ``j = 0, ..., size - 1``."""
    return h * 2.0 ** (-0.5 * np.arange(size))


def drift(sequence):
    """Last-to-first ratio of a positive sequence (1 for empty input)."""
    seq = [float(v) for v in sequence]
    if not seq or seq[0] == 0.0:
        return 1.0 if not seq or seq[-1] == 0.0 else np.inf
    return seq[-1] / seq[0]


def max_growth(sequence):
    """Largest ratio between consecutive entries of a positive sequence."""
    seq = np.asarray(sequence, dtype=float)
    if seq.size < 2:
        return 1.0
    with np.errstate(divide='ignore', invalid='ignore'):
        ratios = np.where(seq[:-1] > 0, seq[1:] / seq[:-1],
                          np.where(seq[1:] > 0, np.inf, 1.0))
    return float(ratios.max())


def config_value(key, default):
    """Read ``key`` from the current app config, or ``default`` outside one."""
    try:
        return current_app.config.get(key, default)
    except RuntimeError:
        return default
