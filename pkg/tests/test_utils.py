# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Test utility functions."""

import numpy as np
import pytest
from flask import Flask

from conic_approx.utils import binomial_signs, config_value, drift, \
    geometric_grid, lp_norm, max_growth, obj_or_import_string, pochhammer


def myfunc():
    """Example function."""
    pass


def test_obj_or_import_string(app):
    """Test obj_or_import_string."""
    assert not obj_or_import_string(value=None)
    assert myfunc == obj_or_import_string(value=myfunc)
    assert obj_or_import_string('conic_approx.utils:drift') is drift


def test_pochhammer():
    """Rising factorials."""
    assert pochhammer(3, 0) == 1.0
    assert pochhammer(1, 5) == 120.0
    assert pochhammer(-2, 3) == 0.0
    assert pochhammer(0.5, 2) == pytest.approx(0.75)


def test_binomial_signs():
    """Coefficients of the r-th difference."""
    assert binomial_signs(1) == [1, -1]
    assert binomial_signs(3) == [1, -3, 3, -1]
    assert sum(binomial_signs(6)) == 0


def test_lp_norm():
    """Weighted norms with unit-mass weights."""
    weights = np.full(4, 0.25)
    values = np.array([1.0, -1.0, 2.0, 0.0])
    assert lp_norm(values, weights, 1) == pytest.approx(1.0)
    assert lp_norm(values, weights, 2) == pytest.approx(np.sqrt(1.5))
    assert lp_norm(values, None, np.inf) == 2.0


def test_geometric_grid():
    """Increments h 2^{-j/2}."""
    grid = geometric_grid(0.5, 3)
    assert np.allclose(grid, [0.5, 0.5 / np.sqrt(2), 0.25])


def test_drift_and_growth():
    """Last-to-first ratio and largest consecutive ratio."""
    assert drift([]) == 1.0
    assert drift([2.0, 3.0, 1.0]) == 0.5
    assert drift([0.0, 0.0]) == 1.0
    assert drift([0.0, 1.0]) == np.inf
    assert max_growth([1.0]) == 1.0
    assert max_growth([1.0, 3.0, 4.0]) == 3.0
    assert max_growth([0.0, 1.0]) == np.inf


def test_config_value(app):
    """Config lookups fall back outside an application context."""
    assert config_value('CONIC_APPROX_THETA_GRID_SIZE', 16) == 4
    assert config_value('UNKNOWN_KEY', 7) == 7

    other = Flask('other')
    with other.app_context():
        assert config_value('CONIC_APPROX_THETA_GRID_SIZE', 16) == 16


def test_config_value_without_app():
    """Defaults apply without an application."""
    assert config_value('CONIC_APPROX_FD_STEP', 1e-5) == 1e-5
