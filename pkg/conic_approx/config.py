# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Default configuration of Conic-Approx."""

from __future__ import absolute_import, print_function

from .contrib.config import CHECKS_CONFIG, SUITE_CONFIG, VERIFY_CHECKS

CONIC_APPROX_CUTOFF = 'smooth-exponential-bump'
"""Cut-off used by every localized kernel.

Either ``smooth-exponential-bump`` or ``raised-cosine``.
"""

CONIC_APPROX_KERNEL_BACKEND = 'basis-sum'
"""Surface kernel backend: ``basis-sum`` or ``addition-formula``."""

CONIC_APPROX_THETA_GRID_SIZE = 16
"""Number of increments ``h 2^{-j/2}`` in the supremum of a modulus."""

CONIC_APPROX_MAIN_PART_CONSTANT = 12.0
"""Constant ``c`` of the main-part interval ``[c r^2 h^2, 1 - c r^2 h^2]``."""

CONIC_APPROX_FD_STEP = 1e-5
"""Step of first order finite differences."""

CONIC_APPROX_FD_STEP_SECOND = 1e-4
"""Step of second order finite differences."""

CONIC_APPROX_SUP_GRID = 2049
"""Equispaced grid size used for ``p = inf`` norms on the interval."""

CONIC_APPROX_SURFACE_SUP_GRID = 257
"""Equispaced ``t`` grid size used for ``p = inf`` norms on the surface."""

CONIC_APPROX_INTERVAL_NODES = 256
"""Gauss-Jacobi nodes of interval ``L^p`` norms."""

CONIC_APPROX_SURFACE_NODES = 128
"""Gauss-Jacobi ``t`` nodes of surface ``L^p`` norms."""

CONIC_APPROX_SPHERE_EXACTNESS = 32
"""Exactness degree of the sphere rule in surface ``L^p`` norms."""

CONIC_APPROX_BOUNDED_DRIFT = 1.25
"""Largest last-to-first ratio of a sequence still called bounded."""

CONIC_APPROX_H0 = 0.5
"""Increments up to ``h0`` enter the boundedness of the modulus."""

CONIC_APPROX_CHECKS = CHECKS_CONFIG
"""Registered checks.

Each key is the name of a check. Values are dicts with:

``func``: the check function or its import string. It is called as
    ``func(config, rng, **params)`` and returns a
    :class:`~conic_approx.checks.CheckRecord`.

``anchor``: the result the check tests, or ``plumbing``.

``params``: keyword arguments passed to ``func``.
"""

CONIC_APPROX_SUITE = SUITE_CONFIG
"""Named test functions.

``cls`` is a builder (or its import string) called with the domain and
``params``.
"""

CONIC_APPROX_VERIFY_CHECKS = VERIFY_CHECKS
"""Checks run by ``verify`` per domain when the experiment names none."""

CONIC_APPROX_DEFAULT_EXPERIMENT = dict(
    domain='surface',
    d=2,
    gamma=0.0,
    p=2,
    r=1,
    degrees=[4, 8, 16, 32],
    functions=['smooth', 'apex', 'edge', 'rough'],
    cutoff='smooth-exponential-bump',
    seed=0,
    tolerances={},
    checks=[],
    h_values=[0.0625, 0.125, 0.25],
)
"""Values of the keys an experiment file leaves out."""
