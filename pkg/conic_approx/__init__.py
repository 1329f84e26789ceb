# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

r"""Weighted polynomial approximation on conic domains.

1. Domains
~~~~~~~~~~

Conic-Approx works on three domains:

    * ``interval``: ``[0, 1]`` with the Jacobi weight ``t^a (1-t)^b``;
    * ``surface``: the conic surface ``||x|| = t``, ``0 <= t <= 1`` in
      ``R^{d+1}`` with the weight ``t^{-1} (1-t)^gamma``, for
      ``d = 2, 3, 4``;
    * ``cone``: the solid cone ``||x|| <= t`` in ``R^3`` with the weight
      ``(1-t)^gamma (t^2 - ||x||^2)^{-1/2}``, reached through its lift to
      the conic surface one dimension up.

All measures have unit mass.

Functions are :class:`~conic_approx.fields.ScalarField` instances. On the
surface and the cone they are called as ``f(x, t)`` with ``x`` of shape
``(N, d)``:

.. code-block:: python

    import numpy as np
    from conic_approx.fields import ScalarField
    from conic_approx.surface import SurfaceKernelEvaluator, SurfaceWeight

    f = ScalarField(lambda x, t: np.exp(-t) * (1 + x[:, 0]))
    ev = SurfaceKernelEvaluator(SurfaceWeight(gamma=1.0, d=2), n=8)
    approx = ev.project(f)          # near-best polynomial of degree 2n - 1

2. Moduli and K-functionals
~~~~~~~~~~~~~~~~~~~~~~~~~~~

:func:`~conic_approx.surface.surface_modulus_report` combines Euler-angle
differences with increment ``theta / sqrt(t)`` and Ditzian-Totik radial
differences with increment ``theta phi(t)``;
:func:`~conic_approx.surface.surface_kfunctional_detail` bounds the matching
K-functional from above over a list of candidate polynomials. The cone
versions live in :mod:`conic_approx.cone`.

3. Checks and experiments
~~~~~~~~~~~~~~~~~~~~~~~~~

Checks are registered in ``CONIC_APPROX_CHECKS`` and test functions in
``CONIC_APPROX_SUITE``:

.. code-block:: python

    CONIC_APPROX_CHECKS = {
        'reproduction': dict(
            func='conic_approx.checks:reproduction_check',
            anchor='near-best operator reproduces polynomials',
            params=dict(degrees=(2, 4, 8, 16), trials=5),
        ),
    }

The ``conic-approx`` command runs them from a JSON experiment file:

.. code-block:: console

    $ conic-approx verify --config surface.json --out results
    $ conic-approx convergence --config surface.json --format json

See :mod:`conic_approx.experiments` for the file format.
"""

from __future__ import absolute_import, print_function

from .ext import ConicApprox
from .proxies import current_approx
from .version import __version__

__all__ = (
    '__version__',
    'current_approx',
    'ConicApprox',
)
