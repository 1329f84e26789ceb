# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Config for contributed checks and test functions."""

from conic_approx.contrib.suite import apex, coordinate, edge, rough, smooth

CHECKS_CONFIG = {
    'jacobi-identities': dict(
        func='conic_approx.checks:jacobi_identities_check',
        anchor='Jacobi orthogonality, hypergeometric form and endpoints',
        params=dict(top=40),
    ),
    'cutoff-flatness': dict(
        func='conic_approx.checks:cutoff_flatness_check',
        anchor='admissible cut-off conditions',
    ),
    'interval-operator': dict(
        func='conic_approx.checks:interval_operator_check',
        anchor='localized Jacobi kernels and the weighted modulus',
        params=dict(degrees=(1, 2, 4, 8, 16), trials=5),
    ),
    'interval-equivalence': dict(
        func='conic_approx.checks:interval_equivalence_check',
        anchor='weighted modulus and K-functional on the interval',
        params=dict(orders=(1, 2), jmax=5),
    ),
    'theta-refinement': dict(
        func='conic_approx.checks:theta_refinement_check',
        anchor='angle grid of the moduli',
        params=dict(sizes=(16, 32)),
    ),
    'sphere-harmonics': dict(
        func='conic_approx.checks:sphere_harmonics_check',
        anchor='spherical harmonics and the addition formula',
    ),
    'surface-bookkeeping': dict(
        func='conic_approx.checks:surface_bookkeeping_check',
        anchor='orthogonal basis on the conic surface',
    ),
    'kernel-backends': dict(
        func='conic_approx.checks:kernel_backends_check',
        anchor='addition formula of the surface kernel',
        params=dict(degrees=(2, 5, 10, 20), pairs=50),
    ),
    'reproduction': dict(
        func='conic_approx.checks:reproduction_check',
        anchor='near-best operator reproduces polynomials',
        params=dict(degrees=(2, 4, 8, 16), trials=5),
    ),
    'localization': dict(
        func='conic_approx.checks:localization_check',
        anchor='localization of the surface kernel',
        params=dict(degrees=(8, 16, 32, 64), kappa=4),
    ),
    'kernel-bounds': dict(
        func='conic_approx.checks:kernel_bounds_check',
        anchor='product and integral bounds of the kernel',
        params=dict(degrees=(8, 16, 32, 64), kappa=4),
    ),
    'generator-operator': dict(
        func='conic_approx.checks:generator_operator_check',
        anchor='generator operator composed with the near-best operator',
        params=dict(pairs=((2, 4), (4, 8), (8, 16))),
    ),
    'commutation': dict(
        func='conic_approx.checks:commutation_check_record',
        anchor='differences commute with the near-best operator',
        params=dict(n=8, theta=0.1),
    ),
    'spectral-eigen': dict(
        func='conic_approx.checks:spectral_eigen_check',
        anchor='basis elements are eigenfunctions of the surface operator',
        params=dict(top=4),
    ),
    'stability': dict(
        func='conic_approx.checks:stability_check',
        anchor='near-best operator is bounded',
    ),
    'corollary': dict(
        func='conic_approx.checks:corollary_check',
        anchor='modulus of the approximation error',
    ),
    'well-posedness': dict(
        func='conic_approx.checks:well_posedness_check',
        anchor='integrability of the apex-scaled angular derivatives',
    ),
    'distance-equivalence': dict(
        func='conic_approx.checks:distance_equivalence_check',
        anchor='distance on the conic surface',
        params=dict(pairs=1000),
    ),
    'bernstein': dict(
        func='conic_approx.checks:bernstein_check',
        anchor='Bernstein inequalities',
        params=dict(degrees=(4, 8, 16, 32), trials=20),
    ),
    'direct-estimate': dict(
        func='conic_approx.checks:direct_estimate_check',
        anchor='direct theorem',
    ),
    'inverse-estimate': dict(
        func='conic_approx.checks:inverse_estimate_check',
        anchor='inverse theorem',
    ),
    'equivalence': dict(
        func='conic_approx.checks:equivalence_check',
        anchor='equivalence of modulus and K-functional',
    ),
    'modulus-properties': dict(
        func='conic_approx.checks:modulus_properties_check',
        anchor='boundedness, scaling and Marchaud inequality of the modulus',
    ),
    'cone-lift': dict(
        func='conic_approx.checks:cone_lift_check',
        anchor='lift from the solid cone to the conic surface',
        params=dict(n=4),
    ),
    'determinism': dict(
        func='conic_approx.checks:determinism_check',
        anchor='plumbing',
    ),
}

SUITE_CONFIG = {
    'smooth': dict(cls=smooth),
    'apex': dict(cls=apex),
    'edge': dict(cls=edge),
    'rough': dict(cls=rough),
    'x1': dict(cls=coordinate, params=dict(i=1)),
}

VERIFY_CHECKS = {
    'interval': [
        'jacobi-identities', 'cutoff-flatness', 'interval-operator',
        'interval-equivalence', 'theta-refinement', 'determinism',
    ],
    'surface': [
        'jacobi-identities', 'cutoff-flatness', 'interval-operator',
        'sphere-harmonics', 'surface-bookkeeping', 'kernel-backends',
        'reproduction', 'localization', 'kernel-bounds',
        'generator-operator', 'commutation', 'spectral-eigen', 'stability',
        'corollary', 'well-posedness', 'distance-equivalence', 'bernstein',
        'direct-estimate', 'inverse-estimate', 'equivalence',
        'modulus-properties', 'theta-refinement', 'determinism',
    ],
    'cone': [
        'reproduction', 'cone-lift', 'stability', 'corollary',
        'direct-estimate', 'inverse-estimate', 'equivalence',
        'modulus-properties', 'theta-refinement', 'determinism',
    ],
}
