# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Weighted polynomial approximation on conic domains."""

import os

from setuptools import find_packages, setup

readme = open('README.rst').read()
history = open('CHANGES.rst').read()

tests_require = [
    'check-manifest>=0.35',
    'coverage>=4.0',
    'isort>=4.2.15',
    'mock>=1.3.0',
    'pydocstyle>=1.0.0',
    'pytest-cov>=1.8.0',
    'pytest>=6.0',
]

extras_require = {
    'docs': [
        'Sphinx>=1.4',
    ],
    'tests': tests_require,
}

extras_require['all'] = []
for name, reqs in extras_require.items():
    if name[0] == ':':
        continue
    extras_require['all'].extend(reqs)

setup_requires = [
    'pytest-runner>=2.6.2',
]

install_requires = [
    'click>=7.0',
    'Flask>=1.1',
    'numpy>=1.20',
    'pandas>=1.5',
    'scipy>=1.6',
    'Werkzeug>=1.0',
]

packages = find_packages(exclude=['tests', 'tests.*'])


# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('conic_approx', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='conic-approx',
    version=version,
    description=__doc__,
    long_description=readme + '\n\n' + history,
    keywords='approximation orthogonal polynomials cone jacobi',
    license='MIT',
    author='Conic-Approx contributors',
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    platforms='any',
    entry_points={
        'console_scripts': [
            'conic-approx = conic_approx.cli:conic_approx',
        ],
        'flask.commands': [
            'conic-approx = conic_approx.cli:conic_approx',
        ],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    setup_requires=setup_requires,
    tests_require=tests_require,
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 3 - Alpha',
    ],
)
