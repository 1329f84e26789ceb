# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Weighted polynomial approximation on conic domains."""

from __future__ import absolute_import, print_function

from collections import namedtuple

from werkzeug.utils import cached_property

from . import config
from .errors import UsageError
from .utils import obj_or_import_string

_Check = namedtuple('Check', ['name', 'func', 'anchor', 'params'])

_TestFunction = namedtuple('TestFunction', ['name', 'cls', 'params'])


class _ConicApproxState(object):
    """State object for Conic-Approx."""

    def __init__(self, app):
        self.app = app

    @property
    def checks_config(self):
        return self.app.config['CONIC_APPROX_CHECKS']

    @property
    def suite_config(self):
        return self.app.config['CONIC_APPROX_SUITE']

    @cached_property
    def checks(self):
        """Configured checks.

        An entry is a dict, or a callable (or its import path) taking the
        application and returning one.
        """
        result = {}
        for name, check in self.checks_config.items():
            check = obj_or_import_string(check)
            if callable(check):
                check = check(self.app)

            result[name] = _Check(
                name=name,
                func=obj_or_import_string(check['func']),
                anchor=check.get('anchor', 'plumbing'),
                params=check.get('params', {}),
            )
        return result

    @cached_property
    def suite(self):
        """Configured test functions."""
        result = {}
        for name, entry in self.suite_config.items():
            result[name] = _TestFunction(
                name=name,
                cls=obj_or_import_string(entry['cls']),
                params=entry.get('params', {}),
            )
        return result

    def verify_checks(self, domain):
        """Names of the checks ``verify`` runs by default on ``domain``."""
        return list(self.app.config['CONIC_APPROX_VERIFY_CHECKS'][domain])

    def test_function(self, name, domain):
        """Build the test function ``name`` on ``domain``."""
        if name not in self.suite:
            raise UsageError(
                'Unknown test function {!r}. Valid values: {}'.format(
                    name, ', '.join(sorted(self.suite))), 'functions')
        entry = self.suite[name]
        return entry.cls(domain, **entry.params)


class ConicApprox(object):
    """Conic-Approx extension."""

    def __init__(self, app=None, **kwargs):
        """Extension initialization."""
        if app:
            self.init_app(app, **kwargs)

    def init_app(self, app, **kwargs):
        """Flask application initialization."""
        self.init_config(app)
        state = _ConicApproxState(app)
        self._state = app.extensions['conic-approx'] = state
        return state

    def init_config(self, app):
        """Initialize configuration."""
        for k in dir(config):
            if k.startswith('CONIC_APPROX_'):
                app.config.setdefault(k, getattr(config, k))

    def __getattr__(self, name):
        """Proxy to state object."""
        return getattr(self._state, name, None)
