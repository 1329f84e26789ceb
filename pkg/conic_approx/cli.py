# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Command line interface.

Every subcommand takes ``--config``, ``--out``, ``--format`` and ``--seed``
and exits with 0 when all checks pass, 1 when a check fails, 2 for usage or
configuration errors and 3 for numerical failures.
"""

from __future__ import absolute_import, print_function

from functools import wraps

import click
from flask import Flask, current_app
from flask.cli import FlaskGroup, with_appcontext
from numpy.linalg import LinAlgError

from .errors import ConfigurationError, NumericalFailureError, UsageError
from .experiments import RUNNERS, ExperimentConfig
from .ext import ConicApprox
from .reports import FORMATS, write_report

EXIT_FAILED = 1
EXIT_NUMERICAL = 3


def create_app(*args, **kwargs):
    """Application factory of the console script."""
    app = Flask('conic_approx')
    ConicApprox(app)
    return app


def _load_config(config_path, seed):
    try:
        if config_path:
            return ExperimentConfig.from_file(config_path, seed=seed)
        return ExperimentConfig.from_dict({}, seed=seed)
    except UsageError as e:
        raise click.BadParameter(str(e), param_hint='--config')


def experiment_command(name):
    """Decorate a runner as a subcommand with the common options."""
    runner = RUNNERS[name]

    def decorator(f):
        @click.option('--config', 'config_path',
                      type=click.Path(exists=True, dir_okay=False),
                      help='JSON experiment file.')
        @click.option('--out', type=click.Path(file_okay=False),
                      default='.', show_default=True,
                      help='Output directory.')
        @click.option('--format', 'fmt', type=click.Choice(FORMATS),
                      default='csv', show_default=True)
        @click.option('--seed', type=int, help='Overrides the file seed.')
        @with_appcontext
        @wraps(f)
        def command(config_path, out, fmt, seed):
            config = _load_config(config_path, seed)
            try:
                report = runner(config)
            except (UsageError, ConfigurationError) as e:
                raise click.UsageError(str(e))
            except (NumericalFailureError, LinAlgError) as e:
                current_app.logger.exception('Numerical failure in %s', name)
                click.secho('Numerical failure: {}'.format(e), fg='red',
                            err=True)
                raise click.exceptions.Exit(EXIT_NUMERICAL)
            write_report(report, out, fmt)
            if report.passed:
                click.secho('{}: all checks passed.'.format(name),
                            fg='green')
                return
            click.secho('{}: failed checks: {}'.format(
                name, ', '.join(report.failed)), fg='red')
            raise click.exceptions.Exit(EXIT_FAILED)
        return command
    return decorator


@click.group(cls=FlaskGroup, create_app=create_app,
             add_default_commands=False)
def conic_approx():
    """Weighted polynomial approximation on conic domains."""


@conic_approx.command('verify')
@experiment_command('verify')
def _verify():
    """Run the verification checks."""


@conic_approx.command('convergence')
@experiment_command('convergence')
def _convergence():
    """Best approximation against moduli (direct and inverse estimates)."""


@conic_approx.command('kernel-profile')
@experiment_command('kernel-profile')
def _kernel_profile():
    """Localized kernel against distance with fitted decay slopes."""


@conic_approx.command('modulus')
@experiment_command('modulus')
def _modulus():
    """Modulus of smoothness components over the increments."""


@conic_approx.command('kfunc')
@experiment_command('kfunc')
def _kfunc():
    """K-functional upper bounds over the increments."""


@conic_approx.command('approx')
@experiment_command('approx')
def _approx():
    """Best approximation and near-best errors per degree."""
