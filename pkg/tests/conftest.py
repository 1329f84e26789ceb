# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration."""

from __future__ import absolute_import, print_function

import json
import shutil
import tempfile

import numpy as np
import pytest
from flask import Flask
from flask.cli import ScriptInfo

from conic_approx import ConicApprox
from conic_approx.experiments import ExperimentConfig


@pytest.fixture()
def base_app():
    """Flask application fixture without ConicApprox."""
    instance_path = tempfile.mkdtemp()
    app_ = Flask('testapp', instance_path=instance_path)
    app_.config.update(dict(
        TESTING=True,
        # smaller grids keep the norms quick
        CONIC_APPROX_SURFACE_NODES=32,
        CONIC_APPROX_SPHERE_EXACTNESS=16,
        CONIC_APPROX_THETA_GRID_SIZE=4,
        CONIC_APPROX_INTERVAL_NODES=128,
    ))
    with app_.app_context():
        yield app_
    shutil.rmtree(instance_path)


@pytest.fixture()
def app(base_app):
    """Flask application fixture with ConicApprox."""
    ConicApprox(base_app)
    yield base_app


@pytest.fixture()
def script_info(app):
    """Get ScriptInfo object for testing CLI."""
    return ScriptInfo(create_app=lambda *args: app)


@pytest.fixture()
def rng():
    """Seeded random generator."""
    return np.random.default_rng(0)


@pytest.fixture()
def experiment_data():
    """A small surface experiment."""
    return dict(
        domain='surface',
        d=2,
        gamma=1.0,
        p=2,
        r=1,
        degrees=[2, 4],
        functions=['smooth'],
        h_values=[0.25, 0.5],
    )


@pytest.fixture()
def experiment_config(app, experiment_data):
    """Validated small surface experiment."""
    return ExperimentConfig.from_dict(experiment_data)


@pytest.fixture()
def cone_config(app, experiment_data):
    """Validated small cone experiment."""
    return ExperimentConfig.from_dict(experiment_data, domain='cone')


@pytest.fixture()
def interval_config(app, experiment_data):
    """Validated small interval experiment."""
    return ExperimentConfig.from_dict(experiment_data, domain='interval')


@pytest.fixture()
def config_file(tmpdir, experiment_data):
    """Experiment file written to a temporary directory."""
    path = tmpdir.join('experiment.json')
    path.write(json.dumps(experiment_data))
    return str(path)
