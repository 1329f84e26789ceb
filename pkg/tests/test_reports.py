# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Report serialization tests."""

import json
import os

import numpy as np
import pandas as pd

from conic_approx.checks import CheckRecord
from conic_approx.reports import RunReport, dumps, environment, sanitize, \
    write_report


def _report(config, passed=True):
    records = [
        CheckRecord('stability', 'near-best operator is bounded',
                    {'smooth': [1.0, np.float64(1.1)]}, {'smooth': 1.1},
                    True),
        CheckRecord('bernstein', 'Bernstein inequalities',
                    {'angular': np.array([0.5, np.inf])}, {}, passed),
    ]
    table = pd.DataFrame(dict(n=[2, 4], error=[0.1, 1.0 / 3]))
    return RunReport('approx', config, records, {'approx': table},
                     {'approx': 0.25})


def test_sanitize():
    """Plain JSON types with non-finite floats as strings."""
    data = sanitize({1: (np.int64(2), np.float32(0.5)), 'x': np.nan,
                     'y': -np.inf, 'z': np.array([True, False]),
                     'w': np.bool_(True)})
    assert data == {'1': [2, 0.5], 'x': 'nan', 'y': '-inf',
                    'z': [True, False], 'w': True}
    assert type(data['1'][0]) is int
    assert json.dumps(data)


def test_environment():
    """Versions of the numerical stack."""
    assert set(environment()) == {'conic_approx', 'numpy', 'pandas',
                                  'python', 'scipy'}


def test_report_status(experiment_config):
    """Passed and failed records."""
    assert _report(experiment_config).passed
    report = _report(experiment_config, passed=False)
    assert not report.passed
    assert report.failed == ['bernstein']


def test_dumps_sorted(experiment_config):
    """Keys are sorted and tables listed by name."""
    text = dumps(_report(experiment_config))
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data['tables'] == ['approx']
    assert data['records'][1]['values']['angular'] == [0.5, 'inf']
    assert data['config']['degrees'] == [2, 4]
    assert data['timings'] == {'approx': 0.25}


def test_write_csv(experiment_config, tmpdir):
    """CSV tables next to report.json."""
    out = str(tmpdir.join('results'))
    paths = write_report(_report(experiment_config), out)
    assert sorted(os.path.basename(p) for p in paths) == [
        'approx.csv', 'report.json']
    with open(os.path.join(out, 'approx.csv')) as fp:
        lines = fp.read().splitlines()
    assert lines[0] == 'n,error'
    assert lines[2] == '4,0.33333333333333331'
    table = pd.read_csv(os.path.join(out, 'approx.csv'))
    assert np.isclose(table['error'][1], 1.0 / 3)


def test_write_json(experiment_config, tmpdir):
    """Tables are embedded in the JSON format."""
    out = str(tmpdir)
    paths = write_report(_report(experiment_config), out, 'json')
    assert [os.path.basename(p) for p in paths] == ['report.json']
    with open(paths[0]) as fp:
        data = json.load(fp)
    assert data['tables']['approx'][0] == {'n': 2, 'error': 0.1}
