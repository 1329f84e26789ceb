# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""CLI tests."""

import json
import os

import mock
from click.testing import CliRunner

from conic_approx.cli import conic_approx
from conic_approx.errors import NumericalFailureError


def _invoke(script_info, *args):
    return CliRunner().invoke(conic_approx, list(args), obj=script_info)


def _write(tmpdir, data, name='custom.json'):
    path = tmpdir.join(name)
    path.write(json.dumps(data))
    return str(path)


def test_approx(script_info, config_file, tmpdir):
    """Test "approx" CLI command."""
    out = str(tmpdir.join('out'))
    result = _invoke(script_info, 'approx', '--config', config_file,
                     '--out', out)
    assert result.exit_code == 0
    assert 'all checks passed' in result.output
    assert sorted(os.listdir(out)) == ['approx.csv', 'report.json']
    with open(os.path.join(out, 'report.json')) as fp:
        report = json.load(fp)
    assert report['command'] == 'approx'
    assert report['passed'] is True
    assert report['tables'] == ['approx']


def test_json_format(script_info, config_file, tmpdir):
    """Tables are embedded in report.json."""
    out = str(tmpdir.join('out'))
    result = _invoke(script_info, 'approx', '--config', config_file,
                     '--out', out, '--format', 'json', '--seed', '7')
    assert result.exit_code == 0
    assert os.listdir(out) == ['report.json']
    with open(os.path.join(out, 'report.json')) as fp:
        report = json.load(fp)
    assert report['config']['seed'] == 7
    assert [row['n'] for row in report['tables']['approx']] == [2, 4]


def test_usage_errors(script_info, experiment_data, tmpdir):
    """Invalid experiment files and options exit with 2."""
    out = str(tmpdir.join('out'))
    unknown = _write(tmpdir, dict(experiment_data, colour='red'))
    result = _invoke(script_info, 'approx', '--config', unknown,
                     '--out', out)
    assert result.exit_code == 2
    assert 'colour' in result.output
    assert not os.path.exists(out)

    broken = tmpdir.join('broken.json')
    broken.write('{"d": ')
    result = _invoke(script_info, 'modulus', '--config', str(broken),
                     '--out', out)
    assert result.exit_code == 2

    result = _invoke(script_info, 'approx', '--format', 'xml', '--out', out)
    assert result.exit_code == 2

    result = _invoke(script_info, 'approx', '--config',
                     str(tmpdir.join('missing.json')), '--out', out)
    assert result.exit_code == 2


def test_failed_check(script_info, experiment_data, tmpdir):
    """A failing check exits with 1 and still writes the report."""
    out = str(tmpdir.join('out'))
    path = _write(tmpdir, dict(
        experiment_data, checks=['cutoff-flatness'],
        tolerances={'cutoff-flatness': 0.0}))
    result = _invoke(script_info, 'verify', '--config', path, '--out', out)
    assert result.exit_code == 1
    assert 'cutoff-flatness' in result.output
    with open(os.path.join(out, 'report.json')) as fp:
        report = json.load(fp)
    assert report['passed'] is False


def test_verify_passes(script_info, experiment_data, tmpdir):
    """Passing checks exit with 0."""
    out = str(tmpdir.join('out'))
    path = _write(tmpdir, dict(
        experiment_data, checks=['cutoff-flatness', 'jacobi-identities']))
    result = _invoke(script_info, 'verify', '--config', path, '--out', out)
    assert result.exit_code == 0
    assert os.path.exists(os.path.join(out, 'verify.csv'))


def test_numerical_failure(script_info, config_file, tmpdir):
    """Numerical failures exit with 3 without writing a report."""
    out = str(tmpdir.join('out'))
    with mock.patch('conic_approx.experiments.best_values',
                    side_effect=NumericalFailureError('no convergence')):
        result = _invoke(script_info, 'approx', '--config', config_file,
                         '--out', out)
    assert result.exit_code == 3
    assert not os.path.exists(out)


def test_verify_deterministic(script_info, experiment_data, tmpdir):
    """Two seeded runs write the same report apart from timings."""
    path = _write(tmpdir, dict(
        experiment_data, seed=7,
        checks=['surface-bookkeeping', 'distance-equivalence',
                'determinism']))
    reports = []
    for name in ('first', 'second'):
        out = str(tmpdir.join(name))
        result = _invoke(script_info, 'verify', '--config', path,
                         '--out', out)
        assert result.exit_code in (0, 1), result.output
        with open(os.path.join(out, 'report.json')) as fp:
            report = json.load(fp)
        assert set(report['timings']) == set(report['config']['checks'])
        del report['timings']
        reports.append(report)
    assert reports[0] == reports[1]
    assert [r['name'] for r in reports[0]['records']] == [
        'surface-bookkeeping', 'distance-equivalence', 'determinism']
