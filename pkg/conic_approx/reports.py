# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Run reports and their files.

A run writes ``<out>/report.json`` and, in the ``csv`` format, one
``<out>/<table>.csv`` per table. JSON keys are sorted and timings are kept
under their own ``timings`` key, so two runs with the same configuration
differ in that key only.
"""

from __future__ import absolute_import, print_function

import json
import os
import platform
from collections import namedtuple

import numpy as np
import pandas as pd
import scipy

from .version import __version__

FORMATS = ('csv', 'json')


class RunReport(namedtuple(
        'RunReport',
        ['command', 'config', 'records', 'tables', 'timings'])):
    """Check records and tables of one harness run.

    ``records`` are :class:`~conic_approx.checks.CheckRecord` instances,
    ``tables`` maps names to :class:`pandas.DataFrame` and ``timings`` maps
    check or table names to elapsed seconds.
    """

    __slots__ = ()

    @property
    def passed(self):
        """Whether every record passed."""
        return all(record.passed for record in self.records)

    @property
    def failed(self):
        """Names of the failed records."""
        return [record.name for record in self.records if not record.passed]

    def to_dict(self, include_tables=False):
        """JSON-ready dictionary."""
        data = dict(
            command=self.command,
            config=self.config._asdict(),
            environment=environment(),
            records=[record._asdict() for record in self.records],
            passed=self.passed,
            timings=self.timings,
        )
        if include_tables:
            data['tables'] = dict(
                (name, table.to_dict(orient='records'))
                for name, table in self.tables.items())
        else:
            data['tables'] = sorted(self.tables)
        return sanitize(data)


def environment():
    """Versions of the interpreter and the numerical stack."""
    return dict(
        conic_approx=__version__,
        numpy=np.__version__,
        pandas=pd.__version__,
        python=platform.python_version(),
        scipy=scipy.__version__,
    )


def sanitize(value):
    """Plain JSON types; non-finite floats become strings."""
    if isinstance(value, dict):
        return dict((str(k), sanitize(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [sanitize(v) for v in value]
    if isinstance(value, np.ndarray):
        return sanitize(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if np.isnan(value):
            return 'nan'
        if np.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value
    return value


def dumps(report, include_tables=False):
    """Serialize a report with sorted keys."""
    return json.dumps(report.to_dict(include_tables), indent=2,
                      sort_keys=True)


def write_table(table, path):
    """Write a table as CSV with 17 significant digits."""
    table.to_csv(path, index=False, float_format='%.17g',
                 lineterminator='\n')


def write_report(report, out, fmt='csv'):
    """Write ``report.json`` and the tables into ``out``.

    :returns: list of written paths.
    """
    if not os.path.isdir(out):
        os.makedirs(out)
    paths = []
    if fmt == 'csv':
        for name, table in sorted(report.tables.items()):
            path = os.path.join(out, '{}.csv'.format(name))
            write_table(table, path)
            paths.append(path)
    path = os.path.join(out, 'report.json')
    with open(path, 'w') as fp:
        fp.write(dumps(report, include_tables=fmt == 'json'))
        fp.write('\n')
    paths.append(path)
    return paths
