# -*- coding: utf-8 -*-
#
# This file is part of Conic-Approx.
# Copyright (C) 2026 Conic-Approx contributors.
#
# Conic-Approx is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Errors used in Conic-Approx."""

from __future__ import absolute_import, print_function


class ConicApproxError(Exception):
    """Base class of every error raised by Conic-Approx."""


##
#  Input errors
##

class ParameterDomainError(ConicApproxError, ValueError):
    """Error raised when a parameter lies outside its admissible range."""


class DimensionError(ConicApproxError, ValueError):
    """Error raised for an unsupported dimension."""

    def __init__(self, d, supported):
        """Constructor.

        :param d: the requested dimension.
        :param supported: iterable of supported dimensions.
        """
        self.d = d
        self.supported = tuple(supported)
        super(DimensionError, self).__init__(
            'Unsupported dimension {}. Supported: {}'.format(
                d, ', '.join(str(s) for s in self.supported)))


class BasisIndexError(ConicApproxError, IndexError):
    """Error raised when a basis index is out of range."""


class DegenerateInputError(ConicApproxError, ValueError):
    """Error raised when the input leaves nothing to compute on."""


class CapabilityError(ConicApproxError):
    """Error raised when a field lacks a required derivative."""


##
#  Configuration errors
##

class ConfigurationError(ConicApproxError):
    """Error raised for inconsistent evaluator or rule configuration."""


class UsageError(ConicApproxError):
    """Error raised for an invalid experiment configuration."""

    def __init__(self, message, field=None):
        """Constructor.

        :param message: human readable diagnostic.
        :param field: name of the offending configuration key, if any.
        """
        self.field = field
        if field:
            message = '{}: {}'.format(field, message)
        super(UsageError, self).__init__(message)


##
#  Numerical errors
##

class NumericalFailureError(ConicApproxError):
    """Error raised when a numerical routine fails to converge."""
