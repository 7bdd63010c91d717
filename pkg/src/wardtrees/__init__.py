"""Exact computation and verification of Ward numbers and their tree models."""

from __future__ import annotations

from .exactmath import binomial, double_factorial_odd, factorial, lah, stirling1_unsigned, stirling2
from .series import SeriesError, TruncatedSeries, invert_newton, invert_variant, lagrange_classical
from .ward import WardTable, WeightSystem, parse_weights, ward_recurrence_table, weighted_ward_table

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "double_factorial_odd",
    "factorial",
    "lah",
    "stirling1_unsigned",
    "stirling2",
    "SeriesError",
    "TruncatedSeries",
    "invert_newton",
    "invert_variant",
    "lagrange_classical",
    "WardTable",
    "WeightSystem",
    "parse_weights",
    "ward_recurrence_table",
    "weighted_ward_table",
]
