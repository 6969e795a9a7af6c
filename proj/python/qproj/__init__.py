"""Exact q-deformed rationals and reals.

Polynomials are returned as ``{exponent: coefficient}`` dictionaries with
Python ``int`` coefficients; series coefficients are ``fractions.Fraction``.
"""

import json

from . import _core
from ._core import (
    QprojError,
    act,
    fence_gf,
    fence_ideal_count,
    qreal,
    qtrace,
    quantize,
    suite_names,
)

__all__ = [
    "QprojError",
    "act",
    "evaluate_at_one",
    "fence_gf",
    "fence_ideal_count",
    "qreal",
    "qtrace",
    "quantize",
    "suite_names",
    "verify",
]


def evaluate_at_one(poly):
    """Sum of the coefficients of a polynomial dictionary."""
    return sum(poly.values())


def verify(suite, seed=20240501, digits_path=""):
    """Runs one property suite and returns its report as a dictionary."""
    return json.loads(_core.verify(suite, seed, digits_path))
