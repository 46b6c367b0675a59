"""Exact change-of-basis matrices between polynomial bases.

Rationals are exchanged as exact "p/q" strings; use :func:`to_fractions` to
turn a matrix or coordinate list into :class:`fractions.Fraction` values.
"""

from fractions import Fraction

from ._cob import (
    CobError,
    UsageError,
    alqudah_coeff,
    basis_polynomials,
    convert,
    describe,
    fixtures,
    grammar,
    lb_element,
    lb_matrix,
    matrix,
    oracle_sweep,
    parse_polynomial,
    reconstruct,
    verify_groupoid,
)


def to_fractions(value):
    """Convert nested lists of "p/q" strings to Fractions."""
    if isinstance(value, str):
        return Fraction(value)
    return [to_fractions(v) for v in value]


__all__ = [
    "CobError",
    "UsageError",
    "alqudah_coeff",
    "basis_polynomials",
    "convert",
    "describe",
    "fixtures",
    "grammar",
    "lb_element",
    "lb_matrix",
    "matrix",
    "oracle_sweep",
    "parse_polynomial",
    "reconstruct",
    "to_fractions",
    "verify_groupoid",
]
