"""Exact scalar, polynomial and matrix arithmetic."""

from .matrix import (
    DimensionError,
    RingMatrix,
    det,
    det_bareiss,
    det_expansion,
    is_permutation,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sum,
    minor,
    perm_sign,
    permanent,
    permanent_expansion,
    permanent_ryser,
    trace,
)
from .parse import ParseError, parse_entry
from .poly import ONE, ZERO, PolyElem, as_poly, poly_add, poly_mul, poly_neg, poly_prod, poly_sum

__all__ = [
    "DimensionError",
    "ONE",
    "ParseError",
    "PolyElem",
    "RingMatrix",
    "ZERO",
    "as_poly",
    "det",
    "det_bareiss",
    "det_expansion",
    "is_permutation",
    "mat_add",
    "mat_mul",
    "mat_scale",
    "mat_sum",
    "minor",
    "parse_entry",
    "perm_sign",
    "permanent",
    "permanent_expansion",
    "permanent_ryser",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_prod",
    "poly_sum",
    "trace",
]
