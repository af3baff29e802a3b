"""Mixed discriminants and the mixed characteristic polynomial.

The mixed discriminant of an n-tuple of n x n matrices averages, over all
assignments of the n columns to the n matrices, the determinant of the
column-mixed matrix.  The sum is accumulated as ``n! * D`` and divided
exactly once.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import DimensionError, PolyElem, RingMatrix, det, is_permutation, poly_sum

MatrixTuple = Sequence[RingMatrix]


class NameCollisionError(ValueError):
    pass


def check_tuple(mats: MatrixTuple) -> int:
    """Validate an n-tuple of n x n matrices and return n."""
    mats = list(mats)
    if not mats:
        raise DimensionError("empty matrix tuple")
    n = mats[0].n
    if len(mats) != n:
        raise DimensionError(f"tuple length {len(mats)} must equal matrix dimension {n}")
    if any(m.n != n for m in mats):
        raise DimensionError("all matrices in the tuple must share one dimension")
    return n


def column_mix(mats: MatrixTuple, alpha: Sequence[int]) -> RingMatrix:
    """Matrix whose column i is column i of ``mats[alpha[i]]`` (0-based)."""
    n = check_tuple(mats)
    if not is_permutation(alpha, n):
        raise ValueError(f"{tuple(alpha)} is not a permutation of range({n})")
    cols = [mats[alpha[i]].column(i) for i in range(n)]
    return RingMatrix._raw(tuple(zip(*cols)))


def mixed_discriminant_scaled(mats: MatrixTuple) -> PolyElem:
    """n! times the mixed discriminant (no division)."""
    n = check_tuple(mats)
    return poly_sum(det(column_mix(mats, a)) for a in itertools.permutations(range(n)))


def mixed_discriminant(mats: MatrixTuple) -> PolyElem:
    n = check_tuple(mats)
    return mixed_discriminant_scaled(mats).scale(Fraction(1, factorial(n)))


def mixed_form(slots: Sequence[Sequence[RingMatrix]]) -> dict:
    """Expand D(sum_j x_{1,j} M_{1,j}, ..., sum_j x_{n,j} M_{n,j}) by multilinearity.

    ``slots[i]`` lists the matrices that may fill argument i.  Returns a map
    from choice tuples ``(j_1, ..., j_n)`` to ``D(M_{1,j_1}, ..., M_{n,j_n})``,
    omitting zero values.
    """
    out = {}
    for choice in itertools.product(*(range(len(s)) for s in slots)):
        value = mixed_discriminant([slots[i][j] for i, j in enumerate(choice)])
        if value:
            out[choice] = value
    return out


def mixed_char_poly(mats: MatrixTuple, var: str = "x") -> PolyElem:
    """D(x_1 I - A_1, ..., x_n I - A_n) with x_i named ``{var}{i}`` (1-based)."""
    n = check_tuple(mats)
    names = [f"{var}{i + 1}" for i in range(n)]
    used = set().union(*(m.variables() for m in mats))
    clash = sorted(used.intersection(names))
    if clash:
        raise NameCollisionError(f"indeterminate(s) {clash} already occur in the matrix entries")
    ident = RingMatrix.identity(n)
    shifted = [ident.scale(PolyElem.var(names[i])) - mats[i] for i in range(n)]
    return mixed_discriminant(shifted)


def tuple_to_json(mats: MatrixTuple) -> dict:
    n = check_tuple(mats)
    return {"n": n, "mats": [m.to_json() for m in mats]}


def tuple_from_json(obj: dict) -> list:
    mats = [RingMatrix.from_json(m) for m in obj["mats"]]
    n = check_tuple(mats)
    if obj.get("n", n) != n:
        raise DimensionError(f"declared n={obj['n']} does not match matrices of size {n}")
    return mats
