"""Polynomials in dedicated x-indeterminates with matrix-entry coefficients.

An :class:`XPolynomial` keeps the x-structure apart from the entry ring so
that matrices can be substituted for the x's. Exponent vectors index the
x-variables by position; ``names`` is only used for display.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import DimensionError, PolyElem, RingMatrix, det, mat_sum, poly_sum
from .mixed import mixed_discriminant, mixed_form


class NonCommutingError(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"matrices {i + 1} and {j + 1} do not commute")
        self.pair = (i, j)


class XPolynomial:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: dict | None = None):
        self.names = tuple(names)
        self.terms = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.names):
                raise ValueError("exponent vector length must match the number of x-variables")
            if c:
                self.terms[tuple(exps)] = c

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        if other.names != self.names:
            raise ValueError("x-variables differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return XPolynomial(self.names, out)

    def scale(self, c) -> "XPolynomial":
        return XPolynomial(self.names, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, XPolynomial) and self.names == other.names and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def is_multilinear(self) -> bool:
        return all(max(e, default=0) <= 1 for e in self.terms)

    def to_poly(self) -> PolyElem:
        """Merge the x-variables into the entry ring."""
        xs = [PolyElem.var(v) for v in self.names]
        terms = []
        for e, c in self.terms.items():
            t = c
            for x, a in zip(xs, e):
                if a:
                    t = t * x**a
            terms.append(t)
        return poly_sum(terms)

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_items():
            mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(self.names, e) if a)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"vars": list(self.names),
                "terms": [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_items()]}


def _unit(nvars: int, idx: Sequence[int]) -> tuple:
    e = [0] * nvars
    for i in idx:
        e[i] += 1
    return tuple(e)


def multivar_char_poly(mats: Sequence[RingMatrix], names: Sequence[str] | None = None) -> XPolynomial:
    """det(A_1 x_1 + ... + A_k x_k), expanded by multilinearity in the rows."""
    mats = list(mats)
    if not mats:
        raise DimensionError("need at least one matrix")
    n, k = mats[0].n, len(mats)
    if any(m.n != n for m in mats):
        raise DimensionError("all matrices must share one dimension")
    names = names or [f"x{i + 1}" for i in range(k)]
    out: dict = {}
    for z in itertools.product(range(k), repeat=n):
        d = det(RingMatrix._raw(tuple(mats[z[r]].rows[r] for r in range(n))))
        if d:
            e = _unit(k, z)
            out[e] = out[e] + d if e in out else d
    return XPolynomial(names, out)


def mixed_char_xpoly(grid: Sequence[Sequence[RingMatrix]]) -> XPolynomial:
    """D(sum_j A_{1,j} x_{1,j}, ..., sum_j A_{n,j} x_{n,j}); variable (i, j) sits at i*k + j."""
    n, k = len(grid), len(grid[0])
    if any(len(r) != k for r in grid):
        raise DimensionError("ragged matrix array")
    names = [f"x{i + 1}_{j + 1}" for i in range(n) for j in range(k)]
    out = {}
    for choice, value in mixed_form(grid).items():
        out[_unit(n * k, [i * k + j for i, j in enumerate(choice)])] = value
    return XPolynomial(names, out)


def bapat_roy_xpoly(mats: Sequence[RingMatrix]) -> XPolynomial:
    """D(x_1 I - A_1, ..., x_n I - A_n) as a multilinear polynomial in x_1..x_n."""
    n = len(mats)
    ident = RingMatrix.identity(mats[0].n)
    negs = [-m for m in mats]
    out = {}
    for mask in itertools.product((0, 1), repeat=n):
        value = mixed_discriminant([ident if mask[i] else negs[i] for i in range(n)])
        if value:
            out[mask] = value
    return XPolynomial([f"x{i + 1}" for i in range(n)], out)


def check_commuting(mats: Sequence[RingMatrix], pairs=None) -> None:
    k = len(mats)
    for i, j in pairs if pairs is not None else itertools.combinations(range(k), 2):
        if not mats[i].commutes_with(mats[j]):
            raise NonCommutingError(i, j)


def substitute(p: XPolynomial, mats: Sequence[RingMatrix], order: Sequence[int] | None = None) -> RingMatrix:
    """Sum of coefficient * prod_v mats[v]^{a_v}, factors taken in ``order`` (ascending by default)."""
    if len(mats) != p.nvars:
        raise ValueError(f"{p.nvars} matrices needed, got {len(mats)}")
    n = mats[0].n
    order = list(range(p.nvars)) if order is None else list(order)
    if sorted(order) != list(range(p.nvars)):
        raise ValueError("order must be a permutation of the variable indices")
    cache = {}

    def power(v: int, a: int) -> RingMatrix:
        if (v, a) not in cache:
            cache[(v, a)] = mats[v] ** a
        return cache[(v, a)]

    ident = RingMatrix.identity(n)
    parts = []
    for e, c in p.terms.items():
        prod = None
        for v in order:
            if e[v]:
                f = power(v, e[v])
                prod = f if prod is None else prod @ f
        parts.append((prod or ident).scale(c))
    return mat_sum(parts, n)


def substitute_commuting(p: XPolynomial, mats: Sequence[RingMatrix]) -> RingMatrix:
    check_commuting(mats)
    return substitute(p, mats)


def substitute_mixed(p: XPolynomial, grid: Sequence[Sequence[RingMatrix]]) -> RingMatrix:
    """Row-ascending substitution for a polynomial with one variable per row in each monomial."""
    n, k = len(grid), len(grid[0])
    flat = [m for row in grid for m in row]
    pairs = [(i * k + j, i2 * k + j2) for i in range(n) for i2 in range(i + 1, n)
             for j in range(k) for j2 in range(k)]
    check_commuting(flat, pairs)
    for e in p.terms:
        if any(sum(e[i * k:(i + 1) * k]) != 1 for i in range(n)):
            raise ValueError("every monomial must take exactly one variable from each row")
    return substitute(p, flat)


def symmetrized_substitute(p: XPolynomial, mats: Sequence[RingMatrix]) -> RingMatrix:
    """Average of :func:`substitute` over all factor orders (for multilinear p)."""
    orders = list(itertools.permutations(range(p.nvars)))
    total = mat_sum((substitute(p, mats, o) for o in orders), mats[0].n)
    return total.scale(Fraction(1, factorial(p.nvars)))
