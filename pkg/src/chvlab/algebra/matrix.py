"""Square matrices over :class:`PolyElem` and the classical matrix functions."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import ONE, ZERO, PolyElem, as_poly, poly_sum


class DimensionError(ValueError):
    pass


def perm_sign(p: Sequence[int]) -> int:
    """Sign of a permutation of ``range(len(p))`` via its cycle count."""
    n = len(p)
    seen = [False] * n
    parity = 0
    for i in range(n):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    n = len(p) if n is None else n
    return len(p) == n and sorted(p) == list(range(n))


class RingMatrix:
    """Immutable n x n matrix of polynomials. Indices are 0-based."""

    __slots__ = ("_rows", "n", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_poly(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise DimensionError("matrix dimension must be at least 1")
        if any(len(r) != n for r in rows):
            raise DimensionError("matrix must be square")
        self._rows = rows
        self.n = n
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple) -> "RingMatrix":
        obj = cls.__new__(cls)
        obj._rows = rows
        obj.n = len(rows)
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "RingMatrix":
        return cls._raw(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def diag(cls, entries: Sequence) -> "RingMatrix":
        d = [as_poly(x) for x in entries]
        n = len(d)
        return cls._raw(tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RingMatrix":
        """Elementary matrix E_ij with a single 1 at (i, j)."""
        return cls._raw(tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(n)) for r in range(n)))

    @classmethod
    def generic(cls, n: int, prefix: str) -> "RingMatrix":
        """Matrix of distinct indeterminates ``{prefix}_{i}{j}`` (1-based, ``_`` between indices when n > 9)."""
        sep = "_" if n > 9 else ""
        return cls._raw(tuple(
            tuple(PolyElem.var(f"{prefix}_{i + 1}{sep}{j + 1}") for j in range(n)) for i in range(n)
        ))

    # -- access -----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    @property
    def rows(self) -> tuple:
        return self._rows

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def transpose(self) -> "RingMatrix":
        return RingMatrix._raw(tuple(zip(*self._rows)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self._rows for x in row)

    def first_nonzero(self):
        """(i, j, value) of the first nonzero entry in row-major order, or None."""
        for i, row in enumerate(self._rows):
            for j, x in enumerate(row):
                if not x.is_zero():
                    return i, j, x
        return None

    def is_constant(self) -> bool:
        return all(x.is_constant() for row in self._rows for x in row)

    def variables(self) -> frozenset:
        out = set()
        for row in self._rows:
            for x in row:
                out |= x.variables()
        return frozenset(out)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "RingMatrix"):
        if not isinstance(other, RingMatrix):
            raise TypeError("expected a RingMatrix")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return RingMatrix._raw(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)
        ))

    def __sub__(self, other):
        self._check(other)
        return RingMatrix._raw(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._rows, other._rows)
        ))

    def __neg__(self):
        return RingMatrix._raw(tuple(tuple(-a for a in r) for r in self._rows))

    def __matmul__(self, other):
        self._check(other)
        cols = tuple(zip(*other._rows))
        return RingMatrix._raw(tuple(
            tuple(poly_sum(a * b for a, b in zip(row, col) if a and b) for col in cols)
            for row in self._rows
        ))

    def scale(self, c) -> "RingMatrix":
        c = as_poly(c)
        return RingMatrix._raw(tuple(tuple(c * a for a in r) for r in self._rows))

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, c):
        if isinstance(c, RingMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = RingMatrix.identity(self.n), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def commutes_with(self, other: "RingMatrix") -> bool:
        return self @ other == other @ self

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[str(x) for x in row] for row in self._rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "RingMatrix":
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("matrix object needs an 'entries' field")
        entries = obj["entries"]
        m = cls(entries)
        if "n" in obj and obj["n"] != m.n:
            raise DimensionError(f"declared n={obj['n']} but entries are {m.n}x{m.n}")
        return m

    def __str__(self):
        return json.dumps(self.to_json()["entries"])

    def __repr__(self):
        return f"RingMatrix({self})"


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a @ b


def mat_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return a + b


def mat_scale(c, a: RingMatrix) -> RingMatrix:
    return a.scale(c)


def mat_sum(mats: Iterable[RingMatrix], n: int) -> RingMatrix:
    """Entrywise sum with one accumulator per entry."""
    mats = list(mats)
    if not mats:
        return RingMatrix.zeros(n)
    return RingMatrix._raw(tuple(
        tuple(poly_sum(m._rows[i][j] for m in mats) for j in range(n)) for i in range(n)
    ))


# -- determinants ------------------------------------------------------------


def det_expansion(m: RingMatrix) -> PolyElem:
    """Leibniz expansion: sum over S_n of sgn(s) * prod_i m[i, s(i)]."""
    rows = m.rows
    terms = []
    for p in itertools.permutations(range(m.n)):
        prod = ONE
        for i, j in enumerate(p):
            x = rows[i][j]
            if not x:
                break
            prod = prod * x
        else:
            terms.append(prod if perm_sign(p) > 0 else -prod)
    return poly_sum(terms)


def _bareiss(a: list, divide) -> object:
    """Fraction-free elimination on a mutable square list; returns the determinant.

    ``divide(x, y)`` must perform an exact division.
    """
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_bareiss(m: RingMatrix) -> PolyElem:
    """Bareiss fraction-free elimination; exact division at every step."""
    if m.is_constant():
        vals = [[x.constant_value() for x in row] for row in m.rows]
        if all(isinstance(v, int) for row in vals for v in row):
            return PolyElem.const(_bareiss(vals, lambda x, y: x // y))
        vals = [[Fraction(v) for v in row] for row in vals]
        return PolyElem.const(_bareiss(vals, lambda x, y: x / y))
    a = [list(row) for row in m.rows]
    d = _bareiss(a, lambda x, y: x if (isinstance(y, int) and y == 1) else x.exact_div(y))
    return as_poly(d)


def det(m: RingMatrix, method: str = "auto") -> PolyElem:
    """Determinant. ``method`` is ``auto``, ``expansion`` or ``bareiss``.

    ``auto`` eliminates when every entry is a constant or n > 5, and expands
    over S_n otherwise.
    """
    if method == "expansion":
        return det_expansion(m)
    if method == "bareiss":
        return det_bareiss(m)
    if method != "auto":
        raise ValueError(f"unknown determinant method {method!r}")
    if m.n == 1:
        return m[0, 0]
    if m.is_constant() or m.n > 5:
        return det_bareiss(m)
    return det_expansion(m)


def permanent_expansion(m: RingMatrix) -> PolyElem:
    rows = m.rows
    terms = []
    for p in itertools.permutations(range(m.n)):
        prod = ONE
        for i, j in enumerate(p):
            x = rows[i][j]
            if not x:
                break
            prod = prod * x
        else:
            terms.append(prod)
    return poly_sum(terms)


def permanent_ryser(m: RingMatrix) -> PolyElem:
    """Ryser's inclusion-exclusion formula over column subsets."""
    n = m.n
    rows = m.rows
    terms = []
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for cols in itertools.combinations(range(n), size):
            prod = ONE
            for row in rows:
                prod = prod * poly_sum(row[c] for c in cols)
                if not prod:
                    break
            if prod:
                terms.append(prod if sign > 0 else -prod)
    return poly_sum(terms)


def permanent(m: RingMatrix, method: str = "auto") -> PolyElem:
    if method == "ryser" or (method == "auto" and m.n > 6):
        return permanent_ryser(m)
    if method in ("auto", "expansion"):
        return permanent_expansion(m)
    raise ValueError(f"unknown permanent method {method!r}")


def minor(m: RingMatrix, i: int, j: int) -> RingMatrix:
    """Delete row ``i`` and column ``j`` (0-based)."""
    if m.n < 2:
        raise DimensionError("a 1x1 matrix has no minors")
    if not (0 <= i < m.n and 0 <= j < m.n):
        raise IndexError(f"minor index ({i}, {j}) out of range for n={m.n}")
    return RingMatrix._raw(tuple(
        tuple(x for c, x in enumerate(row) if c != j) for r, row in enumerate(m.rows) if r != i
    ))


def trace(m: RingMatrix) -> PolyElem:
    return poly_sum(m[i, i] for i in range(m.n))
