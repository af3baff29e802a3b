"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`PolyElem` is a finite map from monomials to nonzero coefficients.
Monomials are tuples of ``(name, exponent)`` pairs sorted by name, so two
polynomials are equal exactly when their term maps are equal.

Coefficients are ``int`` when integral and :class:`fractions.Fraction`
otherwise; the mixed representation keeps integer-heavy workloads fast.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Natural sort key for indeterminate names (``a2`` before ``a10``)."""
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


@lru_cache(maxsize=1 << 16)
def term_order_key(m: Monomial) -> tuple:
    """Graded-lex sort key: smaller key means the term is printed earlier."""
    ordered = sorted(m, key=lambda ve: var_key(ve[0]))
    return (-mono_degree(m), tuple((var_key(v), -e) for v, e in ordered))


def _mono_divide(a: Monomial, b: Monomial):
    """Return a/b as a monomial, or None when b does not divide a."""
    d = dict(a)
    for v, e in b:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


class PolyElem:
    """Immutable polynomial over the rationals in named commuting indeterminates."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _norm(c)
                if c:
                    key = _canon_mono(mono)
                    clean[key] = clean.get(key, 0) + c
            clean = {m: _norm(c) for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "PolyElem":
        # trusted constructor: terms already canonical with nonzero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "PolyElem":
        c = _norm(c)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "PolyElem":
        if not _IDENT.match(name):
            raise ValueError(f"invalid indeterminate name {name!r}")
        return cls._raw({((name, 1),): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> Coeff:
        """Value of a constant polynomial; raises for non-constants."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, 0)

    def coefficient(self, mono: Monomial | Mapping = ONE_MONO) -> Coeff:
        return self._terms.get(_canon_mono(mono), 0)

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``. The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(mono_degree(m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def leading_term(self):
        """(monomial, coefficient) that is largest in graded-lex order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = min(self._terms, key=term_order_key)
        return m, self._terms[m]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = as_poly(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return PolyElem._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyElem._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-as_poly(other))

    def __rsub__(self, other):
        return as_poly(other) + (-self)

    def scale(self, c) -> "PolyElem":
        c = _norm(c)
        if not c:
            return ZERO
        if c == 1:
            return self
        return PolyElem._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = as_poly(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and ONE_MONO in b:
            return self.scale(b[ONE_MONO])
        if len(a) == 1 and ONE_MONO in a:
            return other.scale(a[ONE_MONO])
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return PolyElem._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor) -> "PolyElem":
        """Quotient of an exact division; raises ArithmeticError if not exact."""
        divisor = as_poly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(Fraction(1) / Fraction(divisor.constant_value()))
        lm, lc = divisor.leading_term()
        rem, quot = self, {}
        while rem._terms:
            rm, rc = rem.leading_term()
            qm = _mono_divide(rm, lm)
            if qm is None:
                raise ArithmeticError(f"{divisor} does not divide {self}")
            qc = _norm(Fraction(rc) / lc)
            quot[qm] = qc
            rem = rem - PolyElem._raw({qm: qc}) * divisor
        return PolyElem._raw(quot)

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PolyElem):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == PolyElem.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text -------------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: term_order_key(mc[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            body = _format_term(m, -c if neg else c)
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"PolyElem({str(self)!r})"


def _format_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _format_term(m: Monomial, c: Coeff) -> str:
    factors = []
    for v, e in sorted(m, key=lambda ve: var_key(ve[0])):
        factors.append(v if e == 1 else f"{v}^{e}")
    if not factors:
        return _format_coeff(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([_format_coeff(c)] + factors)


def _canon_mono(mono) -> Monomial:
    if isinstance(mono, Mapping):
        items = mono.items()
    else:
        items = mono
    d: dict = {}
    for v, e in items:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r} for {v!r}")
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def as_poly(x) -> PolyElem:
    """Coerce ints, Fractions, strings (parsed) and PolyElem to PolyElem."""
    if isinstance(x, PolyElem):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyElem.const(x)
    if isinstance(x, str):
        from .parse import parse_entry

        return parse_entry(x)
    raise TypeError(f"cannot convert {type(x).__name__} to PolyElem")


def poly_sum(items: Iterable) -> PolyElem:
    """Sum many polynomials with a single accumulation dict."""
    out: dict = {}
    for p in items:
        for m, c in as_poly(p)._terms.items():
            out[m] = out.get(m, 0) + c
    return PolyElem._raw({m: _norm(c) for m, c in out.items() if c})


def poly_prod(items: Iterable) -> PolyElem:
    result = ONE
    for p in items:
        result = result * p
        if not result._terms:
            return ZERO
    return result


def poly_add(a, b) -> PolyElem:
    return as_poly(a) + as_poly(b)


def poly_mul(a, b) -> PolyElem:
    return as_poly(a) * as_poly(b)


def poly_neg(a) -> PolyElem:
    return -as_poly(a)


ZERO = PolyElem._raw({})
ONE = PolyElem._raw({ONE_MONO: 1})
