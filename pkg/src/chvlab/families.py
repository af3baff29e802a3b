"""Matrix families carrying the hypotheses of the multivariate Cayley-Hamilton theorems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import DimensionError, RingMatrix, mat_sum


class HypothesisViolation(ValueError):
    """A family fails its own hypotheses. ``witness`` says where."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


def _dims(mats: Sequence[RingMatrix]) -> int:
    n = mats[0].n
    if any(m.n != n for m in mats):
        raise DimensionError("all matrices in a family must share one dimension")
    return n


def commutation_witness(mats: Sequence[RingMatrix], pairs) -> dict | None:
    for i, j in pairs:
        if not mats[i].commutes_with(mats[j]):
            return {"kind": "commutation", "pair": [i + 1, j + 1]}
    return None


def zero_witness(m: RingMatrix, kind: str, **extra) -> dict | None:
    hit = m.first_nonzero()
    if hit is None:
        return None
    i, j, v = hit
    return {"kind": kind, "entry": [i + 1, j + 1], "value": str(v), **extra}


@dataclass
class ConstraintFamily:
    """A_1..A_k, B_1..B_k with pairwise commuting B and sum_i A_i B_i = 0."""

    A: list
    B: list
    degenerate: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.A, self.B = list(self.A), list(self.B)
        if not self.A or len(self.A) != len(self.B):
            raise DimensionError("A and B must be non-empty lists of equal length")
        _dims(self.A + self.B)

    @property
    def n(self) -> int:
        return self.A[0].n

    @property
    def k(self) -> int:
        return len(self.A)

    def constraint_sum(self) -> RingMatrix:
        return mat_sum((a @ b for a, b in zip(self.A, self.B)), self.n)

    def violation(self, require_constraint: bool = True) -> dict | None:
        k = self.k
        w = commutation_witness(self.B, [(i, j) for i in range(k) for j in range(i + 1, k)])
        if w is None and require_constraint:
            w = zero_witness(self.constraint_sum(), "constraint")
        return w

    def check(self, require_constraint: bool = True) -> None:
        w = self.violation(require_constraint)
        if w is not None:
            raise HypothesisViolation(f"family violates its {w['kind']} hypothesis", w)

    def to_json(self) -> dict:
        return {"kind": "constraint", "n": self.n, "k": self.k,
                "A": [m.to_json() for m in self.A], "B": [m.to_json() for m in self.B]}

    @classmethod
    def from_json(cls, obj: dict) -> "ConstraintFamily":
        fam = cls([RingMatrix.from_json(m) for m in obj["A"]], [RingMatrix.from_json(m) for m in obj["B"]])
        for key, val in (("n", fam.n), ("k", fam.k)):
            if key in obj and obj[key] != val:
                raise DimensionError(f"declared {key}={obj[key]} does not match the matrices ({val})")
        return fam


@dataclass
class MixedConstraintFamily:
    """n x k arrays A[i][j], B[i][j]; B commutes across rows, each row sums A B to zero."""

    A: list
    B: list
    degenerate: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.A = [list(r) for r in self.A]
        self.B = [list(r) for r in self.B]
        if not self.A or len(self.A) != len(self.B):
            raise DimensionError("A and B need the same number of rows")
        k = len(self.A[0])
        if k == 0 or any(len(r) != k for r in self.A + self.B):
            raise DimensionError("every row must hold k >= 1 matrices")
        n = _dims([m for r in self.A + self.B for m in r])
        if n != len(self.A):
            raise DimensionError(f"{len(self.A)} rows given for {n} x {n} matrices")

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def k(self) -> int:
        return len(self.A[0])

    def row_sum(self, i: int) -> RingMatrix:
        return mat_sum((a @ b for a, b in zip(self.A[i], self.B[i])), self.n)

    def violation(self, require_constraint: bool = True) -> dict | None:
        n, k = self.n, self.k
        flat = [m for r in self.B for m in r]
        pairs = [(i * k + j, i2 * k + j2) for i in range(n) for i2 in range(i + 1, n)
                 for j in range(k) for j2 in range(k)]
        w = commutation_witness(flat, pairs)
        if w is not None:
            a, b = (x - 1 for x in w["pair"])
            return {"kind": "commutation", "pair": [[a // k + 1, a % k + 1], [b // k + 1, b % k + 1]]}
        if require_constraint:
            for i in range(n):
                w = zero_witness(self.row_sum(i), "constraint", row=i + 1)
                if w is not None:
                    return w
        return None

    def check(self, require_constraint: bool = True) -> None:
        w = self.violation(require_constraint)
        if w is not None:
            raise HypothesisViolation(f"family violates its {w['kind']} hypothesis", w)

    def to_json(self) -> dict:
        return {"kind": "mixed-constraint", "n": self.n, "k": self.k,
                "A": [[m.to_json() for m in r] for r in self.A],
                "B": [[m.to_json() for m in r] for r in self.B]}

    @classmethod
    def from_json(cls, obj: dict) -> "MixedConstraintFamily":
        rows = lambda key: [[RingMatrix.from_json(m) for m in r] for r in obj[key]]  # noqa: E731
        fam = cls(rows("A"), rows("B"))
        for key, val in (("n", fam.n), ("k", fam.k)):
            if key in obj and obj[key] != val:
                raise DimensionError(f"declared {key}={obj[key]} does not match the matrices ({val})")
        return fam


def family_from_json(obj: dict):
    kind = obj.get("kind")
    if kind == "constraint":
        return ConstraintFamily.from_json(obj)
    if kind == "mixed-constraint":
        return MixedConstraintFamily.from_json(obj)
    raise ValueError(f"unknown family kind {kind!r}")
