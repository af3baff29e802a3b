"""Seeded generators of commuting families and constraint families.

Every generator is a pure function of its arguments. Randomness comes from
:class:`~chvlab.prng.Xoshiro256` with a fixed stream index per use, so
identical specs give identical families.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra import RingMatrix, PolyElem, mat_sum
from .families import ConstraintFamily, MixedConstraintFamily
from .prng import ALGORITHM, Xoshiro256

STRATEGIES = ("diagonal-generic", "powers-of-one", "circulant", "conjugated-diagonal")

_STREAM_COMMUTING = 1
_STREAM_CONSTRAINED = 2
_STREAM_MATRIX = 3
_STREAM_ROWS = 16


@dataclass(frozen=True)
class FamilySpec:
    strategy: str
    n: int
    k: int
    seed: int = 0
    symbolic: bool = False
    magnitude: int = 3

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {', '.join(STRATEGIES)}")
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be at least 1")
        if self.magnitude < 1:
            raise ValueError("magnitude must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    def to_json(self) -> dict:
        return {**asdict(self), "prng": ALGORITHM}

    @classmethod
    def from_json(cls, obj: dict) -> "FamilySpec":
        return cls(obj["strategy"], obj["n"], obj["k"], obj.get("seed", 0),
                   obj.get("symbolic", False), obj.get("magnitude", 3))


def random_matrix(n: int, rng: Xoshiro256, magnitude: int) -> RingMatrix:
    return RingMatrix([[rng.randint(-magnitude, magnitude) for _ in range(n)] for _ in range(n)])


def random_integer_matrix(n: int, seed: int, magnitude: int = 3) -> RingMatrix:
    return random_matrix(n, Xoshiro256(seed, _STREAM_MATRIX), magnitude)


def random_tuple(n: int, count: int, seed: int, magnitude: int = 3) -> list:
    rng = Xoshiro256(seed, _STREAM_MATRIX)
    return [random_matrix(n, rng, magnitude) for _ in range(count)]


def shift_matrix(n: int) -> RingMatrix:
    """Cyclic shift S with S e_i = e_{i+1}."""
    return RingMatrix([[1 if r == (c + 1) % n else 0 for c in range(n)] for r in range(n)])


def unimodular_pair(n: int, rng: Xoshiro256, steps: int | None = None):
    """(P, P^-1) from a product of random elementary row additions."""
    ident = RingMatrix.identity(n)
    p, p_inv = ident, ident
    if n == 1:
        return p, p_inv
    for _ in range(steps or 2 * n):
        i = rng.randint(0, n - 1)
        j = rng.randint(0, n - 2)
        j += j >= i
        c = rng.nonzero(2)
        e = ident + RingMatrix.unit(n, i, j).scale(c)
        e_inv = ident - RingMatrix.unit(n, i, j).scale(c)
        p, p_inv = e @ p, p_inv @ e_inv
    if p @ p_inv != ident:
        raise AssertionError("unimodular inverse mismatch")
    return p, p_inv


def gen_commuting(spec: FamilySpec) -> list:
    """k pairwise commuting n x n matrices following ``spec.strategy``."""
    n, k, mag = spec.n, spec.k, spec.magnitude
    rng = Xoshiro256(spec.seed, _STREAM_COMMUTING)

    def scalar(name: str):
        return PolyElem.var(name) if spec.symbolic else rng.randint(-mag, mag)

    if spec.strategy == "diagonal-generic":
        mats = [RingMatrix.diag([scalar(f"b{j + 1}_{i + 1}") for i in range(n)]) for j in range(k)]
    elif spec.strategy == "powers-of-one":
        c = RingMatrix.generic(n, "c") if spec.symbolic else random_matrix(n, rng, mag)
        mats, power = [], c
        for _ in range(k):
            mats.append(power)
            power = power @ c
    elif spec.strategy == "circulant":
        s = shift_matrix(n)
        powers = [s**t for t in range(n)]
        mats = [mat_sum((powers[t].scale(scalar(f"c{j + 1}_{t}")) for t in range(n)), n) for j in range(k)]
    else:
        p, p_inv = unimodular_pair(n, rng)
        mats = [p @ RingMatrix.diag([scalar(f"d{j + 1}_{i + 1}") for i in range(n)]) @ p_inv
                for j in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if not mats[i].commutes_with(mats[j]):
                raise AssertionError(f"generator produced a non-commuting pair ({i}, {j})")
    return mats


def _antisymmetric(k: int, rng: Xoshiro256, magnitude: int) -> list:
    e = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            v = rng.nonzero(magnitude)
            e[i][j], e[j][i] = v, -v
    return e


def _constrained_row(B: list, rng: Xoshiro256, symbolic: bool, magnitude: int, cname: str):
    n, k = B[0].n, len(B)
    e = _antisymmetric(k, rng, magnitude)
    c = RingMatrix.generic(n, cname) if symbolic else random_matrix(n, rng, magnitude)
    cb = [c @ b for b in B]
    A = [mat_sum((cb[j].scale(e[i][j]) for j in range(k) if e[i][j]), n) for i in range(k)]
    return A, e


def gen_constrained(B: list, seed: int, symbolic: bool = False, magnitude: int = 3) -> ConstraintFamily:
    """A_i = sum_j e_ij C B_j with e antisymmetric, so sum_i A_i B_i = 0.

    ``symbolic`` makes C a matrix of indeterminates ``g_ij``. For k = 1 the
    result is A_1 = 0 and the family is flagged degenerate.
    """
    B = list(B)
    rng = Xoshiro256(seed, _STREAM_CONSTRAINED)
    A, e = _constrained_row(B, rng, symbolic, magnitude, "g")
    fam = ConstraintFamily(A, B, degenerate=len(B) == 1, meta={"e": e})
    fam.check()
    return fam


def constrained_family(spec: FamilySpec) -> ConstraintFamily:
    fam = gen_constrained(gen_commuting(spec), spec.seed, spec.symbolic, spec.magnitude)
    fam.meta["spec"] = spec.to_json()
    return fam


def gen_mixed_constrained(spec: FamilySpec) -> MixedConstraintFamily:
    """One commuting pool of n*k matrices; row i gets its own coefficients and C_i."""
    n, k = spec.n, spec.k
    pool = gen_commuting(FamilySpec(spec.strategy, n, n * k, spec.seed, spec.symbolic, spec.magnitude))
    B = [pool[i * k:(i + 1) * k] for i in range(n)]
    A = []
    for i in range(n):
        rng = Xoshiro256(spec.seed, _STREAM_ROWS + i)
        row, _ = _constrained_row(B[i], rng, spec.symbolic, spec.magnitude, f"g{i + 1}")
        A.append(row)
    fam = MixedConstraintFamily(A, B, degenerate=k == 1, meta={"spec": spec.to_json()})
    fam.check()
    return fam


def specialize_CH(M: RingMatrix) -> ConstraintFamily:
    """A = (-I, M), B = (M, I): the classical Cayley-Hamilton setting."""
    ident = RingMatrix.identity(M.n)
    fam = ConstraintFamily([-ident, M], [M, ident])
    fam.check()
    return fam


def specialize_commuting_pair(A: RingMatrix, B: RingMatrix) -> ConstraintFamily:
    """A = (A, -B), B = (B, A) for a commuting pair."""
    fam = ConstraintFamily([A, -B], [B, A])
    fam.check()
    return fam


def commuting_rows_family(Ms: list) -> MixedConstraintFamily:
    """Rows (I, M_i) against (M_i, -I) for pairwise commuting M_i."""
    n = Ms[0].n
    ident = RingMatrix.identity(n)
    fam = MixedConstraintFamily([[ident, m] for m in Ms], [[m, -ident] for m in Ms])
    fam.check()
    return fam
