"""Decorated permutations, paths and maps; the bijection phi and the involution f.

All indices (positions, vertices, permutation values, labels) are 0-based
in Python and 1-based in JSON.

The hatted ("2-") objects carry labels that are pairs ``(row, label)``
where the row components across positions form a permutation.  Every
combinatorial operation is written once over generic hashable labels (the
``_flat`` helpers) and the hatted API lifts its objects to pair labels
before calling it.

A pathmap never stores its sign; :func:`swgt_pathmap` recovers it through
:func:`phi_inv`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .algebra import ONE, PolyElem, RingMatrix, is_permutation, perm_sign


class InvalidObjectError(ValueError):
    """A tuple of data that violates the structural rules of its object type."""


# -- cardinalities -----------------------------------------------------------


def count_decperms(n: int, k: int) -> int:
    return factorial(n) * k**n


def count_A(n: int, k: int) -> int:
    return factorial(n) * k**n * n ** (n - 1)


def count_H(n: int, k: int) -> int:
    return (n - 1) * count_A(n, k)


def count_G(n: int, k: int) -> int:
    return n * count_A(n, k)


def count_decorated_maps(n: int, k: int) -> int:
    return factorial(n) * k**n * (n * n - n + 1)


def count_A2(n: int, k: int) -> int:
    return factorial(n) * count_A(n, k)


def count_H2(n: int, k: int) -> int:
    return factorial(n) * count_H(n, k)


def count_G2(n: int, k: int) -> int:
    return factorial(n) * count_G(n, k)


def count_decorated2_maps(n: int, k: int) -> int:
    return factorial(n) * count_decorated_maps(n, k)


# -- generic label-agnostic core ---------------------------------------------


def _identity(n: int) -> tuple:
    return tuple(range(n))


def _repeated_pair(tau: Sequence[int]):
    """Positions (s, t), s < t, of the unique repeated value, or None."""
    first = {}
    for i, v in enumerate(tau):
        if v in first:
            return first[v], i
        first[v] = i
    return None


def _check_map_shape(sigma: Sequence[int], tau: Sequence[int]):
    """Validate the (sigma, tau) part of a decorated map. Returns the repeated pair or None."""
    n = len(tau)
    if len(sigma) != n or not is_permutation(sigma, n):
        raise InvalidObjectError(f"sigma {tuple(sigma)} is not a permutation of size {n}")
    if any(not 0 <= v < n for v in tau):
        raise InvalidObjectError(f"tau {tuple(tau)} has values outside range({n})")
    distinct = len(set(tau))
    if distinct == n:
        if tuple(sigma) != _identity(n):
            raise InvalidObjectError("sigma must be the identity when tau is a permutation")
        return None
    if distinct != n - 1:
        raise InvalidObjectError(f"tau {tuple(tau)} takes fewer than n-1 distinct values")
    s, t = _repeated_pair(tau)
    swapped = list(range(n))
    swapped[s], swapped[t] = t, s
    if tuple(sigma) not in (_identity(n), tuple(swapped)):
        raise InvalidObjectError(
            f"sigma must be the identity or the transposition of positions {s} and {t}"
        )
    return s, t


def _classify(sigma, tau, mlabels, vertices, plabels):
    """Check the pathmap rules. Returns ``(b, pair)``; ``pair`` is None on A(b, e)."""
    n = len(tau)
    if len(mlabels) != n or len(plabels) != n or len(vertices) != n + 1:
        raise InvalidObjectError("map, labels and path lengths disagree")
    pair = _check_map_shape(sigma, tau)
    if pair is None:
        if tuple(mlabels) != tuple(plabels):
            raise InvalidObjectError("pathmutation labels must match positionwise")
        return vertices[0], None
    s, t = pair
    if vertices[0] != tau[s]:
        raise InvalidObjectError("a pathmap with a repeated target must start at that target")
    for r in range(n):
        if r not in pair and mlabels[r] != plabels[r]:
            raise InvalidObjectError(f"labels differ at position {r}")
    if sigma[s] == s:
        ok = mlabels[s] == plabels[s] and mlabels[t] == plabels[t]
    else:
        ok = mlabels[s] == plabels[t] and mlabels[t] == plabels[s]
    if not ok:
        raise InvalidObjectError("labels at the repeated positions do not follow sigma")
    (b,) = set(range(n)).difference(tau)
    return b, pair


def _phi_flat(pi, labels, vertices, j):
    n = len(pi)
    b = vertices[0]
    if j == b:
        return _identity(n), tuple(pi), tuple(labels), tuple(vertices)
    inv = [0] * n
    for i, v in enumerate(pi):
        inv[v] = i
    s, t = inv[b], inv[j]
    lo, hi = min(s, t), max(s, t)
    sigma, tau, mlab = list(range(n)), list(pi), list(labels)
    sigma[s], tau[s], mlab[s] = lo, j, labels[lo]
    sigma[t], tau[t], mlab[t] = hi, j, labels[hi]
    return tuple(sigma), tuple(tau), tuple(mlab), (j,) + tuple(vertices[1:])


def _phi_inv_flat(sigma, tau, mlabels, vertices, plabels):
    b, pair = _classify(sigma, tau, mlabels, vertices, plabels)
    if pair is None:
        return tuple(tau), tuple(plabels), tuple(vertices), b
    s, s2 = pair
    q1 = vertices[0]
    pi = list(tau)
    if sigma[s] == s:
        pi[s], pi[s2] = b, q1
    else:
        pi[s], pi[s2] = q1, b
    return tuple(pi), tuple(plabels), (b,) + tuple(vertices[1:]), q1


def _map_weight(sigma, tau, labels, A) -> PolyElem:
    w = ONE
    for i in range(len(tau)):
        w = w * A[labels[i]][sigma[i], tau[i]]
        if not w:
            break
    return w


def _path_weight(vertices, labels, B) -> PolyElem:
    w = ONE
    for i in range(len(labels)):
        w = w * B[labels[i]][vertices[i], vertices[i + 1]]
        if not w:
            break
    return w


def _iter_H_flat(n: int, b: int, e: int, words: Sequence[tuple]):
    others = set(range(n)) - {b}
    middles = list(itertools.product(range(n), repeat=n - 1))
    for tau in itertools.product(range(n), repeat=n):
        if set(tau) != others:
            continue
        s, t = _repeated_pair(tau)
        v = tau[s]
        swap = list(range(n))
        swap[s], swap[t] = t, s
        for sigma in (_identity(n), tuple(swap)):
            for word in words:
                mlab = list(word)
                if sigma[s] != s:
                    mlab[s], mlab[t] = word[t], word[s]
                mlab = tuple(mlab)
                for mid in middles:
                    yield sigma, tau, mlab, (v,) + mid + (e,), word


def _check_labels(labels, k: int, what: str):
    if k < 1:
        raise InvalidObjectError("k must be positive")
    if any(not 0 <= x < k for x in labels):
        raise InvalidObjectError(f"{what} labels {tuple(labels)} outside range({k})")


def _check_vertices(vertices, n: int):
    if len(vertices) != n + 1:
        raise InvalidObjectError(f"a path of length {n} needs {n + 1} vertices")
    if any(not 0 <= v < n for v in vertices):
        raise InvalidObjectError(f"path vertices {tuple(vertices)} outside range({n})")


def _set(obj, **fields):
    for name, value in fields.items():
        object.__setattr__(obj, name, value)


def _plus1(seq) -> list:
    return [x + 1 for x in seq]


# -- unhatted objects --------------------------------------------------------


@dataclass(frozen=True)
class DecoratedPermutation:
    pi: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, pi=tuple(self.pi), labels=tuple(self.labels))
        if not is_permutation(self.pi) or len(self.pi) == 0:
            raise InvalidObjectError(f"{self.pi} is not a permutation")
        if len(self.labels) != len(self.pi):
            raise InvalidObjectError("one label per position is required")
        _check_labels(self.labels, self.k, "permutation")

    @property
    def n(self) -> int:
        return len(self.pi)

    def to_json(self) -> dict:
        return {"kind": "decperm", "k": self.k, "pi": _plus1(self.pi), "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class DecoratedPath:
    vertices: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, vertices=tuple(self.vertices), labels=tuple(self.labels))
        _check_vertices(self.vertices, len(self.labels))
        _check_labels(self.labels, self.k, "path")

    @property
    def n(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {"kind": "decpath", "k": self.k, "vertices": _plus1(self.vertices),
                "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class Pathmutation:
    perm: DecoratedPermutation
    path: DecoratedPath

    def __post_init__(self):
        if self.perm.n != self.path.n or self.perm.k != self.path.k:
            raise InvalidObjectError("permutation and path sizes disagree")
        if self.perm.labels != self.path.labels:
            raise InvalidObjectError("pathmutation labels must match positionwise")

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def k(self) -> int:
        return self.perm.k

    @property
    def b(self) -> int:
        return self.path.vertices[0]

    @property
    def e(self) -> int:
        return self.path.vertices[-1]

    def to_json(self) -> dict:
        return {"kind": "pathmutation", "k": self.k, "pi": _plus1(self.perm.pi),
                "labels": _plus1(self.perm.labels), "vertices": _plus1(self.path.vertices)}


@dataclass(frozen=True)
class DecoratedMap:
    sigma: tuple
    tau: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, sigma=tuple(self.sigma), tau=tuple(self.tau), labels=tuple(self.labels))
        if len(self.labels) != len(self.tau) or not self.tau:
            raise InvalidObjectError("one label per position is required")
        _check_map_shape(self.sigma, self.tau)
        _check_labels(self.labels, self.k, "map")

    @property
    def n(self) -> int:
        return len(self.tau)

    def to_json(self) -> dict:
        return {"kind": "decmap", "k": self.k, "sigma": _plus1(self.sigma),
                "tau": _plus1(self.tau), "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class Pathmap:
    dmap: DecoratedMap
    path: DecoratedPath

    def __post_init__(self):
        if self.dmap.n != self.path.n or self.dmap.k != self.path.k:
            raise InvalidObjectError("map and path sizes disagree")
        _classify(self.dmap.sigma, self.dmap.tau, self.dmap.labels,
                  self.path.vertices, self.path.labels)

    @property
    def n(self) -> int:
        return self.dmap.n

    @property
    def k(self) -> int:
        return self.dmap.k

    @property
    def b(self) -> int:
        """The b with this pathmap in G(b, e)."""
        return _classify(self.dmap.sigma, self.dmap.tau, self.dmap.labels,
                         self.path.vertices, self.path.labels)[0]

    @property
    def e(self) -> int:
        return self.path.vertices[-1]

    def in_H(self) -> bool:
        return len(set(self.dmap.tau)) < self.n

    def to_json(self) -> dict:
        return {"kind": "pathmap", "k": self.k, "sigma": _plus1(self.dmap.sigma),
                "tau": _plus1(self.dmap.tau), "labels": _plus1(self.dmap.labels),
                "vertices": _plus1(self.path.vertices), "path_labels": _plus1(self.path.labels)}

    @classmethod
    def from_pathmutation(cls, pm: Pathmutation) -> "Pathmap":
        return cls(DecoratedMap(_identity(pm.n), pm.perm.pi, pm.perm.labels, pm.k), pm.path)


def swgt_decperm(p: DecoratedPermutation, A: Sequence[RingMatrix]) -> PolyElem:
    _check_mats(A, p.n, p.k)
    w = _map_weight(_identity(p.n), p.pi, p.labels, A)
    return w if perm_sign(p.pi) > 0 else -w


def wgt_decpath(q: DecoratedPath, B: Sequence[RingMatrix]) -> PolyElem:
    _check_mats(B, q.n, q.k)
    return _path_weight(q.vertices, q.labels, B)


def _check_mats(mats, n: int, k: int):
    if len(mats) < k:
        raise ValueError(f"need {k} matrices, got {len(mats)}")
    for m in list(mats)[:k]:
        if m.n != n:
            raise ValueError(f"matrix of size {m.n} used with objects of size {n}")


def phi(pm: Pathmutation, j: int) -> Pathmap:
    """Image of ``(pm, j)`` in G(b, e), where b, e are the endpoints of ``pm``."""
    if not 0 <= j < pm.n:
        raise ValueError(f"j={j} outside range({pm.n})")
    sigma, tau, mlab, verts = _phi_flat(pm.perm.pi, pm.perm.labels, pm.path.vertices, j)
    return Pathmap(DecoratedMap(sigma, tau, mlab, pm.k), DecoratedPath(verts, pm.path.labels, pm.k))


def phi_inv(pmap: Pathmap) -> tuple:
    """Inverse of :func:`phi`: returns ``(pathmutation, j)``."""
    d, q = pmap.dmap, pmap.path
    pi, labels, verts, j = _phi_inv_flat(d.sigma, d.tau, d.labels, q.vertices, q.labels)
    return Pathmutation(DecoratedPermutation(pi, labels, pmap.k), DecoratedPath(verts, labels, pmap.k)), j


def wgt_pathmap(pmap: Pathmap, A, B) -> PolyElem:
    d, q = pmap.dmap, pmap.path
    w = _map_weight(d.sigma, d.tau, d.labels, A)
    if not w:
        return w
    return w * _path_weight(q.vertices, q.labels, B)


def swgt_pathmap(pmap: Pathmap, A, B) -> PolyElem:
    """sgn of the permutation underlying ``phi_inv(pmap)`` times the weight."""
    w = wgt_pathmap(pmap, A, B)
    if not w:
        return w
    pm, _ = phi_inv(pmap)
    return w if perm_sign(pm.perm.pi) > 0 else -w


def swgt_pathmutation(pm: Pathmutation, A, B) -> PolyElem:
    return swgt_decperm(pm.perm, A) * wgt_decpath(pm.path, B)


def involution_f(pmap: Pathmap) -> Pathmap:
    """Exchange the values b and j in the underlying permutation and map back through phi."""
    pm, j = phi_inv(pmap)
    b = pm.b
    if j == b:
        raise ValueError("involution_f is defined on H(b, e) only")
    pi = [j if v == b else b if v == j else v for v in pm.perm.pi]
    swapped = Pathmutation(DecoratedPermutation(pi, pm.perm.labels, pm.k), pm.path)
    return phi(swapped, j)


def enumerate_decperms(n: int, k: int) -> Iterator[DecoratedPermutation]:
    for pi in itertools.permutations(range(n)):
        for labels in itertools.product(range(k), repeat=n):
            yield DecoratedPermutation(pi, labels, k)


def enumerate_decpaths(n: int, k: int, b: int | None = None, e: int | None = None):
    """Decorated paths of length n, optionally with fixed endpoints."""
    starts = range(n) if b is None else (b,)
    ends = range(n) if e is None else (e,)
    for labels in itertools.product(range(k), repeat=n):
        for q1 in starts:
            for mid in itertools.product(range(n), repeat=n - 1):
                for qe in ends:
                    yield DecoratedPath((q1,) + mid + (qe,), labels, k)


def _check_be(n: int, b: int, e: int):
    if n < 1:
        raise ValueError("n must be positive")
    if not (0 <= b < n and 0 <= e < n):
        raise ValueError(f"(b, e)=({b}, {e}) outside range({n})")


def enumerate_pathmutations(n: int, k: int, b: int, e: int) -> Iterator[Pathmutation]:
    """A(b, e) in lexicographic order over (pi, labels, path)."""
    _check_be(n, b, e)
    middles = list(itertools.product(range(n), repeat=n - 1))
    for pi in itertools.permutations(range(n)):
        for labels in itertools.product(range(k), repeat=n):
            perm = DecoratedPermutation(pi, labels, k)
            for mid in middles:
                yield Pathmutation(perm, DecoratedPath((b,) + mid + (e,), labels, k))


def enumerate_H(n: int, k: int, b: int, e: int) -> Iterator[Pathmap]:
    """H(b, e) built directly from the pathmap rules, not through phi."""
    _check_be(n, b, e)
    words = list(itertools.product(range(k), repeat=n))
    for sigma, tau, mlab, verts, word in _iter_H_flat(n, b, e, words):
        yield Pathmap(DecoratedMap(sigma, tau, mlab, k), DecoratedPath(verts, word, k))


def enumerate_G(n: int, k: int, b: int, e: int) -> Iterator[Pathmap]:
    """G(b, e): the pathmutations of A(b, e) followed by H(b, e)."""
    for pm in enumerate_pathmutations(n, k, b, e):
        yield Pathmap.from_pathmutation(pm)
    yield from enumerate_H(n, k, b, e)


def _iter_map_shapes(n: int):
    for tau in itertools.product(range(n), repeat=n):
        distinct = len(set(tau))
        if distinct == n:
            yield _identity(n), tau
        elif distinct == n - 1:
            s, t = _repeated_pair(tau)
            swap = list(range(n))
            swap[s], swap[t] = t, s
            yield _identity(n), tau
            yield tuple(swap), tau


def enumerate_decorated_maps(n: int, k: int) -> Iterator[DecoratedMap]:
    for sigma, tau in _iter_map_shapes(n):
        for labels in itertools.product(range(k), repeat=n):
            yield DecoratedMap(sigma, tau, labels, k)


# -- hatted objects ----------------------------------------------------------


def _check_alpha(alpha, n: int):
    if not is_permutation(alpha, n):
        raise InvalidObjectError(f"alpha {tuple(alpha)} is not a permutation of size {n}")


@dataclass(frozen=True)
class Decorated2Permutation:
    """Position i carries target ``pi[i]`` and label ``(alpha[pi[i]], labels[i])``."""

    pi: tuple
    alpha: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, pi=tuple(self.pi), alpha=tuple(self.alpha), labels=tuple(self.labels))
        if not is_permutation(self.pi) or not self.pi:
            raise InvalidObjectError(f"{self.pi} is not a permutation")
        _check_alpha(self.alpha, len(self.pi))
        if len(self.labels) != len(self.pi):
            raise InvalidObjectError("one label per position is required")
        _check_labels(self.labels, self.k, "permutation")

    @property
    def n(self) -> int:
        return len(self.pi)

    def pair_labels(self) -> tuple:
        return tuple((self.alpha[v], l) for v, l in zip(self.pi, self.labels))

    def to_json(self) -> dict:
        return {"kind": "dec2perm", "k": self.k, "pi": _plus1(self.pi),
                "alpha": _plus1(self.alpha), "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class Decorated2Path:
    """Edge i carries the label ``(alpha[i], labels[i])``."""

    vertices: tuple
    alpha: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, vertices=tuple(self.vertices), alpha=tuple(self.alpha), labels=tuple(self.labels))
        _check_vertices(self.vertices, len(self.labels))
        _check_alpha(self.alpha, len(self.labels))
        _check_labels(self.labels, self.k, "path")

    @property
    def n(self) -> int:
        return len(self.labels)

    def pair_labels(self) -> tuple:
        return tuple(zip(self.alpha, self.labels))

    def to_json(self) -> dict:
        return {"kind": "dec2path", "k": self.k, "vertices": _plus1(self.vertices),
                "alpha": _plus1(self.alpha), "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class Pathmutation2:
    perm: Decorated2Permutation
    path: Decorated2Path

    def __post_init__(self):
        if self.perm.n != self.path.n or self.perm.k != self.path.k:
            raise InvalidObjectError("permutation and path sizes disagree")
        if self.perm.pair_labels() != self.path.pair_labels():
            raise InvalidObjectError("2-pathmutation labels must match positionwise")

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def k(self) -> int:
        return self.perm.k

    @property
    def b(self) -> int:
        return self.path.vertices[0]

    @property
    def e(self) -> int:
        return self.path.vertices[-1]

    def to_json(self) -> dict:
        return {"kind": "pathmutation2", "k": self.k, "pi": _plus1(self.perm.pi),
                "alpha": _plus1(self.perm.alpha), "labels": _plus1(self.perm.labels),
                "vertices": _plus1(self.path.vertices)}


@dataclass(frozen=True)
class Decorated2Map:
    """Position i carries ``(sigma[i], tau[i])`` and the label ``(alpha[i], labels[i])``."""

    sigma: tuple
    tau: tuple
    alpha: tuple
    labels: tuple
    k: int

    def __post_init__(self):
        _set(self, sigma=tuple(self.sigma), tau=tuple(self.tau), alpha=tuple(self.alpha),
             labels=tuple(self.labels))
        if len(self.labels) != len(self.tau) or not self.tau:
            raise InvalidObjectError("one label per position is required")
        _check_map_shape(self.sigma, self.tau)
        _check_alpha(self.alpha, len(self.tau))
        _check_labels(self.labels, self.k, "map")

    @property
    def n(self) -> int:
        return len(self.tau)

    def pair_labels(self) -> tuple:
        return tuple(zip(self.alpha, self.labels))

    def to_json(self) -> dict:
        return {"kind": "dec2map", "k": self.k, "sigma": _plus1(self.sigma), "tau": _plus1(self.tau),
                "alpha": _plus1(self.alpha), "labels": _plus1(self.labels)}


@dataclass(frozen=True)
class Pathmap2:
    dmap: Decorated2Map
    path: Decorated2Path

    def __post_init__(self):
        if self.dmap.n != self.path.n or self.dmap.k != self.path.k:
            raise InvalidObjectError("map and path sizes disagree")
        _classify(self.dmap.sigma, self.dmap.tau, self.dmap.pair_labels(),
                  self.path.vertices, self.path.pair_labels())

    @property
    def n(self) -> int:
        return self.dmap.n

    @property
    def k(self) -> int:
        return self.dmap.k

    @property
    def b(self) -> int:
        return _classify(self.dmap.sigma, self.dmap.tau, self.dmap.pair_labels(),
                         self.path.vertices, self.path.pair_labels())[0]

    @property
    def e(self) -> int:
        return self.path.vertices[-1]

    def in_H(self) -> bool:
        return len(set(self.dmap.tau)) < self.n

    def to_json(self) -> dict:
        return {"kind": "pathmap2", "k": self.k, "sigma": _plus1(self.dmap.sigma),
                "tau": _plus1(self.dmap.tau), "alpha": _plus1(self.dmap.alpha),
                "labels": _plus1(self.dmap.labels), "vertices": _plus1(self.path.vertices),
                "path_alpha": _plus1(self.path.alpha), "path_labels": _plus1(self.path.labels)}

    @classmethod
    def from_pathmutation(cls, pm: Pathmutation2) -> "Pathmap2":
        pairs = pm.perm.pair_labels()
        dmap = Decorated2Map(_identity(pm.n), pm.perm.pi, [a for a, _ in pairs],
                             [l for _, l in pairs], pm.k)
        return cls(dmap, pm.path)


def pair_table(mats: Sequence[Sequence[RingMatrix]]) -> dict:
    """Index an n x k array of matrices by ``(row, label)`` pairs."""
    if isinstance(mats, dict):
        return mats
    return {(i, j): m for i, row in enumerate(mats) for j, m in enumerate(row)}


def swgt_dec2perm(p: Decorated2Permutation, A) -> PolyElem:
    A = pair_table(A)
    w = _map_weight(_identity(p.n), p.pi, p.pair_labels(), A)
    return w if perm_sign(p.pi) > 0 else -w


def wgt_dec2path(q: Decorated2Path, B) -> PolyElem:
    return _path_weight(q.vertices, q.pair_labels(), pair_table(B))


def swgt_pathmutation2(pm: Pathmutation2, A, B) -> PolyElem:
    return swgt_dec2perm(pm.perm, A) * wgt_dec2path(pm.path, B)


def _split(pairs):
    return [a for a, _ in pairs], [l for _, l in pairs]


def hat_phi(pm: Pathmutation2, j: int) -> Pathmap2:
    """The hatted bijection; the rewritten first edge starts at j."""
    if not 0 <= j < pm.n:
        raise ValueError(f"j={j} outside range({pm.n})")
    sigma, tau, mlab, verts = _phi_flat(pm.perm.pi, pm.perm.pair_labels(), pm.path.vertices, j)
    alpha, labels = _split(mlab)
    return Pathmap2(Decorated2Map(sigma, tau, alpha, labels, pm.k),
                    Decorated2Path(verts, pm.path.alpha, pm.path.labels, pm.k))


def hat_phi_inv(pmap: Pathmap2) -> tuple:
    d, q = pmap.dmap, pmap.path
    pi, pairs, verts, j = _phi_inv_flat(d.sigma, d.tau, d.pair_labels(), q.vertices, q.pair_labels())
    alpha = [0] * pmap.n
    for v, (row, _) in zip(pi, pairs):
        alpha[v] = row
    labels = [l for _, l in pairs]
    perm = Decorated2Permutation(pi, alpha, labels, pmap.k)
    path = Decorated2Path(verts, [row for row, _ in pairs], labels, pmap.k)
    return Pathmutation2(perm, path), j


def wgt_pathmap2(pmap: Pathmap2, A, B) -> PolyElem:
    d, q = pmap.dmap, pmap.path
    w = _map_weight(d.sigma, d.tau, d.pair_labels(), pair_table(A))
    if not w:
        return w
    return w * _path_weight(q.vertices, q.pair_labels(), pair_table(B))


def swgt_pathmap2(pmap: Pathmap2, A, B) -> PolyElem:
    w = wgt_pathmap2(pmap, A, B)
    if not w:
        return w
    pm, _ = hat_phi_inv(pmap)
    return w if perm_sign(pm.perm.pi) > 0 else -w


def involution_f2(pmap: Pathmap2) -> Pathmap2:
    """Swap the values b and j in pi and compose alpha with the same transposition."""
    pm, j = hat_phi_inv(pmap)
    b = pm.b
    if j == b:
        raise ValueError("involution_f2 is defined on H2(b, e) only")

    def swap(v):
        return j if v == b else b if v == j else v

    pi = [swap(v) for v in pm.perm.pi]
    alpha = [pm.perm.alpha[swap(v)] for v in range(pm.n)]
    perm = Decorated2Permutation(pi, alpha, pm.perm.labels, pm.k)
    return hat_phi(Pathmutation2(perm, pm.path), j)


def enumerate_dec2perms(n: int, k: int) -> Iterator[Decorated2Permutation]:
    for pi in itertools.permutations(range(n)):
        for alpha in itertools.permutations(range(n)):
            for labels in itertools.product(range(k), repeat=n):
                yield Decorated2Permutation(pi, alpha, labels, k)


def enumerate_dec2paths(n: int, k: int, b: int | None = None, e: int | None = None):
    for alpha in itertools.permutations(range(n)):
        for q in enumerate_decpaths(n, k, b, e):
            yield Decorated2Path(q.vertices, alpha, q.labels, k)


def enumerate_pathmutations2(n: int, k: int, b: int, e: int) -> Iterator[Pathmutation2]:
    """A2(b, e) in lexicographic order over (pi, alpha, labels, path)."""
    _check_be(n, b, e)
    middles = list(itertools.product(range(n), repeat=n - 1))
    for pi in itertools.permutations(range(n)):
        for alpha in itertools.permutations(range(n)):
            path_alpha = tuple(alpha[v] for v in pi)
            for labels in itertools.product(range(k), repeat=n):
                perm = Decorated2Permutation(pi, alpha, labels, k)
                for mid in middles:
                    yield Pathmutation2(perm, Decorated2Path((b,) + mid + (e,), path_alpha, labels, k))


def _pair_words(n: int, k: int) -> list:
    return [tuple(zip(gamma, labels))
            for gamma in itertools.permutations(range(n))
            for labels in itertools.product(range(k), repeat=n)]


def enumerate_H2(n: int, k: int, b: int, e: int) -> Iterator[Pathmap2]:
    _check_be(n, b, e)
    for sigma, tau, mlab, verts, word in _iter_H_flat(n, b, e, _pair_words(n, k)):
        ma, ml = _split(mlab)
        pa, pl = _split(word)
        yield Pathmap2(Decorated2Map(sigma, tau, ma, ml, k), Decorated2Path(verts, pa, pl, k))


def enumerate_G2(n: int, k: int, b: int, e: int) -> Iterator[Pathmap2]:
    for pm in enumerate_pathmutations2(n, k, b, e):
        yield Pathmap2.from_pathmutation(pm)
    yield from enumerate_H2(n, k, b, e)


def enumerate_decorated2_maps(n: int, k: int) -> Iterator[Decorated2Map]:
    for sigma, tau in _iter_map_shapes(n):
        for alpha in itertools.permutations(range(n)):
            for labels in itertools.product(range(k), repeat=n):
                yield Decorated2Map(sigma, tau, alpha, labels, k)


# -- JSON --------------------------------------------------------------------


def _minus1(seq) -> tuple:
    return tuple(x - 1 for x in seq)


def object_from_json(obj: dict):
    """Rebuild any object serialized by a ``to_json`` method."""
    kind, k = obj["kind"], obj["k"]
    g = lambda name: _minus1(obj[name])  # noqa: E731
    if kind == "decperm":
        return DecoratedPermutation(g("pi"), g("labels"), k)
    if kind == "decpath":
        return DecoratedPath(g("vertices"), g("labels"), k)
    if kind == "pathmutation":
        labels = g("labels")
        return Pathmutation(DecoratedPermutation(g("pi"), labels, k), DecoratedPath(g("vertices"), labels, k))
    if kind == "decmap":
        return DecoratedMap(g("sigma"), g("tau"), g("labels"), k)
    if kind == "pathmap":
        return Pathmap(DecoratedMap(g("sigma"), g("tau"), g("labels"), k),
                       DecoratedPath(g("vertices"), g("path_labels"), k))
    if kind == "dec2perm":
        return Decorated2Permutation(g("pi"), g("alpha"), g("labels"), k)
    if kind == "dec2path":
        return Decorated2Path(g("vertices"), g("alpha"), g("labels"), k)
    if kind == "pathmutation2":
        perm = Decorated2Permutation(g("pi"), g("alpha"), g("labels"), k)
        path = Decorated2Path(g("vertices"), [perm.alpha[v] for v in perm.pi], perm.labels, k)
        return Pathmutation2(perm, path)
    if kind == "dec2map":
        return Decorated2Map(g("sigma"), g("tau"), g("alpha"), g("labels"), k)
    if kind == "pathmap2":
        return Pathmap2(Decorated2Map(g("sigma"), g("tau"), g("alpha"), g("labels"), k),
                        Decorated2Path(g("vertices"), g("path_alpha"), g("path_labels"), k))
    raise ValueError(f"unknown object kind {kind!r}")
