import itertools
import random
from math import factorial

import pytest

from chvlab.algebra import ZERO, PolyElem, RingMatrix, det, mat_sum, poly_sum, trace
from chvlab.families import ConstraintFamily, MixedConstraintFamily
from chvlab.gen import (
    FamilySpec,
    constrained_family,
    commuting_rows_family,
    gen_commuting,
    gen_constrained,
    gen_mixed_constrained,
    random_integer_matrix,
    random_tuple,
    specialize_CH,
)
from chvlab.report import validate_report
from chvlab.suites import (
    WORKED_EXAMPLE_TERMS,
    coefficient_matrix,
    det_B_minor,
    laplace_matrix,
    lemma_A2_sum,
    lemma_A_sum,
    lemma_G_sum,
    lemma_H_sum,
    mixed_matrix,
    pathmutation2_entry_identity,
    pathmutation_entry_identity,
    phillips_matrix,
    random_order,
    verify_bapat_roy,
    verify_bijection,
    verify_commuting_pair,
    verify_involution,
    verify_laplace,
    verify_lemmas,
    verify_lemmas2,
    verify_mixed_theorem,
    verify_phillips,
    verify_worked_example,
    worked_example_terms,
    worked_example_terms2,
)
from chvlab.xpoly import (
    NonCommutingError,
    bapat_roy_xpoly,
    mixed_char_xpoly,
    multivar_char_poly,
    substitute,
    substitute_commuting,
    substitute_mixed,
    symmetrized_substitute,
)
from oracles import adjugate, charpoly_oracle, mixed_poly_oracle, sign


def rand_mats(rng, n, k, mag=3):
    return [RingMatrix([[rng.randint(-mag, mag) for _ in range(n)] for _ in range(n)]) for _ in range(k)]


def free_family(n, k, seed):
    """Arbitrary A with commuting B: no constraint."""
    return ConstraintFamily(random_tuple(n, k, seed), gen_commuting(FamilySpec("conjugated-diagonal", n, k, seed)))


def free_mixed_family(n, k, seed):
    pool = gen_commuting(FamilySpec("conjugated-diagonal", n, n * k, seed))
    A = random_tuple(n, n * k, seed)
    return MixedConstraintFamily([A[i * k:(i + 1) * k] for i in range(n)], [pool[i * k:(i + 1) * k] for i in range(n)])


# -- polynomial constructions -------------------------------------------------


@pytest.mark.parametrize("n,k", [(1, 3), (2, 2), (3, 2), (3, 3)])
def test_multivar_char_poly_matches_oracle(n, k):
    mats = rand_mats(random.Random(n * k), n, k)
    p = multivar_char_poly(mats)
    assert p.to_poly() == charpoly_oracle(mats)
    assert p.is_homogeneous(n)


def test_multivar_char_poly_generic():
    mats = [RingMatrix.generic(2, "a"), RingMatrix.generic(2, "b")]
    assert multivar_char_poly(mats).to_poly() == charpoly_oracle(mats)
    one = multivar_char_poly([RingMatrix([[2, 1], [1, 3]])])
    assert one.terms == {(2,): PolyElem.const(5)}


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 2)])
def test_mixed_char_xpoly_matches_oracle(n, k):
    rng = random.Random(40 + n + k)
    grid = [rand_mats(rng, n, k) for _ in range(n)]
    p = mixed_char_xpoly(grid)
    assert p.to_poly() == mixed_poly_oracle(grid)
    assert p.is_multilinear() and p.is_homogeneous(n)


def test_mixed_char_xpoly_with_equal_rows_is_charpoly_in_disguise():
    # identical rows: merging x_{i,j} -> x_j recovers det(sum_j A_j x_j)
    mats = rand_mats(random.Random(2), 2, 2)
    p = mixed_char_xpoly([mats, mats])
    merged = {}
    for e, c in p.terms.items():
        key = (e[0] + e[2], e[1] + e[3])
        merged[key] = merged.get(key, ZERO) + c
    want = multivar_char_poly(mats).terms
    assert {key: v for key, v in merged.items() if v} == want


@pytest.mark.parametrize("strategy", ["diagonal-generic", "circulant", "conjugated-diagonal"])
def test_substitution_order_irrelevant_when_commuting(strategy):
    B = gen_commuting(FamilySpec(strategy, 3, 3, 1))
    p = multivar_char_poly(rand_mats(random.Random(3), 3, 3))
    base = substitute(p, B)
    for order in itertools.permutations(range(3)):
        assert substitute(p, B, order) == base
    assert substitute_commuting(p, B) == base


def test_substitution_guards():
    p = multivar_char_poly(rand_mats(random.Random(4), 2, 2))
    x, y = RingMatrix.unit(2, 0, 1), RingMatrix.unit(2, 1, 0)
    with pytest.raises(NonCommutingError):
        substitute_commuting(p, [x, y])
    with pytest.raises(ValueError):
        substitute(p, [x])
    with pytest.raises(ValueError):
        substitute(p, [x, y], order=[0, 0])
    q = multivar_char_poly(rand_mats(random.Random(5), 2, 4))
    with pytest.raises(ValueError):
        substitute_mixed(q, [[x, x], [x, x]])


# -- Phillips and its specializations ----------------------------------------


@pytest.mark.parametrize("strategy", ["diagonal-generic", "powers-of-one", "circulant", "conjugated-diagonal"])
def test_phillips_on_constrained_families(strategy):
    for n, k in [(2, 2), (3, 3)]:
        fam = constrained_family(FamilySpec(strategy, n, k, seed=7))
        report = verify_phillips(fam)
        assert report.status == "pass", report.witness
        validate_report(report.to_json())


def test_phillips_symbolic_diagonal():
    fam = constrained_family(FamilySpec("diagonal-generic", 2, 2, 0, symbolic=True))
    assert phillips_matrix(fam).is_zero()


def test_phillips_rejects_unconstrained_input():
    report = verify_phillips(free_family(2, 2, 3))
    assert report.status == "hypothesis_violation"
    assert report.witness["kind"] == "constraint"


def test_phillips_nonzero_without_constraint():
    # the theorem genuinely needs its hypothesis: free families give nonzero p(B)
    assert not phillips_matrix(free_family(2, 2, 1)).is_zero()


def test_degenerate_family_is_flagged():
    fam = constrained_family(FamilySpec("circulant", 2, 1, 0))
    report = verify_phillips(fam)
    assert report.status == "pass" and report.data == {"degenerate": True}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classic_cayley_hamilton(n):
    for seed in range(3):
        m = random_integer_matrix(n, seed)
        assert verify_phillips(specialize_CH(m), theorem="cayley-hamilton").passed


def test_two_by_two_against_adjugate():
    m = RingMatrix.generic(2, "m")
    ident = RingMatrix.identity(2)
    assert m @ adjugate(m) == ident.scale(det(m))
    # adj(M) = tr(M) I - M at n = 2, so M^2 - tr(M) M + det(M) I = 0
    assert adjugate(m) == ident.scale(trace(m)) - m
    assert m @ m - m.scale(trace(m)) + ident.scale(det(m)) == RingMatrix.zeros(2)
    assert phillips_matrix(specialize_CH(m)).is_zero()


def test_two_matrix_corollary():
    for seed in range(3):
        a, b = gen_commuting(FamilySpec("conjugated-diagonal", 3, 2, seed))
        assert verify_commuting_pair(a, b).passed
    m = random_integer_matrix(3, 9)
    assert verify_commuting_pair(RingMatrix.identity(3), m).passed
    assert verify_commuting_pair(m, m).passed
    bad = verify_commuting_pair(RingMatrix.unit(2, 0, 1), RingMatrix.unit(2, 1, 0))
    assert bad.status == "hypothesis_violation"


# -- Bapat-Roy ----------------------------------------------------------------


def test_bapat_roy_polynomial_shape():
    mats = rand_mats(random.Random(8), 3, 3)
    f = bapat_roy_xpoly(mats)
    assert f.is_multilinear()
    assert f.terms[(1, 1, 1)] == PolyElem.const(1)
    m = mats[0]
    g = bapat_roy_xpoly([m, m, m])
    x = PolyElem.var("x")
    collapsed = poly_sum(c * x ** sum(e) for e, c in g.terms.items())
    assert collapsed == det(RingMatrix.identity(3).scale(x) - m)


def test_bapat_roy_cases_that_hold():
    assert verify_bapat_roy([RingMatrix([[5]])]).passed
    m = random_integer_matrix(3, 2)
    assert verify_bapat_roy([m, m, m]).passed
    com = gen_commuting(FamilySpec("conjugated-diagonal", 3, 3, 4))
    report = verify_bapat_roy(com, seed=4)
    assert report.passed and report.data["commuting"] and report.data["alternative_zero"]


def test_bapat_roy_order_dependence():
    e11, e12 = RingMatrix.unit(2, 0, 0), RingMatrix.unit(2, 0, 1)
    f = bapat_roy_xpoly([e11, e12])
    assert not substitute(f, [e11, e12]).is_zero()
    assert symmetrized_substitute(f, [e11, e12]).is_zero()
    report = verify_bapat_roy([e11, e12])
    assert report.status == "fail" and report.data["symmetrized_zero"]
    validate_report(report.to_json())


@pytest.mark.parametrize("n", [2, 3])
def test_bapat_roy_symmetrized_vanishes(n):
    for seed in range(5):
        report = verify_bapat_roy(random_tuple(n, n, seed), seed=seed)
        assert report.data["symmetrized_zero"]
        assert sorted(report.data["alternative_order"]) == list(range(1, n + 1))


def test_random_order_is_seeded_permutation():
    assert random_order(5, 3) == random_order(5, 3)
    assert sorted(random_order(5, 3)) == list(range(5))


# -- mixed theorem ------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
def test_mixed_theorem_on_generated_families(n):
    for seed in range(2):
        fam = gen_mixed_constrained(FamilySpec("conjugated-diagonal", n, 2, seed))
        report = verify_mixed_theorem(fam)
        assert report.passed, report.witness


def test_mixed_theorem_symbolic():
    fam = gen_mixed_constrained(FamilySpec("diagonal-generic", 2, 2, 0, symbolic=True))
    assert mixed_matrix(fam).is_zero()


def test_mixed_corollary_family():
    ms = gen_commuting(FamilySpec("powers-of-one", 3, 3, 1))
    assert verify_mixed_theorem(commuting_rows_family(ms), theorem="commuting-rows").passed


def test_mixed_theorem_reports_violations():
    report = verify_mixed_theorem(free_mixed_family(2, 2, 1))
    assert report.status == "hypothesis_violation" and report.witness["kind"] == "constraint"


def test_mixed_theorem_with_equal_rows_reduces_to_phillips():
    fam = constrained_family(FamilySpec("circulant", 2, 2, 3))
    rows = MixedConstraintFamily([fam.A, fam.A], [fam.B, fam.B])
    assert mixed_matrix(rows).is_zero()


# -- signed-weight sums -------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
def test_lemmas_on_constrained_families(n):
    fam = constrained_family(FamilySpec("conjugated-diagonal", n, 2, 11))
    report = verify_lemmas(fam)
    assert report.passed, report.witness
    assert report.counts["pairs"] == n * n


def test_lemmas_symbolic():
    B = gen_commuting(FamilySpec("diagonal-generic", 2, 2, 0, symbolic=True))
    fam = gen_constrained(B, 0, symbolic=True)
    assert verify_lemmas(fam).passed


@pytest.mark.parametrize("n", [2, 3])
def test_pathmutation_identity_needs_only_commuting_B(n):
    fam = free_family(n, 2, n)
    for b in range(n):
        for e in range(n):
            assert pathmutation_entry_identity(fam, b, e).passed


def test_pathmutation_identity_fully_generic_A():
    A = [RingMatrix.generic(2, "p"), RingMatrix.generic(2, "q")]
    B = gen_commuting(FamilySpec("diagonal-generic", 2, 2, 0, symbolic=True))
    fam = ConstraintFamily(A, B)
    p = phillips_matrix(fam)
    for b in range(2):
        for e in range(2):
            assert lemma_A_sum(fam, b, e) == p[b, e]
            assert lemma_H_sum(fam, b, e) == ZERO


def closed_form_G(fam, b, e):
    """sum_s (-1)^(s+b) (R det_B M[s|b])_{s,e}, R = sum_l A_l B_l, minors summed out by hand."""
    n = fam.n
    R = mat_sum((a @ bm for a, bm in zip(fam.A, fam.B)), n)
    total = ZERO
    for s in range(n):
        minor = RingMatrix.zeros(n)
        for perm in itertools.permutations(range(n)):
            if perm[s] != b:
                continue
            prod = RingMatrix.identity(n)
            for r in range(n):
                if r != s:
                    prod = prod @ mat_sum((bm.scale(a[r, perm[r]]) for a, bm in zip(fam.A, fam.B)), n)
            minor = minor + prod.scale(sign(perm) * (-1) ** (s + b))
        total = total + (R @ minor)[s, e] * (-1) ** (s + b)
    return total


@pytest.mark.parametrize("n", [2, 3])
def test_G_sum_closed_form_for_arbitrary_A(n):
    fam = free_family(n, 2, 20 + n)
    for b in range(n):
        for e in range(n):
            assert lemma_G_sum(fam, b, e) == closed_form_G(fam, b, e)


def test_hatted_lemmas_symbolic_two():
    fam = gen_mixed_constrained(FamilySpec("diagonal-generic", 2, 2, 0, symbolic=True))
    report = verify_lemmas2(fam)
    assert report.passed, report.witness


@pytest.mark.parametrize("seed", [0, 1])
def test_hatted_identity_carries_factorial(seed):
    fam = free_mixed_family(2, 2, seed)
    for b in range(2):
        for e in range(2):
            report = pathmutation2_entry_identity(fam, b, e)
            assert report.passed and report.witness is None
            assert report.counts["A2"] == factorial(2) * 2**2 * 2 * factorial(2)


def test_hatted_lemmas_catch_unscaled_comparison():
    # without the n! factor the comparison would fail whenever the entry is nonzero
    fam = free_mixed_family(2, 2, 5)
    pb = mixed_matrix(fam)
    nonzero = [(b, e) for b in range(2) for e in range(2) if pb[b, e]]
    assert nonzero
    b, e = nonzero[0]
    assert lemma_A2_sum(fam, b, e) != pb[b, e]


# -- column expansion ---------------------------------------------------------


def test_det_B_minor_small():
    fam = free_family(2, 2, 2)
    assert det_B_minor(fam, 0, 0) == coefficient_matrix(fam, 1, 1)
    assert det_B_minor(fam, 0, 1) == coefficient_matrix(fam, 1, 0)
    with pytest.raises(IndexError):
        det_B_minor(fam, 2, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_laplace_expansion_reassembles_phillips_matrix(n):
    fam = free_family(n, 2, 30 + n)
    target = phillips_matrix(fam)
    for b in range(n):
        assert laplace_matrix(fam, b) == target


def test_laplace_identity_on_constrained_family():
    fam = constrained_family(FamilySpec("conjugated-diagonal", 3, 2, 6))
    assert verify_laplace(fam).passed
    assert verify_laplace(free_family(3, 2, 1)).status == "hypothesis_violation"


# -- worked example and combinatorial reports --------------------------------


def test_worked_example_families():
    report = verify_worked_example()
    assert report.passed, report.witness
    assert len(report.data["term_families"]) == 4
    assert len(report.data["term_families2"]) == 8
    got = [str(t) for t in worked_example_terms((0, 1))]
    assert sorted(got) == sorted(WORKED_EXAMPLE_TERMS)
    groups = worked_example_terms2((0, 1))
    assert set(groups) == {(0, 1), (1, 0)} and all(len(v) == 8 for v in groups.values())


def test_worked_example_cancels_in_pairs():
    for word in itertools.product(range(2), repeat=2):
        terms = worked_example_terms(word)
        assert len(terms) == 8
        # the four H members cancel in two pairs; the four pathmutation terms survive
        cancelled = [t for t in terms if -t in terms]
        assert len(cancelled) == 4
        assert poly_sum(terms) == poly_sum(t for t in terms if -t not in terms)


def test_combinatorial_reports():
    fam = free_family(3, 2, 0)
    assert verify_involution(fam).passed
    mixed = free_mixed_family(2, 2, 0)
    assert verify_involution(mixed, hatted=True).passed
    for hatted in (False, True):
        report = verify_bijection(2, 2, hatted=hatted)
        assert report.passed, report.witness
        validate_report(report.to_json())
    assert verify_bijection(3, 2, b=0, e=1).counts["G"] == 1296
