import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chvlab.algebra import (
    ONE,
    ZERO,
    DimensionError,
    ParseError,
    PolyElem,
    RingMatrix,
    det,
    det_bareiss,
    det_expansion,
    minor,
    parse_entry,
    permanent,
    permanent_expansion,
    permanent_ryser,
    poly_add,
    poly_mul,
    poly_neg,
    trace,
)
from oracles import det_cofactor, matrix_rows

VARS = ["x", "y", "z", "a11", "b_2"]

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))


@st.composite
def polys(draw, max_terms=4):
    terms = []
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(coeffs)
        mono = {v: draw(st.integers(0, 2)) for v in draw(st.lists(st.sampled_from(VARS), max_size=3))}
        t = PolyElem.const(c)
        for v, e in mono.items():
            t = t * PolyElem.var(v) ** e
        terms.append(t)
    return sum(terms, ZERO)


def rand_matrix(rng, n, mag=4):
    return RingMatrix([[rng.randint(-mag, mag) for _ in range(n)] for _ in range(n)])


# -- polynomials -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(polys())
def test_print_parse_fixed_point(p):
    text = str(p)
    assert parse_entry(text) == p
    assert str(parse_entry(text)) == text


def test_round_trip_100_random():
    rng = random.Random(7)
    for _ in range(100):
        p = ZERO
        for _ in range(rng.randint(0, 5)):
            t = PolyElem.const(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            for v in rng.sample(VARS, rng.randint(0, 3)):
                t = t * PolyElem.var(v) ** rng.randint(1, 3)
            p = p + t
        assert parse_entry(str(p)) == p


def test_additive_inverse_and_commutativity():
    x, y = PolyElem.var("x"), PolyElem.var("y")
    assert poly_add(x + 1, poly_neg(x)) == ONE
    assert str(poly_mul(x, y)) == str(poly_mul(y, x)) == "x*y"
    assert str((x + y) * (x - y)) == "x^2 - y^2"


def test_canonical_serialization_is_deterministic():
    p = parse_entry("3*y*x - 1/2 + x^2 + z")
    q = parse_entry("z + x^2 + 3*x*y - 1/2")
    assert p == q and str(p) == str(q) == "x^2 + 3*x*y + z - 1/2"
    assert hash(p) == hash(q)


@pytest.mark.parametrize("text,expected", [
    ("2*a11 - 3/2", {(("a11", 1),): 2, (): Fraction(-3, 2)}),
    ("-(x)^2 + x*x", {}),
    ("-x^2", {(("x", 2),): -1}),
    ("(a+b)^2 - a^2 - b^2", {(("a", 1), ("b", 1)): 2}),
    ("4/2", {(): 2}),
])
def test_parse_examples(text, expected):
    assert parse_entry(text).terms == expected


@pytest.mark.parametrize("text,pos", [("1/0", 2), ("x +", 3), ("(x", 2), ("x $ y", 2), ("", 0), ("2^x", 2)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_entry(text)
    assert info.value.position == pos


def test_exact_division():
    x, y = PolyElem.var("x"), PolyElem.var("y")
    assert ((x + y) ** 3).exact_div(x + y) == (x + y) ** 2
    with pytest.raises(ArithmeticError):
        (x + 1).exact_div(y)


def test_variable_names_validated():
    with pytest.raises(ValueError):
        PolyElem.var("1x")


# -- matrices ----------------------------------------------------------------


def test_identity_and_unit_products():
    rng = random.Random(1)
    a = rand_matrix(rng, 3)
    ident = RingMatrix.identity(3)
    assert ident @ a == a == a @ ident
    assert RingMatrix.unit(2, 0, 1) @ RingMatrix.unit(2, 1, 0) == RingMatrix.unit(2, 0, 0)


def test_distributivity_entrywise():
    rng = random.Random(2)
    for _ in range(5):
        a, b, c = (rand_matrix(rng, 3) for _ in range(3))
        lhs = a @ (b + c)
        rows = [[sum((a[i, t] * (b[t, j] + c[t, j]) for t in range(3)), ZERO) for j in range(3)] for i in range(3)]
        assert lhs == RingMatrix(rows) == a @ b + a @ c


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        RingMatrix.identity(2) @ RingMatrix.identity(3)
    with pytest.raises(DimensionError):
        RingMatrix([[1, 2]])


def test_det_small_cases():
    assert det(RingMatrix.identity(4)) == ONE
    g = RingMatrix([["a", "b"], ["c", "d"]])
    assert str(det(g)) == "a*d - b*c"
    assert det(RingMatrix([["q"]])) == PolyElem.var("q")


@pytest.mark.parametrize("seed", range(10))
def test_det_methods_agree_on_integers(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = rand_matrix(rng, n, 9)
    want = det_cofactor(matrix_rows(m))
    assert det_expansion(m) == det_bareiss(m) == det(m) == want


def test_det_methods_agree_on_generic_and_rational():
    g = RingMatrix.generic(3, "m")
    assert det_bareiss(g) == det_expansion(g) == det_cofactor(matrix_rows(g))
    r = RingMatrix([["1/2", "1/3"], ["2", "5/7"]])
    assert det_bareiss(r) == det_expansion(r) == PolyElem.const(Fraction(5, 14) - Fraction(2, 3))


def test_det_pivoting_with_zero_leading_entry():
    m = RingMatrix([[0, 1, 2], [3, 0, 1], [1, 1, 0]])
    assert det_bareiss(m) == det_expansion(m)
    s = RingMatrix([[1, 2], [2, 4]])
    assert det_bareiss(s) == ZERO


@pytest.mark.parametrize("seed", range(5))
def test_det_multiplicative(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 4)
    a, b = rand_matrix(rng, n), rand_matrix(rng, n)
    assert det(a @ b) == det(a) * det(b)


def test_permanent_cases():
    assert permanent(RingMatrix.identity(3)) == ONE
    assert permanent(RingMatrix([[1] * 3] * 3)) == PolyElem.const(6)
    g = RingMatrix([["a", "b"], ["c", "d"]])
    assert str(permanent_ryser(g)) == "a*d + b*c"
    d = RingMatrix.diag(["p", "q", "r"])
    assert permanent(d) == det(d) == parse_entry("p*q*r")


@pytest.mark.parametrize("seed", range(5))
def test_permanent_ryser_matches_expansion(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, 3)
    direct = sum((m[0, s[0]] * m[1, s[1]] * m[2, s[2]]
                  for s in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]), ZERO)
    assert permanent_ryser(m) == permanent_expansion(m) == direct
    g = RingMatrix.generic(4, "p")
    assert permanent_ryser(g) == permanent_expansion(g)


def test_minor():
    assert minor(RingMatrix.identity(3), 1, 1) == RingMatrix.identity(2)
    g = RingMatrix([["a", "b"], ["c", "d"]])
    assert minor(g, 0, 0) == RingMatrix([["d"]])
    with pytest.raises(IndexError):
        minor(g, 2, 0)
    with pytest.raises(DimensionError):
        minor(RingMatrix([[1]]), 0, 0)


@pytest.mark.parametrize("seed", range(3))
def test_first_row_laplace(seed):
    m = rand_matrix(random.Random(seed), 4)
    total = sum((m[0, j] * det(minor(m, 0, j)) * (-1) ** j for j in range(4)), ZERO)
    assert total == det_expansion(m)


def test_matrix_json_round_trip():
    m = RingMatrix([["x^2 - 1/3", "0"], ["y", "2*x*y"]])
    assert RingMatrix.from_json(m.to_json()) == m
    with pytest.raises(DimensionError):
        RingMatrix.from_json({"n": 3, "entries": [["1", "0"], ["0", "1"]]})


def test_powers_and_trace():
    m = RingMatrix([[1, 1], [0, 1]])
    assert m**5 == RingMatrix([[1, 5], [0, 1]])
    assert trace(RingMatrix.generic(2, "t")) == parse_entry("t_11 + t_22")
