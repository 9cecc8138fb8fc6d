from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coalie.errors import CyclicBindingError, ParseError
from coalie.exactmath import (MultiPoly, QMatrix, Subspace, determinant, format_rational,
                              kernel_basis, maximal_minors, parse_rational, poly_substitute,
                              rank, rref)

small = st.integers(-4, 4).map(Fraction)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("−7/3", Fraction(-7, 3)), (" 4 / 6 ", Fraction(2, 3)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", "", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_format_rational_round_trip():
    for q in (Fraction(0), Fraction(5), Fraction(-3, 7)):
        assert parse_rational(format_rational(q)) == q


@given(matrices())
def test_rref_is_idempotent(rows):
    m = QMatrix(rows)
    R, rk, piv = rref(m)
    R2, rk2, piv2 = rref(R)
    assert R2 == R and rk2 == rk and piv2 == piv


@given(matrices())
def test_rank_nullity(rows):
    m = QMatrix(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert not any(m.apply(v))


@given(matrices(3, 3))
def test_determinant_detects_rank(rows):
    if len(rows) != len(rows[0]):
        return
    assert (determinant(rows) == 0) == (rank(QMatrix(rows)) < len(rows))


def test_maximal_minors():
    rows = [[1, 0], [0, 1], [1, 1]]
    minors = dict(maximal_minors(rows, 2))
    assert minors == {(0, 1): 1, (0, 2): 1, (1, 2): -1}


def test_subspace_equality_and_membership():
    a = Subspace([(1, 1, 0), (0, 1, 0)], 3)
    b = Subspace([(1, 0, 0), (2, 3, 0)], 3)
    assert a == b
    assert a.contains((5, -2, 0)) and not a.contains((0, 0, 1))
    ann = Subspace(a.annihilator(), 3)
    assert ann == Subspace([(0, 0, 1)], 3)


def test_subspace_intersection():
    a = Subspace([(1, 0, 0), (0, 1, 0)], 3)
    b = Subspace([(0, 1, 0), (0, 0, 1)], 3)
    assert a.intersect(b) == Subspace([(0, 1, 0)], 3)
    assert a.intersect(Subspace([], 3)).dim == 0


# ---------------------------------------------------------------------------
# polynomials

names = ["a", "b", "c"]


def polys():
    mono = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
    return st.dictionaries(mono, small, max_size=4).map(lambda t: MultiPoly(names, t))


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.const(0)


@given(polys(), st.dictionaries(st.sampled_from(names), small, min_size=3, max_size=3))
def test_evaluate_is_a_ring_map(p, point):
    q = p * p + p
    assert q.evaluate(point) == p.evaluate(point) ** 2 + p.evaluate(point)


def test_substitute_resolves_chains():
    a, b, c = (MultiPoly.var(u) for u in "abc")
    p = a * b + c
    out = poly_substitute(p, {"a": b + 1, "b": c * 2})
    assert out == (c * 2 + 1) * (c * 2) + c


def test_cyclic_binding_raises():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    with pytest.raises(CyclicBindingError):
        poly_substitute(a + b, {"a": b + 1, "b": a})


def test_monomial_and_linear_views():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    assert (3 * a ** 3).as_monomial() == (3, {"a": 3})
    lin, const = (2 * a - b + 5).linear_parts()
    assert lin == {"a": 2, "b": -1} and const == 5
    assert (a * b).linear_parts() is None


def test_poly_text():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    assert str(MultiPoly.const(0)) == "0"
    assert str(Fraction(1, 8) * a ** 3) == "1/8*a^3"
    assert "b" in str(a - b)
