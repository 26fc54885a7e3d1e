from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvinterlace.poly import (MultiPoly, PolySyntaxError, Substitution, canonical_text, is_positive, parse_poly,
                              quasi_degree, shift_minus, shift_plus, truncate, var)

u, v = MultiPoly.from_var(var("u")), MultiPoly.from_var(var("v"))


def X(a):
    return MultiPoly.from_var(var("x", a))


def Y(a):
    return MultiPoly.from_var(var("y", a))


VARS = [var("x", "a"), var("x", "b"), var("y", "a"), var("y", "b"), var("u"), var("v")]


@st.composite
def polys(draw, max_terms=4):
    out = MultiPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-5, 5))
        powers = {w: draw(st.integers(0, 2)) for w in draw(st.lists(st.sampled_from(VARS), max_size=3))}
        out = out + MultiPoly.monomial({w: e for w, e in powers.items() if e}, c)
    return out


def test_add_examples():
    p = 1 + X("a") * v
    assert p + 0 == p
    assert X("a") + (-1) * X("a") == MultiPoly()
    assert canonical_text(p + Y("a") * u) == "1 + x_a*v + y_a*u"


def test_mul_examples():
    p = 1 + X("a") * v
    assert p * 1 == p
    assert X("a") * X("a") == MultiPoly.from_var(var("x", "a"), 2)
    assert (1 + X("a") * v) * (1 + X("b") * v) == 1 + X("a") * v + X("b") * v + X("a") * X("b") * v**2


def test_quasi_degree():
    assert quasi_degree(parse_poly("x_a*y_b*u^3*v").sorted_terms()[0][0]) == 2
    assert quasi_degree(parse_poly("u^5*v^2").sorted_terms()[0][0]) == 0
    assert quasi_degree(parse_poly("x_a^2*y_a").sorted_terms()[0][0]) == 3


def test_truncate():
    p = 1 + X("a") * v + Y("a") * u
    assert truncate(p, 0) == 1
    assert truncate(p, 10) == p


def test_shifts():
    assert shift_minus(X("a") * X("b")) == X("a") * X("b") - X("a") - X("b") + 1
    assert shift_minus(MultiPoly.const(1)) == 1


def test_is_positive():
    assert is_positive(MultiPoly())
    assert not is_positive(parse_poly("u'^2 - 2*u' + 2*v'"))
    assert is_positive(1 + X("a") * v)


def test_canonical_text():
    assert canonical_text(MultiPoly()) == "0"
    assert canonical_text(parse_poly("-3*x_a*x_b + 2 - u")) == "2 - u - 3*x_a*x_b"
    assert canonical_text(parse_poly("u'^2 - 2*u' + 2*v'")) == "-2*u' + u'^2 + 2*v'"


def test_substitution_q_on_edge():
    # B of the edge a-b, written out by hand from its 9 (A, B) pairs
    b_ab = parse_poly(
        "1 + x_a*v + y_a*u + x_b*v + y_b*u + x_a*x_b*u^2 + x_a*y_b*u^2 + y_a*x_b*u^2 + y_a*y_b*u*v")
    sigma = Substitution.parse("u := u'-1; v := v'-1; x_@ := 1; y_@ := 0")
    assert sigma.apply(b_ab) == parse_poly("u'^2 - 2*u' + 2*v'")


def test_substitution_family_template():
    swap = Substitution(families={"x": Y("@"), "y": X("@")})
    p = X("a") * Y("b") + u
    assert swap.apply(p) == Y("a") * X("b") + u
    assert swap.apply(swap.apply(p)) == p
    exact = Substitution({var("x", "a"): 7}, {"x": 0})
    assert exact.apply(X("a") + X("b")) == 7


@pytest.mark.parametrize("bad", ["", "1 +", "x_", "2**u", "u^", "(u"])
def test_parse_errors(bad):
    with pytest.raises(PolySyntaxError):
        parse_poly(bad)


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=150, deadline=None)
@given(polys())
def test_text_round_trip(p):
    assert parse_poly(canonical_text(p)) == p


@settings(max_examples=100, deadline=None)
@given(polys(), polys())
def test_substitution_is_homomorphism(p, q):
    s = Substitution({var("u"): parse_poly("u' - 1")}, {"x": parse_poly("2*y_@ + 1")})
    assert s.apply(p + q) == s.apply(p) + s.apply(q)
    assert s.apply(p * q) == s.apply(p) * s.apply(q)


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), st.integers(0, 4))
def test_truncation_laws(p, q, d):
    assert truncate(p + q, d) == truncate(p, d) + truncate(q, d)
    assert truncate(p * q, d) == truncate(truncate(p, d) * truncate(q, d), d)
    assert p.mul_truncated(q, d) == truncate(p * q, d)
    assert truncate(truncate(p, d + 1), d) == truncate(p, d)


@settings(max_examples=100, deadline=None)
@given(polys())
def test_shift_round_trip(p):
    assert shift_plus(shift_minus(p)) == p


def test_big_coefficients_exact():
    p = (1 + X("a") + X("b") + X("c")) ** 20
    assert p.coefficient({}) == 1
    assert sum(p.terms.values()) == 4**20
