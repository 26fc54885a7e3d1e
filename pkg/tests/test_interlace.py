from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvinterlace.graph import Graph, all_graphs, path, random_graph
from mvinterlace.interlace import (RHO, ReconstructionError, X, Y, brute_force_B, intermediate_Bij, mu,
                                   reconstruct_graph, recursive_B, specialize_B1, theta, u, v,
                                   valid_first_choices)
from mvinterlace.poly import MultiPoly, parse_poly

NAMES = "abcdefgh"


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_graph(NAMES[:n], rng, p_edge=rng.random(), p_loop=rng.random())


def test_base_cases():
    a = Graph.from_edges("a")
    al = Graph.from_edges("a", loops="a")
    for f in (brute_force_B, recursive_B):
        assert f(Graph.from_edges("")) == 1
        assert f(a).canonical_text() == "1 + x_a*v + y_a*u"
        assert f(al) == 1 + X("a") * u + Y("a") * v


def test_edge_by_hand():
    # the nine (A, B) pairs of a-b; only {a,b} with one looped side has rank 1
    want = parse_poly(
        "1 + x_a*v + y_a*u + x_b*v + y_b*u + x_a*x_b*u^2 + x_a*y_b*u^2 + y_a*x_b*u^2 + y_a*y_b*u*v")
    assert brute_force_B(path("a", "b")) == want


def test_disjoint_union_multiplies():
    g = path("a", "b")
    h = Graph.from_edges("c", loops="c")
    assert brute_force_B(g.disjoint_union(h)) == brute_force_B(g) * brute_force_B(h)


def test_recursive_equals_brute_n3():
    for n in range(4):
        for g in all_graphs(NAMES[:n]):
            assert recursive_B(g) == brute_force_B(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_recursive_equals_brute_random(g):
    assert recursive_B(g) == brute_force_B(g)


def test_every_first_choice_agrees():
    g = Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("a", "c")], loops="bd")
    want = brute_force_B(g)
    choices = valid_first_choices(g)
    assert "d" in choices and ("a", "b") in choices and ("b", "a") in choices
    for c in choices:
        assert recursive_B(g, first=c) == want


def test_first_choice_must_be_valid():
    g = path("a", "b", "c")
    with pytest.raises(ValueError):
        recursive_B(g, first="a")
    with pytest.raises(ValueError):
        recursive_B(g, first=("a", "c"))


def test_brute_is_positive():
    for g in all_graphs("abc"):
        assert brute_force_B(g).is_positive()


def test_intermediate_sum_is_B():
    g = path("c", "a", "b", "d").toggle_loops("b")
    total = sum((intermediate_Bij(g, "a", "b", i, j) for i in range(3) for j in range(3)), MultiPoly())
    assert total == brute_force_B(g)


def test_claim8_first_relation():
    # u y_a B(G^a - a) = B_20 + B_21 + B_22 for a-b
    g = Graph.from_edges("abc", [("a", "b"), ("a", "c")])
    lhs = u * Y("a") * brute_force_B(g.local_complement("a").delete("a"))
    rhs = sum((intermediate_Bij(g, "a", "b", 2, j) for j in range(3)), MultiPoly())
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_theta_inverts_v_to_one(g):
    p = brute_force_B(g)
    assert theta(specialize_B1(p)) == p


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.data())
def test_loop_toggle_swaps_x_and_y(g, data):
    t = data.draw(st.sets(st.sampled_from(g.vertices))) if len(g) else set()
    assert brute_force_B(g.toggle_loops(t)) == mu(brute_force_B(g), t)
    assert mu(mu(brute_force_B(g), t), t) == brute_force_B(g)


def test_reconstruction_round_trip_n3():
    for n in range(4):
        for g in all_graphs(NAMES[:n]):
            assert reconstruct_graph(RHO.apply(brute_force_B(g))) == g


def test_reconstruction_reads_loops():
    assert reconstruct_graph(parse_poly("1 + x_a*u")).loops() == {"a"}
    assert reconstruct_graph(parse_poly("1 + x_a")).loops() == frozenset()


def test_reconstruction_rejects_garbage():
    with pytest.raises(ReconstructionError):
        reconstruct_graph(parse_poly("1 + x_a*u^2"))
    with pytest.raises(ReconstructionError):
        reconstruct_graph(parse_poly("1 + x_a + y_a"))
