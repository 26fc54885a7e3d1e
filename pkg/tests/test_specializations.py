from __future__ import annotations

import random

import pytest

from mvinterlace.graph import Graph, all_graphs, complete, path, random_graph
from mvinterlace.interlace import brute_force_B
from mvinterlace.poly import parse_poly
from mvinterlace.specializations import (SIGMA_EQ, LoopedGraphError, b_independence, b_xy, b_y0, big_q_poly,
                                         independence_poly, q_poly, stable_sets)

NAMES = "abcdefgh"


def small_graphs(max_n=4):
    for n in range(max_n + 1):
        yield from all_graphs(NAMES[:n])


def test_q_of_edge():
    assert q_poly(path("a", "b")) == parse_poly("u'^2 - 2*u' + 2*v'")
    assert not q_poly(path("a", "b")).is_positive()


def test_independence_of_triangle():
    assert independence_poly(complete("abc")).canonical_text() == "1 + 3*v"


def test_b_independence_direct_on_looped_path():
    g = Graph.from_edges("abc", [("a", "b"), ("b", "c")], loops="c")
    assert b_independence(g, "direct") == parse_poly("1 + x_a*v + x_b*v + y_c*v + x_a*y_c*v^2")


def test_stable_sets_of_path():
    assert sorted(map(sorted, stable_sets(path("a", "b", "c")))) == [[], ["a"], ["a", "c"], ["b"], ["c"]]


@pytest.mark.parametrize("method,rule4", [("recursion", "deletion"), ("recursion", "pivot")])
def test_b_y0_recursions(method, rule4):
    for g in small_graphs():
        assert b_y0(g, method, rule4) == b_y0(g)


def test_b_xy_recursion_and_loop_insensitivity():
    for g in small_graphs():
        assert b_xy(g, "recursion") == b_xy(g)
        assert b_xy(g.toggle_loops(g.vertices)) == b_xy(g)


@pytest.mark.parametrize("method", ["recursion_q123", "recursion_q3prime"])
def test_q_recursions(method):
    for g in small_graphs():
        assert q_poly(g, method) == q_poly(g)


def test_big_q_recursion_loop_free():
    for n in range(6):
        for g in all_graphs(NAMES[:n]):
            if g.loops():
                continue
            q = big_q_poly(g)
            assert big_q_poly(g, "recursion_Q") == q
            assert q.is_positive()


def test_big_q_recursion_refuses_loops():
    with pytest.raises(LoopedGraphError):
        big_q_poly(Graph.from_edges("a", loops="a"), "recursion_Q")


@pytest.mark.parametrize("method", ["direct", "recursion_I14", "recursion_I56", "recursion_I567"])
def test_b_independence_methods(method):
    for g in small_graphs():
        assert b_independence(g, method) == b_independence(g)


def test_independence_methods_random():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(NAMES[:rng.randint(5, 7)], rng, p_edge=rng.random(), p_loop=rng.random())
        want = independence_poly(g, "direct")
        assert independence_poly(g) == want == independence_poly(g, "recursion")


def test_unknown_method():
    with pytest.raises(ValueError):
        b_xy(path("a", "b"), "magic")


def test_sigma_eq_matches_definition():
    g = path("a", "b").toggle_loops("a")
    assert SIGMA_EQ.apply(brute_force_B(g)) == b_xy(g, "recursion")
