from __future__ import annotations

import random
from itertools import combinations

import pytest

from mvinterlace import matroid as mt
from mvinterlace.graph import complete
from mvinterlace.matroid import COLLAPSE, Matroid, MatroidError, x, y
from mvinterlace.poly import parse_poly

K3 = Matroid(("1", "2", "3"), frozenset(frozenset(b) for b in [("1", "2"), ("1", "3"), ("2", "3")]))
COLOOP = Matroid(("1",), frozenset([frozenset({"1"})]))
EMPTY = Matroid((), frozenset([frozenset()]))
U12 = Matroid(("1", "2"), frozenset([frozenset({"1"}), frozenset({"2"})]))


def uniform(r: int, n: int) -> Matroid:
    ground = tuple(str(i) for i in range(1, n + 1))
    return Matroid(ground, frozenset(frozenset(c) for c in combinations(ground, r)))


def test_validation():
    with pytest.raises(MatroidError):
        Matroid(("1", "2"), frozenset([frozenset({"1"}), frozenset({"1", "2"})]))
    with pytest.raises(MatroidError):
        Matroid(("1", "2", "3", "4"), frozenset([frozenset({"1", "2"}), frozenset({"3", "4"})]))
    with pytest.raises(MatroidError):
        Matroid(("1",), frozenset([frozenset({"9"})]))
    with pytest.raises(MatroidError):
        Matroid(("1", "1"), frozenset([frozenset({"1"})]))


def test_rank():
    assert K3.rank_subset({"1", "2", "3"}) == 2
    assert K3.rank_subset(()) == 0
    assert U12.rank_subset({"1", "2"}) == 1


def test_cycles_and_cocycles():
    assert K3.fundamental_cycle({"1", "2"}, "3") == {"1", "2", "3"}
    assert U12.fundamental_cycle({"1"}, "2") == {"1", "2"}
    assert K3.fundamental_cocycle({"1", "2"}, "1") == {"1", "3"}
    assert COLOOP.fundamental_cocycle({"1"}, "1") == {"1"}


def test_k3_activities():
    # cocycles {1,3} and {2,3} have least elements 1 and 2; the cycle {1,2,3} has least element 1
    assert K3.activities({"1", "2"}) == ({"1", "2"}, frozenset())
    assert K3.activities({"1", "3"}) == ({"1"}, frozenset())
    assert K3.activities({"2", "3"}) == (frozenset(), {"1"})


def test_tutte_k3_both_methods():
    want = x**2 + x + y
    assert mt.tutte_polynomial(K3, "rank_shift") == want
    assert mt.tutte_polynomial(K3, "activities") == want
    assert mt.rank_polynomial(K3).shift_minus() == want
    assert len(mt.multivariate_tutte(K3)) == 3
    assert COLLAPSE.apply(mt.multivariate_tutte(K3)) == want


def test_graphic_k3():
    m = Matroid.from_graph(complete("abc"))
    assert m.source == "graphic" and len(m.bases) == 3
    assert mt.tutte_polynomial(m) == x**2 + x + y


def test_small_cases():
    assert mt.rank_polynomial(EMPTY) == 1
    assert mt.rank_polynomial(COLOOP) == x + 1
    assert mt.multivariate_tutte(EMPTY) == 1
    assert mt.multivariate_tutte(COLOOP) == mt.x_set({"1"})
    assert mt.multivariate_rank_tilde(COLOOP) == 1 + mt.x_set({"1"})
    assert mt.rhat_triple(COLOOP, ()) == (frozenset(), {"1"}, frozenset())


def test_enum_and_sub_form():
    sub_ab = mt.sub_family({"a", "b"})
    assert mt.enum_poly(sub_ab) == parse_poly("1 + x_a + x_b + x_a*x_b")
    assert mt.enum_poly(sub_ab).shift_minus() == parse_poly("x_a*x_b")
    assert mt.check_sub_form(sub_ab) == {"a", "b"}
    assert mt.check_sub_form([()]) == frozenset()
    assert mt.enum_poly([{"a"}]).shift_minus() == parse_poly("x_a - 1")
    assert mt.check_sub_form([{"a"}]) is None


@pytest.mark.parametrize("m", [K3, COLOOP, EMPTY, U12, uniform(2, 4), uniform(3, 5)])
def test_interval_partition(m):
    seen = {}
    for b in m.bases:
        ia, ea = m.activities(b)
        low, free = b - ia, ia | ea
        for k in range(len(free) + 1):
            for extra in combinations(sorted(free), k):
                a = frozenset(low | set(extra))
                assert a not in seen
                seen[a] = b
    assert len(seen) == 2 ** len(m.ground)
    for a, b in seen.items():
        got, c, d = mt.activity_interval_decompose(m, a)
        assert got == b and c == b - a and d == a - b
        assert m.rank_subset(a) == len(a & b)
    for b in m.bases:
        assert mt.activity_interval_decompose(m, b) == (b, frozenset(), frozenset())


@pytest.mark.parametrize("m", [K3, COLOOP, U12, uniform(2, 4), uniform(1, 3)])
def test_tilde_relations(m):
    tt = mt.multivariate_tutte(m)
    assert tt.is_positive()
    assert COLLAPSE.apply(tt) == mt.tutte_polynomial(m) == mt.rank_polynomial(m).shift_minus()
    assert mt.multivariate_rank_tilde(m).shift_minus() == tt


def test_sokal_relation_k3():
    vs, es = ["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]
    t = mt.tutte_polynomial(Matroid.from_edges(vs, es))
    assert mt.sokal_alpha(mt.sokal_z(vs, es)) == (x - 1) * (y - 1) ** 3 * t


def test_text_round_trip(tmp_path):
    assert mt.parse_matroid(mt.matroid_to_text(K3)) == K3
    (tmp_path / "k3.graph").write_text("vertices: a b c\nedges: a-b b-c c-a\n")
    m = mt.parse_matroid("groundset-from-graph: k3.graph", str(tmp_path))
    assert m.ground == ("a~b", "b~c", "c~a")
    with pytest.raises(MatroidError):
        mt.parse_matroid("groundset: 1 2\nbases: {1} {1 2}")
    with pytest.raises(MatroidError):
        mt.parse_matroid("bases: {1}")


def test_random_subsets_are_independent_iff_in_some_basis():
    rng = random.Random(0)
    m = uniform(2, 5)
    for _ in range(30):
        s = {e for e in m.ground if rng.random() < 0.5}
        assert m.is_independent(s) == any(s <= b for b in m.bases)


def test_loop_element():
    m = Matroid.from_edges(["a", "b"], [("a", "b"), ("a", "a")])
    assert m.bases == {frozenset({"a~b"})}
    assert mt.tutte_polynomial(m) == x * y
    assert COLLAPSE.apply(mt.rhat_polynomial(m)) == mt.rank_polynomial(m)


@pytest.mark.parametrize("m", [K3, COLOOP, EMPTY, U12, uniform(2, 4)])
def test_rhat_collapses_to_rank_polynomial(m):
    assert COLLAPSE.apply(mt.rhat_polynomial(m)) == mt.rank_polynomial(m)
