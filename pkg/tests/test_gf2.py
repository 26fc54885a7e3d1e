from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvinterlace.gf2 import SymBitMatrix, corank, principal_submatrix, rank


def naive_rank(rows: list[int]) -> int:
    """Size of the largest row subset with no nonempty XOR-zero sub-subset."""
    best = 0
    for k in range(len(rows) + 1):
        for combo in combinations(rows, k):
            sums = {0}
            ok = True
            for r in combo:
                new = {s ^ r for s in sums}
                if new & sums:
                    ok = False
                    break
                sums |= new
            if ok:
                best = k
    return best


@st.composite
def sym_matrices(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(0, 1))
    return SymBitMatrix.from_lists(m)


@pytest.mark.parametrize("entries, r", [
    ([], 0),
    ([[1]], 1),
    ([[0, 1], [1, 0]], 2),
    ([[1, 1], [1, 1]], 1),
])
def test_rank_examples(entries, r):
    assert rank(SymBitMatrix.from_lists(entries)) == r


def test_corank_examples():
    assert corank(SymBitMatrix.from_lists([])) == 0
    assert corank(SymBitMatrix.from_lists([[0, 0], [0, 0]])) == 2
    assert corank(SymBitMatrix.from_lists([[0, 1], [1, 0]])) == 0


def test_principal_submatrix():
    m = SymBitMatrix.from_lists([[1, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert principal_submatrix(m, [0, 2]).to_lists() == [[1, 0], [0, 0]]
    assert principal_submatrix(m, [0, 1, 2]) == m
    assert principal_submatrix(m, []).n == 0
    with pytest.raises(IndexError):
        principal_submatrix(m, [3])


def test_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymBitMatrix.from_lists([[0, 1], [0, 0]])


@settings(max_examples=200, deadline=None)
@given(sym_matrices())
def test_rank_matches_naive(m):
    assert rank(m) == naive_rank(list(m.rows))
    assert 0 <= rank(m) <= m.n
    assert rank(m) + corank(m) == m.n


@settings(max_examples=100, deadline=None)
@given(sym_matrices(max_n=5), st.randoms(use_true_random=False))
def test_rank_permutation_invariant(m, rnd):
    perm = list(range(m.n))
    rnd.shuffle(perm)
    assert rank(principal_submatrix(m, perm)) == rank(m)


def test_rank_permutation_exhaustive_small():
    rng = random.Random(3)
    for _ in range(20):
        n = 4
        entries = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                entries[i][j] = entries[j][i] = rng.randint(0, 1)
        m = SymBitMatrix.from_lists(entries)
        assert {rank(principal_submatrix(m, p)) for p in permutations(range(n))} == {rank(m)}
