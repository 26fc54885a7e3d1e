"""The multivariate interlace polynomial B(G).

``B(G)`` sums ``x_A y_B u^rk v^n`` over ordered pairs of disjoint vertex
sets ``(A, B)``, where ``rk`` and ``n`` are the GF(2) rank and corank of
the subgraph induced on ``A ∪ B`` after toggling the loops of ``B``.

Two independent routes are provided: :func:`brute_force_B` enumerates all
``3^n`` pairs, :func:`recursive_B` applies the reduction rules (empty graph,
isolated vertex, adjacent pair) with memoisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, MutableMapping

from .gf2 import rank_of_rows
from .graph import Graph, _bits
from .poly import MultiPoly, Powers, Substitution, Var, var

U = var("u")
V = var("v")
ONE = MultiPoly.const(1)
u = MultiPoly.from_var(U)
v = MultiPoly.from_var(V)

# places of a vertex relative to a pair (A, B)
OUTSIDE, IN_A, IN_B = 0, 1, 2


def X(a: str) -> MultiPoly:
    return MultiPoly.from_var(var("x", a))


def Y(a: str) -> MultiPoly:
    return MultiPoly.from_var(var("y", a))


def metavars(g: Graph, c: str) -> tuple[MultiPoly, MultiPoly]:
    """``(z_c, w_c)``: ``(x_c, y_c)`` for an unlooped vertex, ``(y_c, x_c)`` for a looped one."""
    if g.has_loop(c):
        return Y(c), X(c)
    return X(c), Y(c)


@dataclass(frozen=True)
class InterlaceTerm:
    A: frozenset
    B: frozenset
    rank: int
    corank: int

    def monomial(self) -> MultiPoly:
        powers = [(var("x", a), 1) for a in self.A] + [(var("y", b), 1) for b in self.B]
        powers += [(U, self.rank), (V, self.corank)]
        return MultiPoly.monomial(powers)


def _submasks(mask: int) -> Iterator[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    """Disjoint mask pairs (A, B): A in ascending binary order, B over the complement."""
    full = (1 << n) - 1
    for a in range(1 << n):
        rest = full & ~a
        bs = list(_submasks(rest))
        bs.reverse()
        for b in bs:
            yield a, b


def _rank_toggled(rows: tuple[int, ...], s: int, b: int) -> int:
    return rank_of_rows([(rows[i] & s) ^ ((1 << i) if (b >> i) & 1 else 0) for i in _bits(s)])


def interlace_terms(g: Graph) -> Iterator[InterlaceTerm]:
    """All ``m(G, A, B)`` data, in the enumeration order of :func:`brute_force_B`."""
    rows = g.rows
    names = g.vertices
    for a, b in _pairs(len(names)):
        s = a | b
        r = _rank_toggled(rows, s, b)
        yield InterlaceTerm(
            frozenset(names[i] for i in _bits(a)),
            frozenset(names[i] for i in _bits(b)),
            r,
            bin(s).count("1") - r,
        )


def brute_terms(g: Graph) -> list[tuple[int, int, Powers]]:
    """``(A mask, B mask, powers of m(G, A, B))`` for every disjoint pair, masks by vertex position."""
    rows = g.rows
    n = len(g.vertices)
    xs = [var("x", name) for name in g.vertices]
    ys = [var("y", name) for name in g.vertices]
    out = []
    for a, b in _pairs(n):
        s = a | b
        r = _rank_toggled(rows, s, b)
        c = bin(s).count("1") - r
        powers = [(xs[i], 1) for i in _bits(a)] + [(ys[i], 1) for i in _bits(b)]
        powers.sort()
        if r:
            powers.append((U, r))
        if c:
            powers.append((V, c))
        out.append((a, b, tuple(powers)))
    return out


def _brute_sum(g: Graph, keep: Callable[[int, int], bool] | None = None) -> MultiPoly:
    terms: dict = {}
    for a, b, key in brute_terms(g):
        if keep is None or keep(a, b):
            terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)


def brute_force_B(g: Graph) -> MultiPoly:
    """B(G) straight from the definition, by enumerating all 3^n pairs."""
    return _brute_sum(g)


def intermediate_Bij(g: Graph, a: str, b: str, i: int, j: int) -> MultiPoly:
    """Partial sum of ``m(G, A, B)`` with ``a`` at place ``i`` and ``b`` at place ``j``.

    Places: 0 = outside ``A ∪ B``, 1 = in ``A``, 2 = in ``B``.
    """
    if a == b:
        raise ValueError("intermediate_Bij needs two distinct vertices")
    ia, ib = 1 << g.index(a), 1 << g.index(b)
    for p in (i, j):
        if p not in (0, 1, 2):
            raise ValueError(f"place must be 0, 1 or 2, got {p}")

    def place(bit: int, am: int, bm: int) -> int:
        return IN_A if am & bit else IN_B if bm & bit else OUTSIDE

    return _brute_sum(g, lambda am, bm: place(ia, am, bm) == i and place(ib, am, bm) == j)


# -- recursion -----------------------------------------------------------


def _least_isolated(g: Graph) -> str | None:
    iso = [c for c in g.vertices if g.is_isolated(c)]
    return min(iso) if iso else None


def _least_pair(g: Graph) -> tuple[str, str] | None:
    for a in sorted(g.vertices):
        nb = g.neighbors(a)
        if nb:
            return a, min(nb)
    return None


def recursive_B(
    g: Graph,
    first: tuple[str, str] | str | None = None,
    cache: MutableMapping[Graph, MultiPoly] | None = None,
) -> MultiPoly:
    """B(G) by the reduction rules.

    * ``B(∅) = 1``
    * ``B(G) = (1 + z_a v + w_a u) B(G - a)`` if ``a`` is isolated
    * for ``b ∈ N(G, a)``::

        B(G) = z_b u² {z_a B(G^ab - a - b) + w_a B((G^a)^b - a - b)}
             + w_b u {B(G^b - b) - B(G^b - a - b)}
             + B(G - a) + B(G - b) - B(G - a - b)

    The metavariables ``z_c, w_c`` follow the loop status of ``c`` in the
    graph being reduced. By default the least isolated vertex is removed
    first; otherwise the least vertex with a neighbour is paired with its
    least neighbour. ``first`` forces the choice at the top level only: a
    vertex name selects the isolated-vertex rule, a pair the adjacent-pair
    rule. ``cache`` may be shared between calls; entries are never
    overwritten.
    """
    memo: MutableMapping[Graph, MultiPoly] = {} if cache is None else cache

    def isolated_rule(h: Graph, a: str) -> MultiPoly:
        za, wa = metavars(h, a)
        return (1 + za * v + wa * u) * rec(h.delete(a))

    def pair_rule(h: Graph, a: str, b: str) -> MultiPoly:
        za, wa = metavars(h, a)
        zb, wb = metavars(h, b)
        ha = h.local_complement(a)
        hb = h.local_complement(b)
        return (
            zb * u**2 * (za * rec(h.pivot(a, b).delete(a, b)) + wa * rec(ha.local_complement(b).delete(a, b)))
            + wb * u * (rec(hb.delete(b)) - rec(hb.delete(a, b)))
            + rec(h.delete(a)) + rec(h.delete(b)) - rec(h.delete(a, b))
        )

    def step(h: Graph) -> MultiPoly:
        if len(h) == 0:
            return ONE
        a = _least_isolated(h)
        if a is not None:
            return isolated_rule(h, a)
        a, b = _least_pair(h)
        return pair_rule(h, a, b)

    def rec(h: Graph) -> MultiPoly:
        hit = memo.get(h)
        if hit is not None:
            return hit
        val = step(h)
        memo.setdefault(h, val)
        return val

    if first is None:
        return rec(g)
    if isinstance(first, str):
        if not g.is_isolated(first):
            raise ValueError(f"{first} is not isolated")
        return isolated_rule(g, first)
    a, b = first
    if a == b or not g.adjacent(a, b):
        raise ValueError(f"{a} and {b} are not adjacent")
    return pair_rule(g, a, b)


def valid_first_choices(g: Graph) -> list[tuple[str, str] | str]:
    """Every admissible top-level choice for :func:`recursive_B`."""
    out: list = [a for a in g.vertices if g.is_isolated(a)]
    for a in g.vertices:
        for b in sorted(g.neighbors(a)):
            out.append((a, b))
    return out


# -- B1, theta, mu ----------------------------------------------------------

V_TO_ONE = Substitution({V: 1})


def specialize_B1(p: MultiPoly) -> MultiPoly:
    """B₁ = B with ``v := 1``."""
    return V_TO_ONE.apply(p)


def theta(p: MultiPoly) -> MultiPoly:
    """Undo ``v := 1`` on a B₁ polynomial.

    Each monomial ``x_A y_B u^r`` is multiplied by ``v^(|A|+|B|-r)``, which
    is what ``[u := u/v; x_a := v x_a; y_a := v y_a]`` does without leaving
    the polynomial ring.
    """
    def lift(m, c):
        q = sum(e for w, e in m if w.group == 0)
        r = sum(e for w, e in m if w == U)
        if any(w == V for w, _ in m):
            raise ValueError("theta expects a polynomial without v")
        if r > q:
            raise ValueError(f"u-exponent {r} exceeds quasi-degree {q}; not the image of B")
        if q == r:
            return m, c
        return tuple(sorted(m + ((V, q - r),))), c

    return p.map_monomials(lift)


def mu(p: MultiPoly, T) -> MultiPoly:
    """Swap ``x_a`` and ``y_a`` for every ``a`` in ``T``."""
    return _swap_substitution(frozenset(T)).apply(p)


@lru_cache(maxsize=1024)
def _swap_substitution(T: frozenset) -> Substitution:
    rules = {}
    for a in T:
        rules[var("x", a)] = Y(a)
        rules[var("y", a)] = X(a)
    return Substitution(rules)


# -- reconstruction from rho(B(G)) -------------------------------------------

RHO = Substitution({V: 1}, {"y": 0})


class ReconstructionError(ValueError):
    pass


def _x_monomials(p: MultiPoly) -> dict[frozenset, list[tuple[int, int]]]:
    """Group the monomials ``c * x_A u^r`` by ``A``; rejects other indeterminates."""
    by_set: dict[frozenset, list[tuple[int, int]]] = {}
    for m, c in p.terms.items():
        names = []
        r = 0
        for w, e in m:
            if w == U:
                r = e
            elif w.group == 0 and w.tag == "x" and e == 1:
                names.append(w.vertex)
            else:
                raise ReconstructionError(f"unexpected factor {w}^{e}")
        by_set.setdefault(frozenset(names), []).append((r, c))
    return by_set


def reconstruct_graph(p: MultiPoly) -> Graph:
    """Recover G from ``ρ(B(G))`` with ``ρ = [v := 1; y_a := 0]``.

    Only monomials of quasi-degree at most 2 are read: ``x_a u^r`` gives the
    loop status of ``a`` and ``x_a x_b u^r`` decides adjacency of ``a, b``.
    """
    by_set = _x_monomials(p)
    names = sorted(next(iter(s)) for s in by_set if len(s) == 1)
    loops = []
    for a in names:
        entries = by_set[frozenset((a,))]
        if len(entries) != 1 or entries[0][1] != 1 or entries[0][0] not in (0, 1):
            raise ReconstructionError(f"singleton monomials for {a} are inconsistent: {entries}")
        if entries[0][0] == 1:
            loops.append(a)
    loopset = set(loops)
    edges = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            entries = by_set.get(frozenset((a, b)))
            if not entries or len(entries) != 1 or entries[0][1] != 1:
                raise ReconstructionError(f"pair monomial for {a}, {b} missing or inconsistent: {entries}")
            r = entries[0][0]
            nloops = (a in loopset) + (b in loopset)
            # (rank if adjacent, rank if not) by number of looped endpoints
            table = {0: (2, 0), 1: (2, 1), 2: (1, 2)}[nloops]
            if r == table[0]:
                edges.append((a, b))
            elif r != table[1]:
                raise ReconstructionError(f"rank {r} impossible for pair {a}, {b}")
    for s in by_set:
        if not s <= set(names):
            raise ReconstructionError(f"monomial mentions vertices {sorted(s - set(names))} without singletons")
    return Graph.from_edges(names, edges, loops)


def reconstruct_loopfree_from_bxy(p: MultiPoly) -> Graph:
    """Recover a loop-free G from ``B_{x=y}(G)`` with ``v := 1``.

    An edge ``a-b`` contributes ``x_a x_b u + 3 x_a x_b u²``; a non-edge
    contributes ``x_a x_b + 2 x_a x_b u + x_a x_b u²``.
    """
    by_set = _x_monomials(p)
    names = sorted(next(iter(s)) for s in by_set if len(s) == 1)
    for a in names:
        if sorted(by_set[frozenset((a,))]) != [(0, 1), (1, 1)]:
            raise ReconstructionError(f"singleton monomials for {a} do not fit a vertex")
    edges = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            pattern = sorted(by_set.get(frozenset((a, b)), []))
            if pattern == [(1, 1), (2, 3)]:
                edges.append((a, b))
            elif pattern != [(0, 1), (1, 2), (2, 1)]:
                raise ReconstructionError(f"pair monomials for {a}, {b} do not fit: {pattern}")
    return Graph.from_edges(names, edges)
