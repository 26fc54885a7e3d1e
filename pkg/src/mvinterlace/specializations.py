"""Specializations of B(G) and their reduction rules.

Each polynomial is available two ways: as a substitution applied to
``brute_force_B`` and by its own recursion, so the two can be compared.

=========  ===============================================  ==========================
name       substitution on B                                recursion
=========  ===============================================  ==========================
B_{y=0}    ``y_a := 0``                                     loop / isolated / edge rules
B_{x=y}    ``y_a := x_a``                                   isolated / pair rules
q          ``u := u'-1, v := v'-1, x_a := 1, y_a := 0``     (q1)-(q3) or (q3')
Q          ``u := 1, v := v'-2, x_a := y_a := 1``           (Q1)-(Q3), loop-free only
B_I        ``u := 0``                                       (I1)-(I4), (I5)-(I7)
I          ``u := 0, x_a := 1, y_a := 1``                   stable-set count
=========  ===============================================  ==========================
"""

from __future__ import annotations

from typing import Callable

from .graph import Graph, _bits
from .interlace import ONE, U, V, X, Y, brute_force_B, metavars, u, v
from .poly import MultiPoly, Substitution, var

u1 = MultiPoly.from_var(var("u'"))
v1 = MultiPoly.from_var(var("v'"))

SIGMA_0 = Substitution(families={"y": 0})
SIGMA_EQ = Substitution(families={"y": MultiPoly.from_var(var("x", "@"))})
SIGMA_Q = Substitution({U: u1 - 1, V: v1 - 1}, {"x": 1, "y": 0})
TAU_Q = Substitution({U: 1, V: v1 - 2}, {"x": 1, "y": 1})
ETA = Substitution({U: 0}, {"x": 1})  # on B_{x=y}
ETA_PRIME = Substitution({U: 0})
TO_I = Substitution({U: 0}, {"x": 1, "y": 1})


class LoopedGraphError(ValueError):
    pass


MEMO_LIMIT = 100_000


def _memoized(step: Callable[[Graph, Callable[[Graph], MultiPoly]], MultiPoly]):
    """Turn a one-step reduction into a recursion with a memo shared across
    calls; the memo is emptied whenever it reaches ``MEMO_LIMIT`` entries."""
    memo: dict[Graph, MultiPoly] = {}

    def rec(h: Graph) -> MultiPoly:
        hit = memo.get(h)
        if hit is None:
            hit = step(h, rec)
            if len(memo) >= MEMO_LIMIT:
                memo.clear()
            memo[h] = hit
        return hit

    return rec


def _least_looped(g: Graph) -> str | None:
    loops = g.loops()
    return min(loops) if loops else None


def _least_isolated(g: Graph, looped: bool | None = None) -> str | None:
    cands = [a for a in g.vertices if g.is_isolated(a) and (looped is None or g.has_loop(a) == looped)]
    return min(cands) if cands else None


def _least_pair(g: Graph, unlooped: bool = False) -> tuple[str, str] | None:
    for a in sorted(g.vertices):
        if unlooped and g.has_loop(a):
            continue
        nb = sorted(b for b in g.neighbors(a) if not (unlooped and g.has_loop(b)))
        if nb:
            return a, nb[0]
    return None


def _check_method(method: str, allowed: tuple[str, ...]) -> None:
    if method not in allowed:
        raise ValueError(f"unknown method {method!r}; expected one of {allowed}")


# -- B_{y=0} ----------------------------------------------------------------


def _by0_step(rule4: str):
    def step(g: Graph, rec) -> MultiPoly:
        if len(g) == 0:
            return ONE
        a = _least_looped(g)
        if a is not None:
            return X(a) * u * rec(g.local_complement(a).delete(a)) + rec(g.delete(a))
        a = _least_isolated(g)
        if a is not None:
            return (1 + X(a) * v) * rec(g.delete(a))
        a, b = _least_pair(g)
        gab = g.pivot(a, b)
        if rule4 == "deletion":
            return (X(b) * X(a) * u**2 * rec(gab.delete(a, b))
                    + rec(g.delete(a)) + rec(g.delete(b)) - rec(g.delete(a, b)))
        return ((X(b) * X(a) * u**2 - 1) * rec(gab.delete(a, b))
                + rec(g.delete(a)) + rec(gab.delete(b)))
    return step


_by0_deletion = _memoized(_by0_step("deletion"))
_by0_pivot = _memoized(_by0_step("pivot"))


def b_y0(g: Graph, method: str = "substitution", rule4: str = "deletion") -> MultiPoly:
    """B_{y=0}(G) = Σ_A x_A u^rk(G[A]) v^n(G[A]).

    ``rule4`` picks the edge rule of the recursion: ``"deletion"`` uses
    ``B(G-a) + B(G-b) - B(G-a-b)``, ``"pivot"`` the pivot form
    ``(x_b x_a u² - 1) B(G^ab-a-b) + B(G-a) + B(G^ab-b)``.
    """
    _check_method(method, ("substitution", "recursion"))
    if method == "substitution":
        return SIGMA_0.apply(brute_force_B(g))
    if rule4 not in ("deletion", "pivot"):
        raise ValueError(f"unknown rule4 variant {rule4!r}")
    return (_by0_deletion if rule4 == "deletion" else _by0_pivot)(g)


# -- B_{x=y} ----------------------------------------------------------------


def _bxy_step(g: Graph, rec) -> MultiPoly:
    if len(g) == 0:
        return ONE
    a = _least_isolated(g)
    if a is not None:
        return (1 + X(a) * (u + v)) * rec(g.delete(a))
    a, b = _least_pair(g)
    gb = g.local_complement(b)
    return (
        X(a) * X(b) * u**2 * (rec(g.pivot(a, b).delete(a, b)) + rec(g.local_complement(a).local_complement(b).delete(a, b)))
        + X(b) * u * (rec(gb.delete(b)) - rec(gb.delete(a, b)))
        + rec(g.delete(a)) + rec(g.delete(b)) - rec(g.delete(a, b))
    )


_bxy_rec = _memoized(_bxy_step)


def b_xy(g: Graph, method: str = "substitution") -> MultiPoly:
    """B_{x=y}(G): B with ``y_a := x_a``. Insensitive to loops."""
    _check_method(method, ("substitution", "recursion"))
    if method == "substitution":
        return SIGMA_EQ.apply(brute_force_B(g))
    return _bxy_rec(g)


# -- q ------------------------------------------------------------------------


def _q_step(variant: str):
    def step(g: Graph, rec) -> MultiPoly:
        a = _least_looped(g)
        if a is not None:
            return (u1 - 1) * rec(g.local_complement(a).delete(a)) + rec(g.delete(a))
        pair = _least_pair(g)
        if pair is None:
            return v1 ** len(g)
        a, b = pair
        gab = g.pivot(a, b)
        if variant == "q3":
            return ((u1 - 1) ** 2 * rec(gab.delete(a, b))
                    + rec(g.delete(a)) + rec(g.delete(b)) - rec(g.delete(a, b)))
        return (((u1 - 1) ** 2 - 1) * rec(gab.delete(a, b))
                + rec(g.delete(a)) + rec(gab.delete(b)))
    return step


_q_rec = _memoized(_q_step("q3"))
_q_rec_prime = _memoized(_q_step("q3prime"))


def q_poly(g: Graph, method: str = "substitution") -> MultiPoly:
    """The interlace polynomial q(G; u', v')."""
    _check_method(method, ("substitution", "recursion_q123", "recursion_q3prime"))
    if method == "substitution":
        return SIGMA_Q.apply(brute_force_B(g))
    return (_q_rec if method == "recursion_q123" else _q_rec_prime)(g)


# -- Q ------------------------------------------------------------------------


def _big_q_step(g: Graph, rec) -> MultiPoly:
    if len(g) == 0:
        return ONE
    a = _least_isolated(g)
    if a is not None:
        # tau(1 + z_a v + w_a u) = v'
        return v1 * rec(g.delete(a))
    a, b = _least_pair(g)
    return rec(g.delete(b)) + rec(g.star_complement(b).delete(b)) + rec(g.pivot(a, b).delete(a))


_big_q_rec = _memoized(_big_q_step)


def big_q_poly(g: Graph, method: str = "substitution") -> MultiPoly:
    """The polynomial Q(G, v'). The recursion is only defined without loops."""
    _check_method(method, ("substitution", "recursion_Q"))
    if method == "substitution":
        return TAU_Q.apply(brute_force_B(g))
    if g.loops():
        raise LoopedGraphError(f"recursion_Q needs a loop-free graph; loops on {sorted(g.loops())}")
    return _big_q_rec(g)


# -- independence -------------------------------------------------------------


def stable_sets(g: Graph):
    """Vertex subsets with no edge between two distinct members (loops allowed)."""
    rows = g.rows
    n = len(g.vertices)
    offdiag = [rows[i] & ~(1 << i) for i in range(n)]
    for s in range(1 << n):
        if all(not (offdiag[i] & s) for i in _bits(s)):
            yield frozenset(g.vertices[i] for i in _bits(s))


def _bi_direct(g: Graph) -> MultiPoly:
    out = MultiPoly()
    for s in stable_sets(g):
        powers = [(var("y" if g.has_loop(a) else "x", a), 1) for a in s]
        powers.append((V, len(s)))
        out = out + MultiPoly.monomial(powers)
    return out


def _bi_i14(g: Graph, rec) -> MultiPoly:
    if len(g) == 0:
        return ONE
    a = _least_isolated(g)
    if a is not None:
        za, _ = metavars(g, a)
        return (1 + za * v) * rec(g.delete(a))
    a, b = _least_pair(g)
    return rec(g.delete(a)) + rec(g.delete(b)) - rec(g.delete(a, b))


def _bi_i56(g: Graph, rec) -> MultiPoly:
    if len(g) == 0:
        return ONE
    a = min(g.vertices)
    za, _ = metavars(g, a)
    return rec(g.delete(a)) + za * v * rec(g.delete(a).delete(g.neighbors(a)))


def bi_edge_rule(g: Graph, a: str, b: str, rec: Callable[[Graph], MultiPoly]) -> MultiPoly:
    """(I7): ``B_I(G) = B_I(G - e) - z_a z_b v² B_I(G - N(G,a) - N(G,b))`` for the edge ``e = a-b``.

    ``z`` is ``x`` on unlooped endpoints; a looped endpoint contributes ``y``.
    """
    if a == b or not g.adjacent(a, b):
        raise ValueError(f"(I7) needs an edge, but {a} and {b} are not adjacent")
    za, _ = metavars(g, a)
    zb, _ = metavars(g, b)
    return rec(g.delete_edge(a, b)) - za * zb * v**2 * rec(g.delete(g.neighbors(a) | g.neighbors(b)))


def _bi_i567(g: Graph, rec) -> MultiPoly:
    if len(g) == 0:
        return ONE
    pair = _least_pair(g)
    if pair is None:
        return _bi_i56(g, rec)
    return bi_edge_rule(g, *pair, rec)


_BI_RECURSIONS = {
    "recursion_I14": _memoized(_bi_i14),
    "recursion_I56": _memoized(_bi_i56),
    "recursion_I567": _memoized(_bi_i567),
}


def b_independence(g: Graph, method: str = "substitution") -> MultiPoly:
    """The multivariate independence polynomial B_I(G) = B with ``u := 0``.

    Sums ``x_A y_B v^|A ∪ B|`` over stable sets, unlooped members in ``A``,
    looped ones in ``B``. Methods: ``substitution``, ``direct`` (stable-set
    enumeration), ``recursion_I14``, ``recursion_I56`` and ``recursion_I567``.
    """
    _check_method(method, ("substitution", "direct") + tuple(_BI_RECURSIONS))
    if method == "substitution":
        return ETA_PRIME.apply(brute_force_B(g))
    if method == "direct":
        return _bi_direct(g)
    return _BI_RECURSIONS[method](g)


def independence_poly(g: Graph, method: str = "substitution") -> MultiPoly:
    """I(G, v) = Σ_k s_k v^k, with ``s_k`` the number of stable sets of size k.

    ``substitution`` computes ``η(B_{x=y}(G))``, ``direct`` counts stable
    sets, ``recursion`` collapses the (I1)-(I4) recursion for B_I.
    """
    _check_method(method, ("substitution", "direct", "recursion"))
    if method == "substitution":
        return ETA.apply(b_xy(g))
    if method == "direct":
        counts: dict[int, int] = {}
        for s in stable_sets(g):
            counts[len(s)] = counts.get(len(s), 0) + 1
        return sum((MultiPoly.monomial({V: k}, c) for k, c in counts.items()), MultiPoly())
    return TO_I.apply(b_independence(g, "recursion_I14"))
