"""Ordered matroids, basis activities and Tutte-type polynomials.

A matroid is given by its ordered ground set and its bases. The order of
the ground set is the order used for activities and for every
"lexicographically minimal" choice below.

Polynomials:

* ``R(M) = Σ_A x^(r(M)-r(A)) y^n(A)`` (rank polynomial, ordinary x, y)
* ``T(M) = R(M)^-``, also ``Σ_B x^|IA(B)| y^|EA(B)|``
* ``T~(M) = Σ_B x_IA(B) y_EA(B)`` with element-indexed indeterminates
* ``R~(M) = Σ_B Enum_x(Sub(IA(B))) Enum_y(Sub(EA(B)))``, so ``R~^- = T~``
* ``R^(M) = Σ_A x_C y_D`` with ``(Z, C, D)`` chosen greedily per ``A``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, read_graph_text
from .poly import MultiPoly, Substitution, var


class MatroidError(ValueError):
    pass


class MatroidIntegrityError(RuntimeError):
    """Raised when a structural fact about matroids fails; signals invalid input data."""


x = MultiPoly.from_var(var("x"))
y = MultiPoly.from_var(var("y"))
COLLAPSE = Substitution(families={"x": x, "y": y})


def x_set(s: Iterable[str]) -> MultiPoly:
    return MultiPoly.monomial({var("x", e): 1 for e in s})


def y_set(s: Iterable[str]) -> MultiPoly:
    return MultiPoly.monomial({var("y", e): 1 for e in s})


@dataclass(frozen=True)
class Matroid:
    ground: tuple[str, ...]
    bases: frozenset[frozenset[str]]
    source: str = "explicit-bases"
    _independent: frozenset[frozenset[str]] = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise MatroidError("duplicate elements in ground set")
        ground = set(self.ground)
        bases = frozenset(frozenset(b) for b in self.bases)
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise MatroidError("a matroid has at least one basis")
        for b in bases:
            if not b <= ground:
                raise MatroidError(f"basis {sorted(b)} has elements outside the ground set")
        sizes = {len(b) for b in bases}
        if len(sizes) != 1:
            raise MatroidError(f"bases have different sizes {sorted(sizes)}")
        for b1 in bases:
            for b2 in bases:
                for e in b1 - b2:
                    if not any((b1 - {e}) | {f} in bases for f in b2 - b1):
                        raise MatroidError(
                            f"exchange axiom fails for {sorted(b1)}, {sorted(b2)} at element {e}")
        indep: set[frozenset[str]] = set()
        for b in bases:
            for k in range(len(b) + 1):
                indep.update(frozenset(c) for c in combinations(sorted(b), k))
        object.__setattr__(self, "_independent", frozenset(indep))

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Sequence[tuple[str, str]],
                   names: Sequence[str] | None = None) -> Matroid:
        """Cycle matroid of a multigraph; bases are the spanning forests.

        ``(a, a)`` is a loop element. Elements are named ``a~b`` unless
        ``names`` is given; the edge order is the ground order.
        """
        if names is None:
            names = [f"{a}~{b}" for a, b in edges]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise MatroidError("edge element names are not unique")
        r = len(vertices) - _components(vertices, edges)
        bases = []
        for combo in combinations(range(len(edges)), r):
            if _is_forest(vertices, [edges[i] for i in combo]):
                bases.append(frozenset(names[i] for i in combo))
        return cls(names, frozenset(bases), "graphic")

    @classmethod
    def from_graph(cls, g: Graph) -> Matroid:
        """Cycle matroid of the non-loop edges of ``g``, in vertex order."""
        return cls.from_edges(g.vertices, g.edges())

    # -- rank ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def is_independent(self, s: Iterable[str]) -> bool:
        return frozenset(s) in self._independent

    def _check(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        unknown = s - set(self.ground)
        if unknown:
            raise MatroidError(f"unknown elements {sorted(unknown)}")
        return s

    def rank_subset(self, a: Iterable[str]) -> int:
        a = self._check(a)
        return max(len(a & b) for b in self.bases)

    def _require_basis(self, b: Iterable[str]) -> frozenset[str]:
        b = frozenset(b)
        if b not in self.bases:
            raise MatroidError(f"{sorted(b)} is not a basis")
        return b

    def key(self, e: str) -> int:
        return self.ground.index(e)

    def least(self, s: Iterable[str]) -> str:
        return min(s, key=self.key)

    # -- cycles, cocycles, activities ------------------------------------------

    def fundamental_cycle(self, b: Iterable[str], e: str) -> frozenset[str]:
        b = self._require_basis(b)
        if e in b:
            raise MatroidError(f"{e} belongs to the basis")
        self._check([e])
        return frozenset([e] + [f for f in b if (b - {f}) | {e} in self.bases])

    def fundamental_cocycle(self, b: Iterable[str], xe: str) -> frozenset[str]:
        b = self._require_basis(b)
        if xe not in b:
            raise MatroidError(f"{xe} does not belong to the basis")
        return frozenset([xe] + [e for e in self.ground if e not in b and (b - {xe}) | {e} in self.bases])

    def activities(self, b: Iterable[str]) -> tuple[frozenset[str], frozenset[str]]:
        """``(IA(B), EA(B))``: internally and externally active elements."""
        b = self._require_basis(b)
        ia = frozenset(e for e in b if self.least(self.fundamental_cocycle(b, e)) == e)
        ea = frozenset(e for e in self.ground if e not in b and self.least(self.fundamental_cycle(b, e)) == e)
        return ia, ea

    def sorted_bases(self) -> list[frozenset[str]]:
        return sorted(self.bases, key=lambda b: sorted(map(self.key, b)))

    # -- greedy choices ------------------------------------------------------

    def greedy_extend(self, start: Iterable[str], pool: Iterable[str]) -> frozenset[str]:
        """Scan ``pool`` in ground order, keeping each element that preserves independence."""
        cur = frozenset(start)
        for e in sorted(pool, key=self.key):
            if (cur | {e}) in self._independent:
                cur = cur | {e}
        return cur


def _components(vertices: Sequence[str], edges: Sequence[tuple[str, str]]) -> int:
    parent = {a: a for a in vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = len(vertices)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def _is_forest(vertices: Sequence[str], edges: Sequence[tuple[str, str]]) -> bool:
    return _components(vertices, edges) == len(vertices) - len(edges)


# -- module-level operations -------------------------------------------------


def rank_subset(m: Matroid, a: Iterable[str]) -> int:
    return m.rank_subset(a)


def fundamental_cycle(m: Matroid, b: Iterable[str], e: str) -> frozenset[str]:
    return m.fundamental_cycle(b, e)


def fundamental_cocycle(m: Matroid, b: Iterable[str], xe: str) -> frozenset[str]:
    return m.fundamental_cocycle(b, xe)


def activities(m: Matroid, b: Iterable[str]) -> tuple[frozenset[str], frozenset[str]]:
    return m.activities(b)


def _subsets(elems: Sequence[str]):
    for k in range(len(elems) + 1):
        yield from (frozenset(c) for c in combinations(elems, k))


def rank_polynomial(m: Matroid) -> MultiPoly:
    terms: dict = {}
    r = m.rank
    for a in _subsets(m.ground):
        ra = m.rank_subset(a)
        key = (r - ra, len(a) - ra)
        terms[key] = terms.get(key, 0) + 1
    return sum((c * x**i * y**j for (i, j), c in terms.items()), MultiPoly())


def tutte_polynomial(m: Matroid, method: str = "rank_shift") -> MultiPoly:
    """T(M), either as ``R(M)^-`` or as the basis-activity sum."""
    if method == "rank_shift":
        return rank_polynomial(m).shift_minus()
    if method == "activities":
        out = MultiPoly()
        for b in m.bases:
            ia, ea = m.activities(b)
            out = out + x ** len(ia) * y ** len(ea)
        return out
    raise ValueError(f"unknown method {method!r}")


def multivariate_tutte(m: Matroid) -> MultiPoly:
    """T~(M) = Σ over bases of x_IA(B) y_EA(B)."""
    out = MultiPoly()
    for b in m.bases:
        ia, ea = m.activities(b)
        out = out + x_set(ia) * y_set(ea)
    return out


def enum_poly(s: Iterable[Iterable[str]], tag: str = "x") -> MultiPoly:
    """Enum(S) = Σ_{A ∈ S} x_A (duplicates collapsed)."""
    fam = {frozenset(a) for a in s}
    return sum((MultiPoly.monomial({var(tag, e): 1 for e in a}) for a in fam), MultiPoly())


def sub_family(b: Iterable[str]) -> frozenset[frozenset[str]]:
    """Sub(B): all subsets of B."""
    return frozenset(_subsets(sorted(b)))


def multivariate_rank_tilde(m: Matroid) -> MultiPoly:
    out = MultiPoly()
    for b in m.bases:
        ia, ea = m.activities(b)
        out = out + enum_poly(sub_family(ia), "x") * enum_poly(sub_family(ea), "y")
    return out


def rhat_triple(m: Matroid, a: Iterable[str]) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """``(Z, C, D)`` for ``A``: Z the lexicographically least maximal independent
    subset of A, C the least completion of Z to a basis from outside A, D = A - Z."""
    a = m._check(a)
    z = m.greedy_extend((), a)
    full = m.greedy_extend(z, [e for e in m.ground if e not in a])
    if full not in m.bases:
        raise MatroidIntegrityError(f"greedy completion {sorted(full)} is not a basis")
    return z, full - z, a - z


def rhat_polynomial(m: Matroid) -> MultiPoly:
    out = MultiPoly()
    for a in _subsets(m.ground):
        _, c, d = rhat_triple(m, a)
        out = out + x_set(c) * y_set(d)
    return out


def check_sub_form(s: Iterable[Iterable[str]]) -> frozenset[str] | None:
    """Return B if the family equals Sub(B), detected via ``Enum(S)^- = x_B``; else None."""
    shifted = enum_poly(s).shift_minus()
    if len(shifted) != 1:
        return None
    (powers, c), = shifted.terms.items()
    if c != 1 or any(e != 1 for _, e in powers):
        return None
    return frozenset(w.vertex for w, _ in powers)


def activity_interval_decompose(m: Matroid, a: Iterable[str]) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """The unique basis B with ``B - IA(B) ⊆ A ⊆ B ∪ EA(B)``, with ``C = B - A`` and ``D = A - B``."""
    a = m._check(a)
    hits = []
    for b in m.sorted_bases():
        ia, ea = m.activities(b)
        if b - ia <= a <= b | ea:
            hits.append(b)
    if len(hits) != 1:
        raise MatroidIntegrityError(f"{sorted(a)} lies in {len(hits)} activity intervals, expected exactly 1")
    b = hits[0]
    return b, b - a, a - b


# -- text format ------------------------------------------------------------------


def parse_matroid(text: str, base_dir: str | None = None) -> Matroid:
    """Parse ``groundset:`` + ``bases:`` lines, or ``groundset-from-graph: <path>``.

    ``;`` may stand in for a line break.
    """
    import os
    import re

    fields: dict[str, str] = {}
    lines = []
    for raw in text.splitlines():
        lines.extend(raw.split("#", 1)[0].split(";"))
    for line in map(str.strip, lines):
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise MatroidError(f"expected 'field: value', got {line!r}")
        head = head.strip().lower()
        if head in fields:
            raise MatroidError(f"repeated field {head!r}")
        fields[head] = rest.strip()
    if "groundset-from-graph" in fields:
        path = fields["groundset-from-graph"]
        if base_dir and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        with open(path, encoding="utf-8") as fh:
            g, items = read_graph_text(fh.read())
        return Matroid.from_edges(g.vertices, items)
    if "groundset" not in fields or "bases" not in fields:
        raise MatroidError("need 'groundset' and 'bases' lines, or 'groundset-from-graph'")
    ground = fields["groundset"].split()
    groups = re.findall(r"\{([^}]*)\}", fields["bases"])
    leftover = re.sub(r"\{[^}]*\}", "", fields["bases"]).strip()
    if leftover:
        raise MatroidError(f"unexpected text in bases line: {leftover!r}")
    return Matroid(tuple(ground), frozenset(frozenset(g.split()) for g in groups))


def matroid_to_text(m: Matroid) -> str:
    bases = " ".join("{" + " ".join(sorted(b, key=m.key)) + "}" for b in m.sorted_bases())
    return f"groundset: {' '.join(m.ground)}\nbases: {bases}"


# -- Potts-model partition function ------------------------------------------------


def sokal_z(vertices: Sequence[str], edges: Sequence[tuple[str, str]],
            names: Sequence[str] | None = None) -> MultiPoly:
    """Z(G) = Σ_{A ⊆ E} u^k(A) Π_{e ∈ A} v_e, with k(A) the number of components of (V, A)."""
    if names is None:
        names = [f"{a}~{b}" for a, b in edges]
    u = MultiPoly.from_var(var("u"))
    out = MultiPoly()
    for k in range(len(edges) + 1):
        for combo in combinations(range(len(edges)), k):
            mono = MultiPoly.monomial({var("v", names[i]): 1 for i in combo})
            out = out + u ** _components(vertices, [edges[i] for i in combo]) * mono
    return out


def sokal_alpha(z: MultiPoly) -> MultiPoly:
    """α = [u := (x-1)(y-1); v_e := y-1], mapping Z(G) to (x-1)^k(G) (y-1)^|V| T(G)."""
    return Substitution({var("u"): (x - 1) * (y - 1)}, {"v": y - 1}).apply(z)
