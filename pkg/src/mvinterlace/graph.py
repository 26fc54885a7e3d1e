"""Looped simple graphs with named vertices and the usual operation suite.

A graph is an ordered tuple of vertex names plus a symmetric GF(2)
adjacency matrix whose diagonal marks loops. Every operation returns a new
graph and keeps vertex names unchanged, so polynomials indexed by vertices
line up across ``G``, ``G - a`` and ``G^{ab}``.

Equality and hashing ignore vertex order: two graphs are equal when they
have the same vertex names, loops and edges.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .gf2 import SymBitMatrix, rank_of_rows


class UnknownVertexError(KeyError):
    pass


class GraphFormatError(ValueError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("vertices", "adj", "_index", "_key")

    def __init__(self, vertices: Iterable[str], adj: SymBitMatrix | None = None):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"duplicate vertex names in {vertices}")
        if adj is None:
            adj = SymBitMatrix.zeros(len(vertices))
        if adj.n != len(vertices):
            raise ValueError(f"{len(vertices)} vertices but adjacency of dimension {adj.n}")
        self.vertices = vertices
        self.adj = adj
        self._index = {v: i for i, v in enumerate(vertices)}
        self._key = None

    @classmethod
    def _raw(cls, vertices: tuple[str, ...], rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        g.vertices = vertices
        g.adj = SymBitMatrix._trusted(len(vertices), rows)
        g._index = {v: i for i, v in enumerate(vertices)}
        g._key = None
        return g

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        loops: Iterable[str] = (),
    ) -> Graph:
        """Build a graph from an edge list; an edge ``(x, x)`` is a loop."""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError(f"duplicate vertex names in {vertices}")
        rows = [0] * len(vertices)
        for a in loops:
            if a not in index:
                raise UnknownVertexError(a)
            rows[index[a]] |= 1 << index[a]
        for a, b in edges:
            for x in (a, b):
                if x not in index:
                    raise UnknownVertexError(x)
            i, j = index[a], index[b]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls._raw(vertices, tuple(rows))

    # -- basic queries -------------------------------------------------

    @property
    def rows(self) -> tuple[int, ...]:
        return self.adj.rows

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def _mask(self, s: Iterable[str]) -> int:
        m = 0
        for v in s:
            m |= 1 << self.index(v)
        return m

    def _names(self, mask: int) -> frozenset[str]:
        return frozenset(self.vertices[i] for i in _bits(mask))

    def has_loop(self, a: str) -> bool:
        i = self.index(a)
        return bool((self.rows[i] >> i) & 1)

    def adjacent(self, a: str, b: str) -> bool:
        return bool((self.rows[self.index(a)] >> self.index(b)) & 1)

    def neighbors(self, a: str) -> frozenset[str]:
        """N(G, a): the neighbours of ``a`` other than ``a`` itself."""
        i = self.index(a)
        return self._names(self.rows[i] & ~(1 << i))

    def loops(self) -> frozenset[str]:
        return frozenset(v for i, v in enumerate(self.vertices) if (self.rows[i] >> i) & 1)

    def edges(self) -> list[tuple[str, str]]:
        """Non-loop edges as pairs, in vertex order."""
        out = []
        for i, r in enumerate(self.rows):
            for j in _bits(r >> (i + 1)):
                out.append((self.vertices[i], self.vertices[i + 1 + j]))
        return out

    def rank(self) -> int:
        return rank_of_rows(self.rows)

    def corank(self) -> int:
        return len(self.vertices) - self.rank()

    def is_isolated(self, a: str) -> bool:
        i = self.index(a)
        return not (self.rows[i] & ~(1 << i))

    # -- operations ----------------------------------------------------

    def induced(self, s: Iterable[str]) -> Graph:
        """G[s], keeping the original relative order of vertices."""
        return self._induced_mask(self._mask(s))

    def _induced_mask(self, mask: int) -> Graph:
        idx = list(_bits(mask))
        if len(idx) == len(self.vertices):
            return self
        new_rows = []
        for i in idx:
            r = self.rows[i] & mask
            nr = 0
            for k, j in enumerate(idx):
                if (r >> j) & 1:
                    nr |= 1 << k
            new_rows.append(nr)
        return Graph._raw(tuple(self.vertices[i] for i in idx), tuple(new_rows))

    def delete(self, *vs: str | Iterable[str]) -> Graph:
        """G - X. Accepts vertex names and/or iterables of names."""
        mask = 0
        for v in vs:
            if isinstance(v, str):
                mask |= 1 << self.index(v)
            else:
                mask |= self._mask(v)
        return self._induced_mask(((1 << len(self.vertices)) - 1) & ~mask)

    def toggle_loops(self, s: Iterable[str] | str) -> Graph:
        """G ∇ s: flip the diagonal bits of the vertices in ``s``."""
        if isinstance(s, str):
            s = (s,)
        mask = self._mask(s)
        if not mask:
            return self
        rows = list(self.rows)
        for i in _bits(mask):
            rows[i] ^= 1 << i
        return Graph._raw(self.vertices, tuple(rows))

    def local_complement(self, a: str) -> Graph:
        """G^a: complement the adjacency, loops included, inside N(G, a)."""
        i = self.index(a)
        nb = self.rows[i] & ~(1 << i)
        if not nb:
            return self
        rows = list(self.rows)
        for j in _bits(nb):
            rows[j] ^= nb
        return Graph._raw(self.vertices, tuple(rows))

    def pivot(self, a: str, b: str) -> Graph:
        """G^{ab}, defined for distinct vertices whatever their loops or adjacency."""
        if a == b:
            raise ValueError("pivot needs two distinct vertices")
        i, j = self.index(a), self.index(b)
        keep = ~((1 << i) | (1 << j))
        na = self.rows[i] & keep
        nb = self.rows[j] & keep
        only_a = na & ~nb
        only_b = nb & ~na
        both = na & nb
        if not (na and nb):
            return self
        rows = list(self.rows)
        for k in _bits(only_a):
            rows[k] ^= nb
        for k in _bits(only_b):
            rows[k] ^= na
        for k in _bits(both):
            rows[k] ^= only_a | only_b
        return Graph._raw(self.vertices, tuple(rows))

    def star_complement(self, a: str) -> Graph:
        """G * a = G^a ∇ N(G, a): toggles the non-loop edges inside N(G, a)."""
        return self.local_complement(a).toggle_loops(self.neighbors(a))

    def disjoint_union(self, other: Graph) -> Graph:
        clash = set(self.vertices) & set(other.vertices)
        if clash:
            raise ValueError(f"vertex names shared by both graphs: {sorted(clash)}")
        n = len(self.vertices)
        rows = self.rows + tuple(r << n for r in other.rows)
        return Graph._raw(self.vertices + other.vertices, rows)

    def delete_edge(self, a: str, b: str) -> Graph:
        """G - e for the edge e = a-b; the endpoints stay."""
        if a == b or not self.adjacent(a, b):
            raise ValueError(f"{a}-{b} is not an edge")
        i, j = self.index(a), self.index(b)
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return Graph._raw(self.vertices, tuple(rows))

    def rename(self, mapping: Mapping[str, str]) -> Graph:
        """Apply a bijective renaming of vertices (unmapped names are kept)."""
        return Graph._raw(tuple(mapping.get(v, v) for v in self.vertices), self.rows)

    def classify_pair(self, a: str, b: str) -> str:
        """Loop status of an adjacent pair: ``'a-b'``, ``'al-b'``, ``'a-bl'`` or ``'al-bl'``.

        ``l`` marks a looped endpoint; the first name always refers to ``a``.
        """
        if a == b or not self.adjacent(a, b):
            raise ValueError(f"{a} and {b} are not adjacent")
        la, lb = self.has_loop(a), self.has_loop(b)
        return ("al" if la else "a") + "-" + ("bl" if lb else "b")

    # -- identity -----------------------------------------------------

    def key(self) -> tuple[tuple[str, ...], tuple[int, ...]]:
        """Canonical labelled form: vertices sorted by name, rows permuted to match."""
        if self._key is None:
            order = sorted(range(len(self.vertices)), key=self.vertices.__getitem__)
            if order == list(range(len(order))):
                self._key = (self.vertices, self.rows)
            else:
                pos = {old: new for new, old in enumerate(order)}
                rows = []
                for old in order:
                    r = self.rows[old]
                    nr = 0
                    for j in _bits(r):
                        nr |= 1 << pos[j]
                    rows.append(nr)
                self._key = (tuple(self.vertices[i] for i in order), tuple(rows))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Graph({to_text(self)!r})"


# -- text format -------------------------------------------------------

_NAME = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.~]*$")


def to_text(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    loops = [v for v in g.vertices if g.has_loop(v)]
    if loops:
        lines.append("loops: " + " ".join(loops))
    edges = g.edges()
    if edges:
        lines.append("edges: " + " ".join(f"{a}-{b}" for a, b in edges))
    return "\n".join(lines)


def read_graph_text(text: str) -> tuple[Graph, list[tuple[str, str]]]:
    """Parse the line-oriented graph format.

    Returns the graph and its edge list in file order, with loops given
    as ``(x, x)``. Lines starting with ``loops:`` contribute their loops in
    place. Duplicate edges or loops are rejected.
    """
    vertices: list[str] | None = None
    items: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    # '#' comments and ';' as an alternative line separator
    lines = []
    for raw in text.splitlines():
        raw = raw.split("#", 1)[0]
        lines.extend(raw.split(";"))
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise GraphFormatError(f"line {lineno}: expected 'field: values', got {line!r}")
        head = head.strip().lower()
        tokens = rest.split()
        if head == "vertices":
            if vertices is not None:
                raise GraphFormatError(f"line {lineno}: repeated 'vertices' line")
            for t in tokens:
                if not _NAME.match(t):
                    raise GraphFormatError(f"line {lineno}: bad vertex name {t!r}")
            if len(set(tokens)) != len(tokens):
                raise GraphFormatError(f"line {lineno}: duplicate vertex names")
            vertices = tokens
        elif head in ("loops", "edges"):
            for t in tokens:
                if head == "loops":
                    a = b = t
                else:
                    parts = t.split("-")
                    if len(parts) != 2 or not parts[0] or not parts[1]:
                        raise GraphFormatError(f"line {lineno}: bad edge {t!r}")
                    a, b = parts
                pair = frozenset((a, b))
                if pair in seen:
                    raise GraphFormatError(f"line {lineno}: duplicate edge {t!r}")
                seen.add(pair)
                items.append((a, b))
        else:
            raise GraphFormatError(f"line {lineno}: unknown field {head!r}")
    if vertices is None:
        vertices = []
        for a, b in items:
            for x in (a, b):
                if x not in vertices:
                    if not _NAME.match(x):
                        raise GraphFormatError(f"bad vertex name {x!r}")
                    vertices.append(x)
    try:
        g = Graph.from_edges(vertices, items)
    except UnknownVertexError as e:
        raise GraphFormatError(f"edge mentions undeclared vertex {e.args[0]!r}") from None
    return g, items


def parse_graph(text: str) -> Graph:
    return read_graph_text(text)[0]


# -- module-level aliases matching the operation names --------------------


def induced(g: Graph, s: Iterable[str]) -> Graph:
    return g.induced(s)


def delete(g: Graph, s: Iterable[str]) -> Graph:
    return g.delete(s)


def toggle_loops(g: Graph, s: Iterable[str]) -> Graph:
    return g.toggle_loops(s)


def local_complement(g: Graph, a: str) -> Graph:
    return g.local_complement(a)


def pivot(g: Graph, a: str, b: str) -> Graph:
    return g.pivot(a, b)


def star_complement(g: Graph, a: str) -> Graph:
    return g.star_complement(a)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return g.disjoint_union(h)


def neighbors(g: Graph, a: str) -> frozenset[str]:
    return g.neighbors(a)


def graph_rank(g: Graph) -> int:
    return g.rank()


def graph_corank(g: Graph) -> int:
    return g.corank()


# -- small graph families used by tests, demos and the CLI ---------------


def path(*names: str) -> Graph:
    return Graph.from_edges(names, zip(names, names[1:]))


def complete(names: Iterable[str]) -> Graph:
    names = tuple(names)
    return Graph.from_edges(names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:]])


def all_graphs(names: Iterable[str]):
    """Every loop/edge pattern on the given vertices (2^(n(n+1)/2) graphs).

    The edge pattern is the outer loop and the loop pattern the inner one,
    so the 2^n graphs sharing an edge set come out consecutively.
    """
    names = tuple(names)
    n = len(names)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for pattern in range(1 << len(pairs)):
        base = [0] * n
        for s, (i, j) in enumerate(pairs):
            if (pattern >> s) & 1:
                base[i] |= 1 << j
                base[j] |= 1 << i
        for loops in range(1 << n):
            yield Graph._raw(names, tuple(r | (1 << i if (loops >> i) & 1 else 0) for i, r in enumerate(base)))


def random_graph(names: Iterable[str], rng, p_edge: float = 0.5, p_loop: float = 0.5) -> Graph:
    """Random graph with independent edges and loops; ``rng`` is a ``random.Random``."""
    names = tuple(names)
    n = len(names)
    rows = [0] * n
    for i in range(n):
        if rng.random() < p_loop:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if rng.random() < p_edge:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._raw(names, tuple(rows))
