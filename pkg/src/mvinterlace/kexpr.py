"""k-expressions: a small DSL that builds labelled graphs.

Grammar (whitespace ignored, ``#`` starts a comment)::

    expr  := term ('+' term)*
    term  := const | 'add(' int ',' int ',' expr ')'
                   | 'ren(' int ',' int ',' expr ')' | '(' expr ')'
    const := int | int 'l'

``i`` is an isolated vertex labelled ``i`` and ``il`` the same with a loop;
``add(i,j,e)`` joins every ``i``-labelled vertex to every ``j``-labelled
one; ``ren(i,j,e)`` relabels ``i`` to ``j``; ``+`` is disjoint union
(left-associative). Vertices are named ``v1, v2, ...`` by left-to-right
occurrence of constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from .graph import Graph


class KExprSyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


class WidthError(ValueError):
    pass


@dataclass(frozen=True)
class Const:
    label: int
    looped: bool = False
    vertex: str | None = None


@dataclass(frozen=True)
class Add:
    i: int
    j: int
    child: KExpr

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError(f"add needs two distinct labels, got add({self.i},{self.j})")


@dataclass(frozen=True)
class Ren:
    i: int
    j: int
    child: KExpr


@dataclass(frozen=True)
class Union_:
    left: KExpr
    right: KExpr


KExpr = Union[Const, Add, Ren, Union_]


@dataclass
class LabelledGraph:
    graph: Graph
    lab: dict[str, int]
    order: tuple[str, ...] | None = field(default=None)

    def label_classes(self) -> dict[int, frozenset[str]]:
        out: dict[int, set[str]] = {}
        for a, i in self.lab.items():
            out.setdefault(i, set()).add(a)
        return {i: frozenset(s) for i, s in out.items()}


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<kw>add|ren)\s*\(|(?P<int>\d+)(?P<loop>l)?|(?P<op>[(),+]))")


def _tokens(src: str) -> list[tuple[str, str, int]]:
    text = re.sub(r"#[^\n]*", lambda mt: " " * len(mt.group()), src)
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise KExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = mt.start(mt.lastgroup if mt.lastgroup != "loop" else "int")
        if mt.group("kw"):
            out.append(("kw", mt.group("kw"), start))
        elif mt.group("int") is not None:
            out.append(("const" if mt.group("loop") else "int", mt.group("int"), start))
        else:
            out.append(("op", mt.group("op"), start))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


def parse_kexpr(src: str) -> KExpr:
    toks = _tokens(src)
    i = 0
    counter = 0

    def peek():
        return toks[i]

    def take(kind: str, value: str | None = None):
        nonlocal i
        t = toks[i]
        if t[0] != kind or (value is not None and t[1] != value):
            raise KExprSyntaxError(f"expected {value or kind!r}, found {t[1] or 'end of input'!r}", t[2])
        i += 1
        return t

    def label(tok) -> int:
        n = int(tok[1])
        if n < 1:
            raise KExprSyntaxError("labels start at 1", tok[2])
        return n

    def expr() -> KExpr:
        node = term()
        while peek()[0] == "op" and peek()[1] == "+":
            take("op", "+")
            node = Union_(node, term())
        return node

    def term() -> KExpr:
        nonlocal counter
        kind, value, pos = peek()
        if kind in ("int", "const"):
            tok = take(kind)
            counter += 1
            return Const(label(tok), kind == "const", f"v{counter}")
        if kind == "kw":
            take("kw")
            a = label(take("int"))
            take("op", ",")
            b = label(take("int"))
            take("op", ",")
            child = expr()
            take("op", ")")
            if value == "add":
                if a == b:
                    raise KExprSyntaxError(f"add needs distinct labels, got add({a},{b})", pos)
                return Add(a, b, child)
            return Ren(a, b, child)
        if kind == "op" and value == "(":
            take("op", "(")
            node = expr()
            take("op", ")")
            return node
        raise KExprSyntaxError(f"unexpected {value or 'end of input'!r}", pos)

    node = expr()
    if peek()[0] != "end":
        raise KExprSyntaxError(f"trailing input {peek()[1]!r}", peek()[2])
    return node


def to_text(e: KExpr) -> str:
    if isinstance(e, Const):
        return f"{e.label}{'l' if e.looped else ''}"
    if isinstance(e, Add):
        return f"add({e.i},{e.j}, {to_text(e.child)})"
    if isinstance(e, Ren):
        return f"ren({e.i},{e.j}, {to_text(e.child)})"
    return f"({to_text(e.left)} + {to_text(e.right)})"


# -- structure ------------------------------------------------------------------


def constants(e: KExpr) -> Iterator[Const]:
    """Constants in left-to-right order."""
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            yield node
        elif isinstance(node, (Add, Ren)):
            stack.append(node.child)
        else:
            stack.append(node.right)
            stack.append(node.left)


def number(e: KExpr) -> KExpr:
    """Rename constants ``v1, v2, ...`` by occurrence, as the parser does."""
    counter = 0

    def go(node: KExpr) -> KExpr:
        nonlocal counter
        if isinstance(node, Const):
            counter += 1
            return Const(node.label, node.looped, f"v{counter}")
        if isinstance(node, Add):
            return Add(node.i, node.j, go(node.child))
        if isinstance(node, Ren):
            return Ren(node.i, node.j, go(node.child))
        left = go(node.left)
        return Union_(left, go(node.right))

    return go(e)


def validate_width(e: KExpr) -> int:
    """Largest label used anywhere in ``e`` (not the clique-width of its value)."""
    best = 0

    def go(node: KExpr) -> None:
        nonlocal best
        if isinstance(node, Const):
            best = max(best, node.label)
        elif isinstance(node, (Add, Ren)):
            best = max(best, node.i, node.j)
            go(node.child)
        else:
            go(node.left)
            go(node.right)

    go(e)
    return best


def vertex_names(e: KExpr) -> list[str]:
    names = []
    for k, c in enumerate(constants(e), 1):
        names.append(c.vertex if c.vertex is not None else f"v{k}")
    if len(set(names)) != len(names):
        raise ValueError("constant vertex names are not unique")
    return names


# -- evaluation -------------------------------------------------------------------


def eval_kexpr(e: KExpr, k: int | None = None, ordered: bool = False) -> LabelledGraph:
    """The k-graph denoted by ``e``.

    With ``ordered``, the vertex order makes every vertex of a union's left
    operand smaller than those of its right operand.
    """
    if k is not None and validate_width(e) > k:
        raise WidthError(f"expression uses label {validate_width(e)} but k = {k}")
    names = vertex_names(e)
    index = {a: i for i, a in enumerate(names)}
    rows = [0] * len(names)
    loops = 0
    labels = [0] * len(names)
    counter = iter(names)

    def go(node: KExpr) -> list[int]:
        nonlocal loops
        if isinstance(node, Const):
            i = index[next(counter)]
            labels[i] = node.label
            if node.looped:
                rows[i] |= 1 << i
            return [i]
        if isinstance(node, Union_):
            return go(node.left) + go(node.right)
        members = go(node.child)
        if isinstance(node, Ren):
            for m in members:
                if labels[m] == node.i:
                    labels[m] = node.j
            return members
        mask_i = mask_j = 0
        for m in members:
            if labels[m] == node.i:
                mask_i |= 1 << m
            elif labels[m] == node.j:
                mask_j |= 1 << m
        for m in members:
            if labels[m] == node.i:
                rows[m] |= mask_j
            elif labels[m] == node.j:
                rows[m] |= mask_i
        return members

    order = go(e)
    g = Graph._raw(tuple(names), tuple(rows))
    lab = {names[i]: labels[i] for i in range(len(names))}
    return LabelledGraph(g, lab, tuple(names[i] for i in order) if ordered else None)


# -- builders -------------------------------------------------------------------------


def complete_kexpr(n: int) -> KExpr:
    """A 2-expression for K_n: repeatedly add a label-2 vertex, join, relabel to 1."""
    if n < 1:
        raise ValueError("n must be positive")
    e: KExpr = Const(1)
    for _ in range(n - 1):
        e = Ren(2, 1, Add(1, 2, Union_(e, Const(2))))
    return number(e)


def random_kexpr(n_constants: int, k: int, rng, p_loop: float = 0.3) -> KExpr:
    """A random k-expression with exactly ``n_constants`` constants."""
    def build(n: int) -> KExpr:
        if n == 1:
            node: KExpr = Const(rng.randint(1, k), rng.random() < p_loop)
        else:
            left = rng.randint(1, n - 1)
            node = Union_(build(left), build(n - left))
        for _ in range(rng.randint(0, 2)):
            i, j = rng.sample(range(1, k + 1), 2) if k >= 2 else (1, 1)
            if k >= 2 and rng.random() < 0.6:
                node = Add(i, j, node)
            elif k >= 2:
                node = Ren(i, j, node)
        return node

    return number(build(n_constants))
