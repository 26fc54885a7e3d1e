"""Truncated multivariate independence polynomial over a k-expression.

The table of a subexpression maps a set ``L`` of labels to the polynomial
(truncated at quasi-degree ``d``) enumerating the stable sets whose
members carry exactly the labels in ``L``. Knowing ``L`` is enough to
update the table under ``add``, ``ren`` and ``+``, so the whole
computation stays polynomial in the number of vertices for fixed ``k``
and ``d``, and never builds the full polynomial.
"""

from __future__ import annotations

from .interlace import V
from .kexpr import Add, Const, KExpr, Ren, Union_, WidthError, validate_width, vertex_names
from .poly import MultiPoly, var

Table = dict[frozenset, MultiPoly]


def _merge(table: Table, key: frozenset, p: MultiPoly) -> None:
    if not p:
        return
    prev = table.get(key)
    table[key] = p if prev is None else prev + p
    if not table[key]:
        del table[key]


def dp_tables(e: KExpr, k: int, d: int) -> Table:
    """Root table of the dynamic program; see :func:`dp_bi_truncated`."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if validate_width(e) > k:
        raise WidthError(f"expression uses label {validate_width(e)} but k = {k}")
    names = iter(vertex_names(e))
    one = MultiPoly.const(1)

    def go(node: KExpr) -> Table:
        if isinstance(node, Const):
            a = next(names)
            table: Table = {frozenset(): one}
            if d >= 1:
                tag = "y" if node.looped else "x"
                table[frozenset((node.label,))] = MultiPoly.monomial({var(tag, a): 1, V: 1})
            return table
        if isinstance(node, Add):
            child = go(node.child)
            return {L: p for L, p in child.items() if not (node.i in L and node.j in L)}
        if isinstance(node, Ren):
            child = go(node.child)
            out: Table = {}
            for L, p in child.items():
                L2 = frozenset(node.j if i == node.i else i for i in L)
                _merge(out, L2, p)
            return out
        left = go(node.left)
        right = go(node.right)
        out = {}
        for L1, p1 in left.items():
            for L2, p2 in right.items():
                _merge(out, L1 | L2, p1.mul_truncated(p2, d))
        return out

    return go(e)


def dp_bi_truncated(e: KExpr, k: int, d: int) -> MultiPoly:
    """``B_I(val(e))↾d`` computed bottom-up over ``e``.

    Transfer rules: a constant gives ``{∅: 1, {i}: x_a v}`` (``y_a v`` if
    looped); ``add(i,j)`` drops every entry whose label set holds both ``i``
    and ``j``; ``ren(i,j)`` relabels keys and sums collisions; ``+``
    combines entries pairwise, truncating each product at ``d``.
    """
    return sum(dp_tables(e, k, d).values(), MultiPoly())
