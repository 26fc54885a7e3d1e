"""Multivariate interlace polynomials of looped graphs.

The core objects are :class:`Graph` (labelled vertices, symmetric GF(2)
adjacency with loops on the diagonal) and :class:`MultiPoly` (sparse
integer polynomials over vertex-indexed and ordinary indeterminates).
``brute_force_B`` and ``recursive_B`` compute the same polynomial two
independent ways; ``specializations`` derives the classical ones.
"""

from __future__ import annotations

from .cwdp import dp_bi_truncated
from .gf2 import SymBitMatrix, corank, principal_submatrix, rank
from .graph import Graph, GraphFormatError, all_graphs, parse_graph, read_graph_text, to_text
from .interlace import (brute_force_B, mu, reconstruct_graph, reconstruct_loopfree_from_bxy, recursive_B,
                        specialize_B1, theta)
from .kexpr import eval_kexpr, parse_kexpr, validate_width
from .matroid import Matroid, MatroidError, parse_matroid, tutte_polynomial
from .poly import MultiPoly, Substitution, canonical_text, parse_poly, truncate, var
from .specializations import b_independence, b_xy, b_y0, big_q_poly, independence_poly, q_poly

__all__ = [
    "Graph", "GraphFormatError", "Matroid", "MatroidError", "MultiPoly", "Substitution", "SymBitMatrix",
    "all_graphs", "b_independence", "b_xy", "b_y0", "big_q_poly", "brute_force_B", "canonical_text",
    "corank", "dp_bi_truncated", "eval_kexpr", "independence_poly", "mu", "parse_graph", "parse_kexpr",
    "parse_matroid", "parse_poly", "principal_submatrix", "q_poly", "rank", "read_graph_text",
    "reconstruct_graph", "reconstruct_loopfree_from_bxy", "recursive_B", "specialize_B1", "theta",
    "to_text", "truncate", "tutte_polynomial", "validate_width", "var",
]
