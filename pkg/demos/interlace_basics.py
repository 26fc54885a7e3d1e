"""Walk through the multivariate interlace polynomial on a few small graphs.

Run with ``python3 demos/interlace_basics.py``.
"""

from __future__ import annotations

from mvinterlace.graph import Graph, path, to_text
from mvinterlace.interlace import brute_force_B, recursive_B
from mvinterlace.specializations import b_xy, b_y0, big_q_poly, independence_poly, q_poly


def show(title: str, g: Graph) -> None:
    print(f"== {title}")
    print(to_text(g))
    brute, rec = brute_force_B(g), recursive_B(g)
    # the definition sums over 3^n disjoint pairs (A, B); the recursion never enumerates them
    print(f"B(G) has {len(brute)} monomials; recursion agrees: {brute == rec}")
    print()


single = Graph.from_edges(["a"])
print("One unlooped vertex: either it is left out, put in A (nullity 1) or in B (rank 1).")
print("  B(a)   =", recursive_B(single))
print("  B(a^l) =", recursive_B(single.toggle_loops("a")))
print()

show("path c-a-b-d", path("c", "a", "b", "d"))
show("looped triangle", Graph.from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")], loops="ab"))

g = path("a", "b", "c", "d")
print("== specializations of the path a-b-c-d")
print("  y := 0        ", b_y0(g))
print("  y := x        ", b_xy(g).canonical_text()[:70], "...")
print("  q(G; u', v')  ", q_poly(g))
print("  Q(G, v')      ", big_q_poly(g))
print("  I(G, v)       ", independence_poly(g))
print()
print("Each specialization also has its own recursion; they agree with the substitutions:")
print("  q:", q_poly(g, "recursion_q123") == q_poly(g), " Q:", big_q_poly(g, "recursion_Q") == big_q_poly(g),
      " I:", independence_poly(g, "recursion") == independence_poly(g))
