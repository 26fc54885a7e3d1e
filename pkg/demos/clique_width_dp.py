"""Truncated independence polynomial through a clique-width expression.

A k-expression builds a graph from labelled vertices. The dynamic program
keeps one truncated polynomial per set of labels, so for fixed k and d its
cost grows polynomially with the number of vertices.
"""

from __future__ import annotations

import random
import time

from mvinterlace.cwdp import dp_bi_truncated
from mvinterlace.kexpr import eval_kexpr, parse_kexpr, random_kexpr, to_text
from mvinterlace.graph import to_text as graph_text
from mvinterlace.specializations import TO_I, b_independence

k3 = parse_kexpr("add(1,2, ren(2,1, add(1,2, (1+2))) + 2)")
print("expression:", to_text(k3))
print(graph_text(eval_kexpr(k3, 2).graph))
print("B_I truncated at 3:", dp_bi_truncated(k3, 2, 3))
print("with x, y := 1:    ", TO_I.apply(dp_bi_truncated(k3, 2, 3)))
print()

rng = random.Random(7)
e = random_kexpr(10, 3, rng)
g = eval_kexpr(e, 3).graph
for d in range(4):
    dp = dp_bi_truncated(e, 3, d)
    same = dp == b_independence(g, "direct").truncate(d)
    print(f"random 3-expression, 10 vertices, d={d}: {len(dp)} terms, matches stable-set enumeration: {same}")
print()

print("runtime for k=2, d=2 (best of 3):")
prev = None
for n in (10, 20, 40, 80):
    e = random_kexpr(n, 2, rng)
    best = float("inf")
    for _ in range(3):
        t = time.perf_counter()
        dp_bi_truncated(e, 2, 2)
        best = min(best, time.perf_counter() - t)
    ratio = f"  x{best / prev:.1f}" if prev else ""
    print(f"  {n:3d} vertices: {best * 1000:7.1f} ms{ratio}")
    prev = best
