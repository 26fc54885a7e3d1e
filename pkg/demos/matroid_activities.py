"""Basis activities and the Tutte polynomial of a small graphic matroid."""

from __future__ import annotations

from mvinterlace import matroid as mt
from mvinterlace.graph import complete

m = mt.Matroid.from_graph(complete("abcd"))
print(f"cycle matroid of K4: {len(m.ground)} elements, rank {m.rank}, {len(m.bases)} bases")
print("ground order:", " < ".join(m.ground))
print()
for b in m.sorted_bases()[:5]:
    ia, ea = m.activities(b)
    print(f"  basis {sorted(b, key=m.key)}: internally active {sorted(ia, key=m.key)},"
          f" externally active {sorted(ea, key=m.key)}")
print("  ...")
print()
print("T by activities:", mt.tutte_polynomial(m, "activities"))
print("T by rank sums: ", mt.tutte_polynomial(m, "rank_shift"))
print()
# every subset lies in exactly one interval [B - IA(B), B + EA(B)]
hits = {}
for b in m.bases:
    ia, ea = m.activities(b)
    free = sorted(ia | ea)
    for mask in range(1 << len(free)):
        a = (b - ia) | {free[i] for i in range(len(free)) if mask >> i & 1}
        hits[frozenset(a)] = hits.get(frozenset(a), 0) + 1
print(f"intervals cover {len(hits)} of {2 ** len(m.ground)} subsets, each exactly once:",
      set(hits.values()) == {1})
