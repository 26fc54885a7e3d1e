"""A linear relation that holds for y := 0 and for u := 0 but not for B itself.

On the path c-a-b-d, compare

    B(G-a) - B(G-a-b)   and   B(G^ab-a) - B(G^ab-a-b).

The two sides differ in the coefficient of ``x_d y_b y_c``.
"""

from __future__ import annotations

from mvinterlace.checks import counterexample14
from mvinterlace.graph import to_text

ce = counterexample14()
g = ce["graph"]
print(to_text(g))
print("pivot on a, b adds the edge c-d:")
print(to_text(g.pivot("a", "b")))
print()
print("left :", ce["lhs"])
print("right:", ce["rhs"])
print()
print("equal?", ce["holds"])
print("x_d y_b y_c terms on the left: ", ce["lhs_witness"])
print("x_d y_b y_c terms on the right:", ce["rhs_witness"])
print()
print("The difference comes from rk(c^l ⊕ (d - b^l)) = 3 against rk(c^l - d - b^l) = 2.")
print("After u := 0 the sides agree:", ce["holds_u0"])
print("After y := 0 the sides agree:", ce["holds_y0"])
