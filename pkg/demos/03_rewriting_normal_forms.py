"""Elements, the rewriting normal form, and the involution.

Run with: python3 demos/03_rewriting_normal_forms.py
"""

from leavitt import (
    Element,
    GaussianRationals,
    Path,
    Rationals,
    local_unit,
    parse_element,
    special_edges,
    standard_graph,
)

Q = Rationals()

# On the single loop the generator is invertible: e* e = v = e e*.
loop = standard_graph("rose", 1)
e = Element.edge(loop, Q, "e1")
v = Element.vertex(loop, Q, "v")
print("loop: e1*.e1 =", e.star() * e, " e1.e1* =", e * e.star())

# On the two-loop rose the vertex relation is oriented as a rewrite that
# eliminates the special (lexicographically greatest) edge pair e2 e2*.
rose2 = standard_graph("rose", 2)
print("\nrose_2 special edges:", special_edges(rose2))
p2 = Path("v", ("e2",))
x = Element.from_terms(rose2, Q, [(1, p2, p2)])
print("e2.e2* normalizes to:", x)

# Products reduce through the ghost/real cancellation and renormalize.
line2 = standard_graph("line", 2)
e1 = Element.edge(line2, Q, "e1")
print("\nline_2: e1*.e1 =", e1.star() * e1)
print("line_2: e1.e1* =", e1 * e1.star(), "(the vertex relation at v1)")

# The involution conjugates coefficients and swaps the path pair.
qi = GaussianRationals(conjugation=True)
y = parse_element("1+2i*e1 + v2", line2, qi)
print("\nover Q[i]/conj:  y =", y)
print("               y* =", y.star())
print("            y**   =", y.star().star())

# The algebra is only locally unital: each element has a finite local unit,
# the sum of the vertices supporting it.
print("\nlocal unit of e1:", local_unit(e1))
print("it absorbs e1:", local_unit(e1) * e1 == e1 == e1 * local_unit(e1))
