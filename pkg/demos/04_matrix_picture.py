"""The block-matrix picture of an acyclic graph algebra.

Each sink v contributes one square block whose size is the number of paths
into v; phi reads an element's coefficients against that path basis and is
a star-isomorphism: products go to block products and the involution to the
conjugate transpose.

Run with: python3 demos/04_matrix_picture.py
"""

from leavitt import (
    Element,
    Rationals,
    dimension,
    format_matrix_image,
    parse_element,
    phi,
    phi_inv,
    sink_basis,
    standard_graph,
)

Q = Rationals()
line3 = standard_graph("line", 3)

basis = sink_basis(line3)
print("sinks of line_3:", basis.sinks)
print("path basis at v3:", [".".join(p.edges) or p.base for p in basis.paths["v3"]])
print("dimension:", dimension(line3), "(= 3^2, one 3x3 block)")

x = parse_element("v1 + 2*e1 + e1.e2", line3, Q)
print("\nx =", x)
print(format_matrix_image(phi(x)))

# phi is invertible, multiplicative, and star-compatible.
y = parse_element("e2*", line3, Q)
assert phi_inv(phi(x)) == x
assert phi(x * y) == phi(x) * phi(y)
assert phi(x.star()) == phi(x).star()
print("\nphi_inv(phi(x)) == x, phi(x*y) == phi(x)phi(y), phi(x*) == phi(x)^*")

# The identity goes to identity blocks.
print("\nphi(1):")
print(format_matrix_image(phi(Element.one(line3, Q))))
