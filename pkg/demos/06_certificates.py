"""Constructive certificates, re-checked by element arithmetic.

Every positive decision is backed by a witness and every witness re-checks
inside the algebra: inner inverses for regularity, generating projections
for star-regularity, annihilating elements when properness fails, and
invertible local inverses for unit-regularity.

Run with: python3 demos/06_certificates.py
"""

from leavitt import (
    Element,
    GaussianRationals,
    NotStarRegularError,
    PrimeField,
    Rationals,
    extend_to_unit,
    improper_element,
    parse_element,
    projection_generator,
    regular_witness,
    standard_graph,
    unit_regular_witness,
)

Q = Rationals()
line2 = standard_graph("line", 2)
a = parse_element("e1 + 2*v2", line2, Q)

# An inner inverse: a b a = a.
b = regular_witness(line2, Q, a)
print("a       =", a)
print("b       =", b)
print("a.b.a   =", a * b * a, "== a:", a * b * a == a)

# A projection generating the same right ideal, with the aR membership
# witnessed by an explicit factor.
cert = projection_generator(line2, Q, a)
print("\nprojection p =", cert.p)
print("p* = p:", cert.p.star() == cert.p, " p^2 = p:", cert.p * cert.p == cert.p)
print("p.a = a:", cert.p * a == a, " a.factor = p:", a * cert.factor == cert.p)

# Over GF(5) the identity involution fails at two terms (1 + 2^2 = 0), and
# the projection construction surfaces an annihilating certificate.
gf5 = PrimeField(5)
bad = parse_element("v2 + 2*e1", line2, gf5)
try:
    projection_generator(line2, gf5, bad)
except NotStarRegularError as err:
    c = err.certificate
    print("\nGF(5): not star-regular; certificate c =", c)
    print("c*.c =", c.star() * c)

# The canonical improper element over Q[i] with the identity involution.
qi = GaussianRationals(conjugation=False)
c = improper_element(line2, qi)
print("\nQ[i]/id improper element:", c, " with c*.c =", c.star() * c)

# Unit-regularity: an invertible u with a u a = a, plus the globalization
# w = u + (1 - v) once u is only invertible inside a corner.
e1 = Element.edge(line2, Q, "e1")
u = unit_regular_witness(line2, Q, e1)
print("\nfor a = e1: u =", u.u, " with u.u' =", u.u * u.u_prime)
w, w_prime = extend_to_unit(line2, u.u, u.u_prime, u.v)
print("w =", w, " w.w' =", w * w_prime)
