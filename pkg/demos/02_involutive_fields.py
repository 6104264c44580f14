"""Exact coefficient fields and how proper their involutions are.

A field with involution is n-proper when a vanishing sum of n terms
conj(x) * x forces every x to vanish, and positive definite when that holds
for all n. The properness level is what the star-regularity decision
compares against the graph's largest path count.

Run with: python3 demos/02_involutive_fields.py
"""

from leavitt import (
    OMEGA,
    GaussianRationals,
    PrimeField,
    QuadraticExtField,
    Rationals,
    parse_field_spec,
)

fields = [
    Rationals(),
    GaussianRationals(conjugation=True),
    GaussianRationals(conjugation=False),
    PrimeField(2),
    PrimeField(3),
    PrimeField(5),
    PrimeField(7),
    QuadraticExtField(3),
]

print("properness levels (omega = positive definite):")
for k in fields:
    level = k.properness_level()
    if level is OMEGA:
        shown = "-"
    else:
        witness = k.improper_tuple(level + 1)
        shown = "(" + ", ".join(map(str, witness)) + ")"
    print(f"  {k.spec_string():10}  level={level!s:6}  first failing tuple: {shown}")

# The same field can carry involutions of very different strength: on the
# Gaussian rationals, conjugation is positive definite while the identity
# involution already fails at two terms because 1^2 + i^2 = 0.
qi = GaussianRationals(conjugation=False)
one, i = qi.one, qi.i
print("\nQ[i]/id: conj(1)*1 + conj(i)*i =", one.conj() * one + i.conj() * i)

# Finite fields are searched exhaustively, so the witnesses are canonical.
gf5 = parse_field_spec("GF(5)")
print("GF(5) improper pair:", gf5.improper_tuple(2), "since 1 + 2*2 = 5 = 0")

# The quadratic extension carries the Frobenius involution x -> x^p; its
# norm map hits -1, so no extension field is ever 2-proper.
gf9 = parse_field_spec("GF(3,2)")
t = gf9.t
print("GF(9): t^3 =", t * t * t, "and conj(t) =", t.conj())
print("GF(9) improper pair:", gf9.improper_tuple(2))
