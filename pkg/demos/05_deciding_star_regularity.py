"""Deciding regularity, star-regularity, and positive definiteness.

Regularity only sees the graph (acyclicity). Star-regularity compares the
graph's largest path count sigma with the field's properness level, so the
same graph can be star-regular over one field and not another. The
undecided case (cyclic graph, field proper but not positive definite) is
reported as unknown, never guessed.

Run with: python3 demos/05_deciding_star_regularity.py
"""

from leavitt import format_report, full_report, parse_field_spec, standard_graph

line2 = standard_graph("line", 2)
specs = ["Q", "Q[i]/id", "Q[i]/conj", "GF(3)", "GF(5)"]

print("the two-vertex line (a 2x2 matrix algebra) across five fields:")
print(f"{'field':10} {'sigma':>5} {'level':>6} {'regular':>8} {'star-regular':>13} {'proper':>9}")
for spec in specs:
    r = full_report(line2, parse_field_spec(spec))
    print(f"{spec:10} {r.sigma!s:>5} {r.properness_level!s:>6} "
          f"{str(r.regular):>8} {str(r.star_regular):>13} {r.proper_algebra:>9}")

# GF(3) stands out: 2-proper but not positive definite, so the 2x2 algebra
# is star-regular while larger lines are not.
print("\nline_n over GF(3):")
for n in (1, 2, 3, 4):
    r = full_report(standard_graph("line", n), parse_field_spec("GF(3)"))
    print(f"  n={n}: sigma={r.sigma}, star_regular={r.star_regular}")

# A cyclic graph is never regular; properness stays unknown unless the
# field is positive definite.
print("\nsingle loop over GF(2):")
print(format_report(full_report(standard_graph("rose", 1), parse_field_spec("GF(2)"))))
