"""Screening operators kill every T^a.

The screening S_a acts as a derivation on Y-polynomials.  Single terms of
T^1 are not annihilated, only the full sum is.

Run:  python demos/02_screening.py
"""
from tsyslab import LaurentPoly, format_poly, make_algebra, t_table
from tsyslab.screening import apply_screening, check_S_functional, check_screening_annihilation, formal_S

spec = make_algebra("A2_odd", 2)
table = t_table(spec)
T1 = table.T(1)

print("S_1(u) =", format_poly(formal_S(spec, 1)))

# add the terms of T^1 one at a time and watch the image of S_1
running = None
for m, c in sorted(T1.terms.items()):
    term = LaurentPoly({m: c})
    running = term if running is None else running + term
    image = apply_screening(spec, 1, running)
    print(f"after {len(running)} of {len(T1)} terms: S_1 image has {len(image)} terms")

for kind, n in [("A2_odd", 2), ("D2", 2), ("D3_4", 2)]:
    s = make_algebra(kind, n)
    print(check_screening_annihilation(s).summary())
    print(check_S_functional(s).summary())
