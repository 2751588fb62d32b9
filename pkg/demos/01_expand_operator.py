"""Expanding the L operator and reading off the T^a.

Run:  python demos/01_expand_operator.py
"""
from fractions import Fraction

from tsyslab import build_L, format_poly, make_algebra, parse_poly, t_table
from tsyslab.diffop import check_duality, check_TQ
from tsyslab.shifts import S

# The smallest case: A2_even with n = 1, so N = 2 and L is a cubic in D.
spec = make_algebra("A2_even", 1)
L = build_L(spec)
print(f"{spec.kind} n={spec.n}: L is exact = {L.exact}, degree {L.degree}")

table = t_table(spec)
for a in range(spec.N + 2):
    print(f"  T^{a}(u) = {format_poly(table.T(a))}")

# T^1 has three terms.  Written by hand in the text grammar it parses back
# to the same polynomial.
hand = parse_poly("Y[1](u) + Y[1](u+1+1/2t)*Y[1](u+2)^-1 + Y[1](u+3+1/2t)^-1")
print("hand-written T^1 matches:", hand == table.T(1))

# Shifting by half a period swaps T^1 and T^2.
print("T^1(u) == T^2(u + t/2):", table.T(1) == table.T(2, S(0, Fraction(1, 2))))
print(check_duality(spec).summary())

# L annihilates Q_1, which is the T-Q relation.
print(check_TQ(spec).summary())

# For D3_4 the operator no longer terminates, so it is truncated at a cutoff.
d34 = make_algebra("D3_4", 2)
trunc = t_table(d34, 3)
print(f"\n{d34.kind}: cutoff {trunc.cutoff}, T^1 has {len(trunc.T(1))} terms,"
      f" T^2 has {len(trunc.T(2))} terms")
