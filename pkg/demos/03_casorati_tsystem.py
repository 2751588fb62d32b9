"""Numerical T-system from Casorati determinants.

Q_a is specialized to a product of sinh factors with random roots.  A basis of
solutions of L w = 0 is built on a lattice and ratios of Casorati determinants
reproduce the symbolic T^(a)_m, which satisfy the T-system.

Run:  python demos/03_casorati_tsystem.py
"""
from tsyslab import make_algebra
from tsyslab.casorati import CasoratiSystem, Specialization, eval_poly
from tsyslab.shifts import Shift
from tsyslab.tsystem import jacobi_trudi

spec = make_algebra("A2_odd", 2)
sp = Specialization.random(spec, seed=7)
print("roots per orbit:", {a: len(r) for a, r in sp.roots.items()})
system = CasoratiSystem(sp, window=spec.N + 5)

at = Shift(3)
for a in (1, 2):
    for m in (1, 2, 3):
        c = system.T_am(a, m, at)
        j = eval_poly(sp, jacobi_trudi(spec, a, m), at)
        print(f"T^({a})_{m}: Casorati {complex(c):.6g}   Jacobi-Trudi {complex(j):.6g}")

# T-system at a = 1, m = 2:  T(u-1) T(u+1) = T_{m-1} T_{m+1} + T^(0)_2 T^(2)_2
a, m = 1, 2
lhs = system.T_am(a, m, at - Shift(1)) * system.T_am(a, m, at + Shift(1))
rhs = system.T_am(a, m - 1, at) * system.T_am(a, m + 1, at) + system.T_am(a + 1, m, at)
print(f"T-system residual at a={a}, m={m}: {float(abs(lhs - rhs) / abs(lhs)):.2e}")
print("working digits used:", sp.work_dps, "(guard digits absorb the frame conditioning)")
