"""Tableaux sums, Jacobi-Trudi determinants and classical characters.

Run:  python demos/04_tableaux_beta.py
"""
from tsyslab import beta_project, make_algebra, t_table
from tsyslab.tsystem import YoungData, jacobi_trudi, tableaux, tableaux_sum
from tsyslab.shifts import Shift

spec = make_algebra("A2_even", 1)
data = YoungData.rectangle(spec.N, 1, 2)
print("index set", data.indices, "gives mu =", data.mu)
for filling in tableaux(data, spec.N + 1):
    print("  ", dict(sorted(filling.items())))

tab, count = tableaux_sum(spec, data, Shift(-2))
print(f"{count} tableaux; sum equals Jacobi-Trudi:", tab == jacobi_trudi(spec, 1, 2))

# beta forgets the spectral parameter and keeps the weight.
for kind, n in [("A2_even", 2), ("A2_odd", 3), ("D3_4", 2)]:
    s = make_algebra(kind, n)
    image = beta_project(s, t_table(s).T(1))
    print(f"{kind} n={n}: beta(T^1) has dimension {image.dimension()}")
    print("   ", image)
