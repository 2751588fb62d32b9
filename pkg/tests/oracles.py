"""Independent numeric oracles for the tests.

A plain numpy (complex128) evaluator of Q/Y polynomials in the sinh model,
sharing nothing with the mpmath code path in tsyslab.casorati except the
symbol table of the polynomials themselves.
"""
from __future__ import annotations

import numpy as np

from tsyslab.laurent import symbol_of


class SinhModel:
    def __init__(self, roots: dict[int, list[complex]], hbar: float = 0.7):
        self.roots = {a: np.asarray(r, dtype=complex) for a, r in roots.items()}
        self.hbar = hbar
        self.period = 1j * np.pi / hbar

    @classmethod
    def random(cls, orbits, seed: int, hbar: float = 0.7) -> SinhModel:
        rng = np.random.default_rng(seed)
        roots = {}
        for a in orbits:
            M = int(rng.integers(2, 4))
            roots[a] = rng.uniform(-2, 2, M) + 1j * rng.uniform(-1, 1, M)
        return cls(roots, hbar)

    def Q(self, a: int, z: complex) -> complex:
        return complex(np.prod(np.sinh(self.hbar * (z - self.roots[a]))))

    def Y(self, a: int, z: complex) -> complex:
        return self.Q(a, z - 1) / self.Q(a, z + 1)

    def h(self, a: int) -> int:
        return (-1) ** len(self.roots[a])

    def symbol(self, sid: int, u: complex) -> complex:
        sym = symbol_of(sid)
        if sym.family == "h":
            return self.h(sym.index)
        z = u + float(sym.shift.p) + float(sym.shift.q) * self.period
        return self.Q(sym.index, z) if sym.family == "Q" else self.Y(sym.index, z)

    def eval(self, poly, u: complex) -> complex:
        total = 0j
        for m, c in poly.terms.items():
            term = complex(c)
            for sid, e in m:
                term *= self.symbol(sid, u) ** e
            total += term
        return total


def rel(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale
