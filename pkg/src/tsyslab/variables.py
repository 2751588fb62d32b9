"""The z- and x-variables of each algebra as Y-monomials at a base shift."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .laurent import ONE, LaurentPoly, power_product, resolve_conventions
from .rootdata import AlgebraSpec
from .shifts import ZERO, Shift, theta_zero_active

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class VariableLabel(NamedTuple):
    """``tag`` is 'plain', 'bar' or 'zero'; ``a`` is unused for 'zero'."""
    tag: str
    a: int = 0

    def __str__(self):
        return {"plain": f"z{self.a}", "bar": f"z{self.a}bar", "zero": "z0"}[self.tag]


def plain(a: int) -> VariableLabel:
    return VariableLabel("plain", a)


def bar(a: int) -> VariableLabel:
    return VariableLabel("bar", a)


ZERO_LABEL = VariableLabel("zero")


class LabelError(ValueError):
    pass


def labels(spec: AlgebraSpec) -> list[VariableLabel]:
    """All labels valid for ``spec``."""
    if spec.kind == "A2_even":
        return [plain(a) for a in range(1, spec.n + 1)] + [ZERO_LABEL] + [bar(a) for a in range(1, spec.n + 1)]
    top = {"A2_odd": spec.n, "D2": spec.n + 1, "D3_4": 4}[spec.kind]
    return [plain(a) for a in range(1, top + 1)] + [bar(a) for a in range(1, top + 1)]


def z_var(spec: AlgebraSpec, label: VariableLabel, base: Shift = ZERO) -> LaurentPoly:
    if label not in labels(spec):
        raise LabelError(f"label {label} is not defined for {spec.kind} n={spec.n}")
    return _z_var(spec, label, base, theta_zero_active())


@lru_cache(maxsize=None)
def _z_var(spec, label, base, _theta) -> LaurentPoly:
    n = spec.n

    def Y(a, p, q=0):
        return resolve_conventions(spec, "Y", a, base + Shift(p, q))

    def Yk(a, k, p, q=0):
        if a == 0:
            return ONE
        return power_product(spec, "Y", a, k, base + Shift(p, q))

    tag, a = label
    if spec.kind == "A2_even":
        if tag == "plain":
            return Y(a, a) * Y(a - 1, a + 1).inverse()
        if tag == "zero":
            return Y(n, n + 1, HALF) * Y(n, n + 2).inverse()
        return Y(a - 1, 2 * n - a + 2, HALF) * Y(a, 2 * n - a + 3, HALF).inverse()

    if spec.kind == "A2_odd":
        if tag == "plain":
            if a == n:
                return Yk(n, 2, n) * Y(n - 1, n + 1).inverse()
            return Y(a, a) * Y(a - 1, a + 1).inverse()
        if a == n:
            return Y(n - 1, n + 1, HALF) * Yk(n, 2, n + 2).inverse()
        return Y(a - 1, 2 * n - a + 1, HALF) * Y(a, 2 * n - a + 2, HALF).inverse()

    if spec.kind == "D2":
        if tag == "plain":
            if a == n + 1:
                return Y(n, n, HALF) * Y(n, n + 2).inverse()
            return Yk(a, 2, a) * Yk(a - 1, 2, a + 1).inverse()
        if a == n + 1:
            return Y(n, n) * Y(n, n + 2, HALF).inverse()
        return Yk(a - 1, 2, 2 * n - a + 1) * Yk(a, 2, 2 * n - a + 2).inverse()

    # D3_4
    if tag == "plain":
        if a == 1:
            return Y(1, 1)
        if a == 2:
            return Yk(2, 3, 2) * Y(1, 3).inverse()
        if a == 3:
            return Yk(1, 3, 3) * (Y(1, 3) * Yk(2, 3, 4)).inverse()
        return Y(1, 3, -THIRD) * Y(1, 5, THIRD).inverse()
    if a == 4:
        return Y(1, 3, THIRD) * Y(1, 5, -THIRD).inverse()
    if a == 3:
        return Y(1, 5) * Yk(2, 3, 4) * Yk(1, 3, 5).inverse()
    if a == 2:
        return Y(1, 5) * Yk(2, 3, 6).inverse()
    return Y(1, 7).inverse()


def x_label(spec: AlgebraSpec, i: int) -> VariableLabel:
    """The z-label behind position ``i`` of the linear x-ordering (A2 only)."""
    if not spec.is_a2:
        raise LabelError(f"x-variables are defined only for A2 algebras, not {spec.kind}")
    n = spec.n
    if not 1 <= i <= spec.N + 1:
        raise LabelError(f"x-position {i} outside 1..{spec.N + 1}")
    if i <= n:
        return plain(i)
    if spec.kind == "A2_even":
        return ZERO_LABEL if i == n + 1 else bar(2 * n - i + 2)
    return bar(2 * n - i + 1)


def x_var(spec: AlgebraSpec, i: int, base: Shift = ZERO) -> LaurentPoly:
    return z_var(spec, x_label(spec, i), base)


def top_term(spec: AlgebraSpec, a: int, base: Shift = ZERO) -> LaurentPoly:
    """prod_{k=1}^a z_k(u + a - 2k)."""
    out = ONE
    for k in range(1, a + 1):
        out = out * z_var(spec, plain(k), base + Shift(a - 2 * k))
    return out
