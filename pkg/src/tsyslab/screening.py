"""Screening derivations S_a on the Y-ring and the formal solution S_a(u)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .diffop import DEFAULT_CUTOFF, d34_function, t_table
from .laurent import ONE, ZERO_POLY, LaurentPoly, _mono_mul, power_product, resolve_conventions, symbol_of, y_to_q
from .reports import CheckReport, timed
from .rootdata import AlgebraSpec, make_algebra
from .shifts import ZERO, Shift, theta_zero_active


def _K(spec: AlgebraSpec, a: int, b: int, s: Shift) -> LaurentPoly:
    I = spec.incidence(a, b)
    if I == 0:
        return ONE
    if I == 1:
        return power_product(spec, "Q", b, spec.r_ab(a, b), s)
    if I == 2:
        offsets = (Fraction(-1, 2), Fraction(1, 2))
    elif I == 3:
        offsets = (Fraction(-2, 3), Fraction(0), Fraction(2, 3))
    else:
        raise ValueError(f"unsupported incidence {I}")
    out = ONE
    for o in offsets:
        out = out * resolve_conventions(spec, "Q", b, s + Shift(o))
    return out


def formal_S(spec: AlgebraSpec, a: int, s: Shift = ZERO) -> LaurentPoly:
    """S_a(u+s) = prod_b K_ab(u+s) / (Q_a^{r_a}(u+s-1) Q_a^{r_a}(u+s+1))."""
    if a not in spec.orbits:
        raise IndexError(f"screening index {a} outside 1..{spec.n}")
    return _formal_S(spec, a, s, theta_zero_active())


@lru_cache(maxsize=None)
def _formal_S(spec, a, s, _theta) -> LaurentPoly:
    num = ONE
    for b in range(1, spec.n_prime + 1):
        num = num * _K(spec, a, b, s)
    ra = spec.r_a(a)
    den = power_product(spec, "Q", a, ra, s - Shift(1)) * power_product(spec, "Q", a, ra, s + Shift(1))
    return num * den.inverse()


def A_factor(spec: AlgebraSpec, a: int, s: Shift = ZERO) -> LaurentPoly:
    """A_a(u+s) = prod_b Q_b^{r_ab}(u+s-(a|b)) / Q_b^{r_ab}(u+s+(a|b))."""
    out = ONE
    for b in range(1, spec.n_prime + 1):
        p = spec.pairing(a, b)
        if p == 0:
            continue
        k = spec.r_ab(a, b)
        out = out * power_product(spec, "Q", b, k, s - Shift(p)) * power_product(spec, "Q", b, k, s + Shift(p)).inverse()
    return out


def check_S_functional(spec: AlgebraSpec, a: int | None = None) -> CheckReport:
    report = CheckReport("S functional equation", spec.as_record())
    with timed(report):
        for b in ([a] if a else spec.orbits):
            lhs = formal_S(spec, b, Shift(2))
            rhs = A_factor(spec, b, Shift(1)) * formal_S(spec, b)
            report.add_exact(f"a={b}", lhs - rhs)
    return report


def apply_screening(spec: AlgebraSpec, a: int, p: LaurentPoly) -> LaurentPoly:
    """Apply the derivation S_a to a Y-polynomial; the result is a Q-polynomial."""
    out: dict = {}
    for m, c in p.terms.items():
        image = None
        for sid, e in m:
            sym = symbol_of(sid)
            if sym.family != "Y" or sym.index != a:
                continue
            if image is None:
                (image, _), = y_to_q(LaurentPoly({m: 1})).terms.items()
            (sm, sc), = formal_S(spec, a, sym.shift).terms.items()
            key = _mono_mul(image, sm)
            out[key] = out.get(key, 0) + c * e * sc
    return LaurentPoly(out)


def check_screening_annihilation(spec: AlgebraSpec, a: int | None = None,
                                 K: int = DEFAULT_CUTOFF, b_max: int | None = None) -> CheckReport:
    """S_a T^b = 0 for b <= b_max (default: N+1 for A2, 6 otherwise, capped by K)."""
    if b_max is None:
        b_max = spec.N + 1 if spec.is_a2 else min(6, K)
    report = CheckReport("screening", {**spec.as_record(), "cutoff": None if spec.is_a2 else K, "b_max": b_max})
    with timed(report):
        table = t_table(spec, K)
        for aa in ([a] if a else spec.orbits):
            for b in range(b_max + 1):
                report.add_exact(f"a={aa} b={b}", apply_screening(spec, aa, table.T(b)))
    return report


def check_HK_annihilation() -> CheckReport:
    spec = make_algebra("D3_4", 2)
    report = CheckReport("D3_4 H/K annihilation", spec.as_record())
    with timed(report):
        for a in (1, 2):
            for name in (f"H{a}", f"K{a}"):
                report.add_exact(f"S_{a} {name}", apply_screening(spec, a, d34_function(name)))
    return report
