"""Difference operators sum_a c_a(u) D^a with D f(u) = f(u+2) D.

Builds the factorized L operators, reads off the T-functions, and checks the
exact identities they satisfy (T-T, T-Q, duality, the A2 rewrite and the
D3_4 structural lemmas).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .laurent import ONE, ZERO_POLY, LaurentPoly, power_product, product, resolve_conventions, y_to_q
from .reports import CheckReport, timed
from .rootdata import AlgebraSpec
from .shifts import ZERO, Shift, theta_zero_active
from .variables import ZERO_LABEL, bar, plain, x_var, z_var

DEFAULT_CUTOFF = 8
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class TruncationError(ValueError):
    """Requested a coefficient beyond the series cutoff."""


class DiffOperator:
    """Graded operator; ``bound`` is None when exact, else the cutoff degree."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs: dict[int, LaurentPoly] | None = None, bound: int | None = None):
        self.bound = bound
        self.coeffs = {
            a: c for a, c in (coeffs or {}).items()
            if not c.is_zero() and (bound is None or a <= bound)
        }

    @classmethod
    def one(cls, bound: int | None = None) -> DiffOperator:
        return cls({0: ONE}, bound)

    @classmethod
    def monomial(cls, c: LaurentPoly, degree: int, bound: int | None = None) -> DiffOperator:
        return cls({degree: c}, bound)

    @classmethod
    def one_minus(cls, c: LaurentPoly, degree: int = 1, bound: int | None = None) -> DiffOperator:
        """1 - c(u) D^degree."""
        return cls({0: ONE, degree: -c}, bound)

    @property
    def exact(self) -> bool:
        return self.bound is None

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def coeff(self, a: int) -> LaurentPoly:
        if self.bound is not None and a > self.bound:
            raise TruncationError(f"degree {a} beyond cutoff {self.bound}")
        return self.coeffs.get(a, ZERO_POLY)

    def truncate(self, K: int | None) -> DiffOperator:
        if K is None:
            return self
        bound = K if self.bound is None else min(K, self.bound)
        return DiffOperator(self.coeffs, bound)

    def _bound_with(self, other: DiffOperator) -> int | None:
        bounds = [b for b in (self.bound, other.bound) if b is not None]
        return min(bounds) if bounds else None

    def __add__(self, other: DiffOperator) -> DiffOperator:
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, ZERO_POLY) + c
        return DiffOperator(out, self._bound_with(other))

    def __neg__(self) -> DiffOperator:
        return DiffOperator({a: -c for a, c in self.coeffs.items()}, self.bound)

    def __sub__(self, other: DiffOperator) -> DiffOperator:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return DiffOperator({a: c * other for a, c in self.coeffs.items()}, self.bound)
        bound = self._bound_with(other)
        out: dict[int, LaurentPoly] = {}
        for a, c in self.coeffs.items():
            for b, d in other.coeffs.items():
                if bound is not None and a + b > bound:
                    continue
                term = c * d.shift_all(Shift(2 * a))
                out[a + b] = out.get(a + b, ZERO_POLY) + term
        return DiffOperator(out, bound)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.coeffs == other.coeffs and self.bound == other.bound

    def __repr__(self):
        body = " + ".join(f"({c})D^{a}" for a, c in sorted(self.coeffs.items())) or "0"
        tail = "" if self.bound is None else f" + O(D^{self.bound + 1})"
        return f"DiffOperator({body}{tail})"


def dop_mul(A: DiffOperator, B: DiffOperator) -> DiffOperator:
    return A * B


def ordered_product(factors, bound: int | None = None) -> DiffOperator:
    out = DiffOperator.one(bound)
    for f in factors:
        out = out * f
    return out


def geometric_inverse(c: LaurentPoly, K: int) -> DiffOperator:
    """(1 - c(u) D^2)^{-1} up to degree K."""
    if K < 0:
        raise ValueError("cutoff must be non-negative")
    coeffs = {0: ONE}
    acc = ONE
    for j in range(1, K // 2 + 1):
        acc = acc * c.shift_all(Shift(4 * (j - 1)))
        coeffs[2 * j] = acc
    return DiffOperator(coeffs, K)


def build_L(spec: AlgebraSpec, K: int = DEFAULT_CUTOFF) -> DiffOperator:
    """The factorized L operator; exact for A2, truncated at K otherwise."""
    if K < 0:
        raise ValueError("cutoff must be non-negative")
    return _build_L(spec, None if spec.is_a2 else K, theta_zero_active())


@lru_cache(maxsize=None)
def _build_L(spec, K, _theta) -> DiffOperator:
    n = spec.n
    if spec.kind == "A2_even":
        left = [DiffOperator.one_minus(z_var(spec, bar(a))) for a in range(1, n + 1)]
        middle = [DiffOperator.one_minus(z_var(spec, ZERO_LABEL))]
        right = [DiffOperator.one_minus(z_var(spec, plain(a))) for a in range(n, 0, -1)]
        return ordered_product(left + middle + right)
    if spec.kind == "A2_odd":
        left = [DiffOperator.one_minus(z_var(spec, bar(a))) for a in range(1, n + 1)]
        right = [DiffOperator.one_minus(z_var(spec, plain(a))) for a in range(n, 0, -1)]
        return ordered_product(left + right)
    top = n + 1 if spec.kind == "D2" else 4
    left = [DiffOperator.one_minus(z_var(spec, bar(a)), bound=K) for a in range(1, top + 1)]
    right = [DiffOperator.one_minus(z_var(spec, plain(a)), bound=K) for a in range(top, 0, -1)]
    c = z_var(spec, plain(top)) * z_var(spec, bar(top), Shift(2))
    return ordered_product(left + [geometric_inverse(c, K)] + right, K)


def _require_a2(spec: AlgebraSpec) -> None:
    if not spec.is_a2:
        raise ValueError(f"only defined for A2 algebras, not {spec.kind}")


def _y_arg(spec: AlgebraSpec, b: int) -> Shift:
    return Shift(spec.N + 1 - 2 * b, HALF)


def build_L_rewritten_A2(spec: AlgebraSpec) -> DiffOperator:
    """prod_{a=1}^{N+1} (x_a(u+N+1-2a+t/2) - D), left to right."""
    _require_a2(spec)
    factors = [
        DiffOperator({0: x_var(spec, a, _y_arg(spec, a)), 1: LaurentPoly.const(-1)})
        for a in range(1, spec.N + 2)
    ]
    return ordered_product(factors)


def build_L_a(spec: AlgebraSpec, a: int) -> DiffOperator:
    """prod_{b=N+2-a}^{N+1} (D - x_b(u+N+1-2b+t/2)), left to right."""
    _require_a2(spec)
    if not 1 <= a <= spec.N + 1:
        raise ValueError(f"a must lie in 1..{spec.N + 1}")
    factors = [
        DiffOperator({0: -x_var(spec, b, _y_arg(spec, b)), 1: ONE})
        for b in range(spec.N + 2 - a, spec.N + 2)
    ]
    return ordered_product(factors)


@dataclass
class TTable:
    """Upper T^a(u) from the expansion of L and lower T_m(u) from its inverse."""
    spec: AlgebraSpec
    upper: dict[int, LaurentPoly]
    cutoff: int | None = None
    lower: dict[int, LaurentPoly] = field(default_factory=lambda: {0: ONE})

    def T(self, a: int, s: Shift = ZERO) -> LaurentPoly:
        """T^a(u+s)."""
        if a < 0:
            return ZERO_POLY
        if self.cutoff is not None and a > self.cutoff:
            raise TruncationError(f"T^{a} needs cutoff >= {a} (have {self.cutoff})")
        return self.upper.get(a, ZERO_POLY).shift_all(s)

    def Tl(self, m: int, s: Shift = ZERO) -> LaurentPoly:
        """T_m(u+s), solving for the lower table on demand."""
        if m < 0:
            return ZERO_POLY
        if m not in self.lower:
            self.lower.update(solve_lower(self.spec, self, m, self.lower))
        return self.lower[m].shift_all(s)

    @property
    def max_upper(self) -> int:
        return self.cutoff if self.cutoff is not None else self.spec.N + 1


def extract_T(spec: AlgebraSpec, L: DiffOperator) -> TTable:
    upper = {}
    top = L.bound if L.bound is not None else L.degree
    for a in range(top + 1):
        c = L.coeff(a)
        if not c.is_zero():
            upper[a] = (c * (-1) ** a).shift_all(Shift(-a))
    return TTable(spec, upper, L.bound)


def t_table(spec: AlgebraSpec, K: int = DEFAULT_CUTOFF) -> TTable:
    return _t_table(spec, None if spec.is_a2 else K, theta_zero_active())


@lru_cache(maxsize=None)
def _t_table(spec, K, _theta) -> TTable:
    return extract_T(spec, build_L(spec, DEFAULT_CUTOFF if K is None else K))


def solve_lower(spec: AlgebraSpec, table: TTable, m_max: int, known: dict | None = None) -> dict[int, LaurentPoly]:
    """T_m(u) for m <= m_max from the left-inverse relation.

    T_m(u) = sum_{a=1}^m (-1)^{a+1} T_{m-a}(u+a) T^a(u+a-m).
    """
    lower = dict(known or {0: ONE})
    lower[0] = ONE
    for m in range(1, m_max + 1):
        if m in lower:
            continue
        acc = ZERO_POLY
        for a in range(1, m + 1):
            Ta = table.T(a, Shift(a - m))
            if Ta.is_zero():
                continue
            term = lower[m - a].shift_all(Shift(a)) * Ta
            acc = acc + (term if a % 2 else -term)
        lower[m] = acc
    return lower


def check_TT1(spec: AlgebraSpec, table: TTable, m_max: int) -> CheckReport:
    report = CheckReport("TT-1", {**spec.as_record(), "m_max": m_max})
    with timed(report):
        for m in range(m_max + 1):
            acc = ZERO_POLY
            for a in range(m + 1):
                term = table.Tl(m - a, Shift(m + a)) * table.T(a, Shift(a))
                acc = acc + (-term if a % 2 else term)
            report.add_exact(f"m={m}", acc - (1 if m == 0 else 0))
    return report


def check_TT2(spec: AlgebraSpec, table: TTable, m_max: int) -> CheckReport:
    """sum_a (-1)^a T_{m-a}(u-m-a) T^a(u-a) = delta_{m0}."""
    report = CheckReport("TT-2", {**spec.as_record(), "m_max": m_max, "cutoff": table.cutoff})
    with timed(report):
        for m in range(m_max + 1):
            acc = ZERO_POLY
            for a in range(m + 1):
                term = table.Tl(m - a, Shift(-m - a)) * table.T(a, Shift(-a))
                acc = acc + (-term if a % 2 else term)
            report.add_exact(f"m={m}", acc - (1 if m == 0 else 0))
    return report


def apply_operator(L: DiffOperator, f: LaurentPoly) -> LaurentPoly:
    """(L f)(u) for a Q-polynomial f; L must be exact."""
    if not L.exact:
        raise TruncationError("cannot apply a truncated operator and assert an exact result")
    acc = ZERO_POLY
    for a, c in L.coeffs.items():
        acc = acc + y_to_q(c) * f.shift_all(Shift(2 * a))
    return acc


def check_TQ(spec: AlgebraSpec, table: TTable | None = None) -> CheckReport:
    """L Q_1^{r_1} = 0 and the T-Q relation in both directions (A2 only)."""
    _require_a2(spec)
    table = table or t_table(spec)
    report = CheckReport("TQ", {**spec.as_record(), "theta_zero": theta_zero_active()})
    with timed(report):
        Q1 = power_product(spec, "Q", 1, spec.r_a(1))
        report.add_exact("L Q_1^{r_1} = 0", apply_operator(build_L(spec), Q1))
        tq1 = ZERO_POLY
        for a in range(spec.N + 2):
            term = y_to_q(table.T(a, Shift(a))) * Q1.shift_all(Shift(2 * a))
            tq1 = tq1 + (-term if a % 2 else term)
        report.add_exact("TQ-1", tq1)
        report.merge(check_TQ_dualized(spec, table))
    return report


def check_TQ_dualized(spec: AlgebraSpec, table: TTable) -> CheckReport:
    """sum_a (-1)^a T^a(u-a) Q_1(u-2a+g+t/2) = 0."""
    _require_a2(spec)
    report = CheckReport("TQ-2", spec.as_record())
    with timed(report):
        acc = ZERO_POLY
        for a in range(spec.N + 2):
            term = y_to_q(table.T(a, Shift(-a))) * resolve_conventions(
                spec, "Q", 1, Shift(-2 * a + spec.g, HALF))
            acc = acc + (-term if a % 2 else term)
        report.add_exact("TQ-2", acc)
    return report


def check_duality(spec: AlgebraSpec, table: TTable | None = None) -> CheckReport:
    """T^a(u) = T^{N+1-a}(u + t/2) for every a."""
    _require_a2(spec)
    table = table or t_table(spec)
    report = CheckReport("duality", spec.as_record())
    with timed(report):
        for a in range(-1, spec.N + 3):
            report.add_exact(f"a={a}", table.T(a) - table.T(spec.N + 1 - a, Shift(0, HALF)))
    return report


def check_expansion(spec: AlgebraSpec, K: int = DEFAULT_CUTOFF) -> CheckReport:
    """Degree, boundary values and term structure of the expansion."""
    report = CheckReport("expansion", {**spec.as_record(), "cutoff": None if spec.is_a2 else K})
    with timed(report):
        L = build_L(spec, K)
        table = t_table(spec, K)
        report.add_exact("T^0 = 1", table.T(0) - 1)
        if spec.is_a2:
            report.add("exact operator", L.exact)
            report.add("degree N+1", L.degree == spec.N + 1, L.degree)
            report.add_exact("T^{N+1} = 1", table.T(spec.N + 1) - 1)
            report.add("T^a = 0 for a > N+1", all(a <= spec.N + 1 for a in L.coeffs))
            report.add_exact("rewrite lemma", _operator_residual(build_L_rewritten_A2(spec), L))
            sign = (-1) ** (spec.N + 1)
            report.add_exact("L_{N+1} = (-1)^{N+1} L", _operator_residual(build_L_a(spec, spec.N + 1), L * sign))
    return report


def _operator_residual(A: DiffOperator, B: DiffOperator) -> LaurentPoly:
    """Sum of squared coefficient differences is not available over Z; pick the
    first nonzero difference instead (zero polynomial when A == B)."""
    K = [b for b in (A.bound, B.bound) if b is not None]
    top = min(K) if K else max(A.degree, B.degree)
    for a in range(top + 1):
        diff = A.coeff(a) - B.coeff(a)
        if not diff.is_zero():
            return diff
    return ZERO_POLY


# D3_4 structural lemmas --------------------------------------------------

def d34_function(name: str, base: Shift = ZERO) -> LaurentPoly:
    """H_1, H_2, K_1, K_2 of the D3_4 lemmas at u+base."""
    from .rootdata import make_algebra

    spec = make_algebra("D3_4", 2)

    def Y1(p):
        return resolve_conventions(spec, "Y", 1, base + Shift(p))

    def Y13(p):
        return power_product(spec, "Y", 1, 3, base + Shift(p))

    def Y23(p):
        return power_product(spec, "Y", 2, 3, base + Shift(p))

    if name == "H1":
        return Y1(0) + Y23(1) * Y1(2).inverse()
    if name == "H2":
        return Y23(0) + Y13(1) * Y23(2).inverse()
    if name == "K1":
        return Y1(0).inverse() + Y1(-2) * Y23(-1).inverse()
    if name == "K2":
        return Y23(0).inverse() + Y23(-2) * Y13(-1).inverse()
    raise ValueError(f"unknown function {name!r}")


def d34_rewritten_L(K: int) -> DiffOperator:
    H1, K1 = (lambda p, q=0: d34_function("H1", Shift(p, q))), (lambda p, q=0: d34_function("K1", Shift(p, q)))
    from .rootdata import make_algebra

    spec = make_algebra("D3_4", 2)

    def Y23(p):
        return power_product(spec, "Y", 2, 3, Shift(p))

    left = DiffOperator({0: ONE, 1: -K1(7), 2: Y23(8).inverse()}, K)
    right = DiffOperator({0: ONE, 1: -H1(1), 2: Y23(2)}, K)
    middle = {0: ONE}
    for j in range(K // 2 + 1):
        A = K1(4 * j + 5, THIRD) * H1(3, -THIRD)
        if j:
            A = A + K1(4 * j + 5, -THIRD) * H1(3, THIRD)
        B = K1(4 * j + 7, THIRD) * H1(3, THIRD) + K1(4 * j + 7, -THIRD) * H1(3, -THIRD)
        if j == 0:
            B = B - Y23(4) * Y23(6).inverse()
        middle[2 * j + 1] = -A
        middle[2 * j + 2] = B
    return ordered_product([left, DiffOperator(middle, K), right], K)


def check_d34_lemmas(K: int = DEFAULT_CUTOFF) -> CheckReport:
    from .rootdata import make_algebra

    if K < 4:
        raise ValueError("D3_4 lemma check needs cutoff >= 4")
    spec = make_algebra("D3_4", 2)
    report = CheckReport("d34", {**spec.as_record(), "cutoff": K})
    with timed(report):
        L = build_L(spec, K)
        R = d34_rewritten_L(K)
        for a in range(K + 1):
            report.add_exact(f"rewrite degree {a}", R.coeff(a) - L.coeff(a))

        def Y1(p):
            return resolve_conventions(spec, "Y", 1, Shift(p))

        def Y13(p):
            return power_product(spec, "Y", 1, 3, Shift(p))

        bars = DiffOperator.one_minus(z_var(spec, bar(2))) * DiffOperator.one_minus(z_var(spec, bar(3)))
        expected = DiffOperator({
            0: ONE,
            1: -Y1(5) * d34_function("K2", Shift(6)),
            2: Y1(5) * Y1(7) * Y13(7).inverse(),
        })
        report.add_exact("Y2-part (bar)", _operator_residual(bars, expected))
        plains = DiffOperator.one_minus(z_var(spec, plain(3))) * DiffOperator.one_minus(z_var(spec, plain(2)))
        expected = DiffOperator({
            0: ONE,
            1: -d34_function("H2", Shift(2)) * Y1(3).inverse(),
            2: Y13(3) * (Y1(3) * Y1(5)).inverse(),
        })
        report.add_exact("Y2-part (plain)", _operator_residual(plains, expected))
    return report
