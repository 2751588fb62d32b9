"""Jacobi-Trudi determinants, skew tableaux sums and the A2 T-system."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .diffop import TTable, t_table
from .laurent import ONE, ZERO_POLY, LaurentPoly
from .reports import CheckReport, timed
from .rootdata import AlgebraSpec
from .shifts import ZERO, Shift, theta_zero_active
from .variables import x_var

HALF = Fraction(1, 2)

# Semi-standard rule on the skew diagram, in the upward-row chart: entries
# weakly increase left to right and strictly decrease going up a column
# (strictly increase downward).  Fixed by agreement with the determinant side.
TABLEAU_CONVENTION = "strict-down"


def _require_a2(spec: AlgebraSpec) -> None:
    if not spec.is_a2:
        raise ValueError(f"only defined for A2 algebras, not {spec.kind}")


def det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Division-free determinant by Laplace expansion with subset memoization."""
    m = len(matrix)
    if m == 0:
        return ONE
    memo: dict[int, LaurentPoly] = {}

    def minor(row: int, cols: int) -> LaurentPoly:
        # determinant of rows row..m-1 against the column set ``cols``
        if row == m:
            return ONE
        if cols in memo:
            return memo[cols]
        acc = ZERO_POLY
        sign = 1
        for c in range(m):
            if not cols >> c & 1:
                continue
            entry = matrix[row][c]
            if not entry.is_zero():
                sub = minor(row + 1, cols & ~(1 << c))
                if not sub.is_zero():
                    term = entry * sub
                    acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(0, (1 << m) - 1)


def script_T(spec: AlgebraSpec, a: int, s: Shift = ZERO, table: TTable | None = None) -> LaurentPoly:
    """The entry function of the Jacobi-Trudi determinant, by its boundary table."""
    _require_a2(spec)
    table = table or t_table(spec)
    N, n = spec.N, spec.n
    if a < 0 or a > N + 1:
        return ZERO_POLY
    if a in (0, N + 1):
        return ONE
    if a <= n:
        return table.T(a, s)
    return table.T(N - a + 1, s + Shift(0, HALF))


def jacobi_trudi(spec: AlgebraSpec, a: int, m: int, s: Shift = ZERO, table: TTable | None = None) -> LaurentPoly:
    """T^{(a)}_m(u+s) = det_{j,k} script_T^{a-j+k}(u+s+j+k-m-1)."""
    _require_a2(spec)
    if m < 0:
        return ZERO_POLY
    if table is None:
        return _jacobi_trudi(spec, a, m, theta_zero_active()).shift_all(s)
    return _jt(spec, a, m, table).shift_all(s)


def _jt(spec, a, m, table):
    matrix = [
        [script_T(spec, a - j + k, Shift(j + k - m - 1), table) for k in range(1, m + 1)]
        for j in range(1, m + 1)
    ]
    return det(matrix)


@lru_cache(maxsize=None)
def _jacobi_trudi(spec, a, m, _theta):
    return _jt(spec, a, m, t_table(spec))


@dataclass(frozen=True)
class YoungData:
    """Index set 0 = i_0 < ... < i_N and the skew diagram (mu_1^{N+1})/mu."""
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if not idx or idx[0] != 0:
            raise ValueError("indices must start at 0")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")

    @property
    def N(self) -> int:
        return len(self.indices) - 1

    @property
    def mu(self) -> tuple[int, ...]:
        N, i = self.N, self.indices
        return tuple(i[N + 1 - k] + k - N - 1 for k in range(1, N + 2))

    @property
    def mu_conj(self) -> tuple[int, ...]:
        mu = self.mu
        return tuple(sum(1 for part in mu if part >= c) for c in range(1, mu[0] + 1))

    @property
    def cells(self) -> list[tuple[int, int]]:
        """(j, k) with j counted upward from the bottom row and (1,1) bottom-left."""
        mu, N = self.mu, self.N
        out = []
        for r in range(1, N + 2):
            j = N + 2 - r
            out.extend((j, k) for k in range(mu[r - 1] + 1, mu[0] + 1))
        return sorted(out)

    @classmethod
    def rectangle(cls, N: int, a: int, m: int) -> YoungData:
        """Index set (0..a-1, a+m..N+m) whose skew diagram is an a x m rectangle."""
        return cls(tuple(range(a)) + tuple(range(a + m, N + m + 1)))

    @classmethod
    def column(cls, N: int, a: int) -> YoungData:
        """Index set (0..a-1, a+1..N+1)."""
        return cls.rectangle(N, a, 1)


def tableaux(data: YoungData, size: int, convention: str = TABLEAU_CONVENTION) -> Iterator[dict]:
    """Semi-standard fillings of the skew cells with entries 1..size."""
    cells = data.cells
    # fill bottom-up, left to right so that left and lower neighbours are known
    order = sorted(cells)
    cellset = set(cells)
    filling: dict[tuple[int, int], int] = {}

    def bounds(j, k):
        lo, hi = 1, size
        left, below = (j, k - 1), (j - 1, k)
        if convention == "strict-down":
            if left in cellset:
                lo = max(lo, filling[left])
            if below in cellset:
                hi = min(hi, filling[below] - 1)
        elif convention == "strict-up":
            if left in cellset:
                lo = max(lo, filling[left])
            if below in cellset:
                lo = max(lo, filling[below] + 1)
        elif convention == "strict-rows":
            if left in cellset:
                lo = max(lo, filling[left] + 1)
            if below in cellset:
                hi = min(hi, filling[below])
        else:
            raise ValueError(f"unknown convention {convention!r}")
        return lo, hi

    def rec(i):
        if i == len(order):
            yield dict(filling)
            return
        cell = order[i]
        lo, hi = bounds(*cell)
        for v in range(lo, hi + 1):
            filling[cell] = v
            yield from rec(i + 1)
        filling.pop(cell, None)

    yield from rec(0)


def tableaux_sum(spec: AlgebraSpec, data: YoungData, s: Shift = ZERO,
                 convention: str = TABLEAU_CONVENTION) -> tuple[LaurentPoly, int]:
    """sum_b prod_{(j,k)} x_{b(j,k)}(u+s+2j+2k-4); returns (polynomial, tableau count)."""
    _require_a2(spec)
    if data.N != spec.N:
        raise ValueError(f"index set has N={data.N}, algebra has N={spec.N}")
    out: dict = {}
    count = 0
    for b in tableaux(data, spec.N + 1, convention):
        count += 1
        term = ONE
        for (j, k), v in b.items():
            term = term * x_var(spec, v, s + Shift(2 * j + 2 * k - 4))
        (m, c), = term.terms.items()
        out[m] = out.get(m, 0) + c
    return LaurentPoly(out), count


def skew_determinant(spec: AlgebraSpec, data: YoungData, s: Shift = ZERO,
                      table: TTable | None = None) -> LaurentPoly:
    """det_{j,k<=mu_1} T^{mu'_j-j+k}(u+s+N-1+j+k-mu'_j+t/2)."""
    _require_a2(spec)
    table = table or t_table(spec)
    mc = data.mu_conj
    size = len(mc)
    N = spec.N
    matrix = [
        [table.T(mc[j - 1] - j + k, s + Shift(N - 1 + j + k - mc[j - 1], HALF)) if 0 <= mc[j - 1] - j + k <= N + 1
         else ZERO_POLY for k in range(1, size + 1)]
        for j in range(1, size + 1)
    ]
    return det(matrix)


def tsystem_terms(spec: AlgebraSpec, a: int, m: int, T: Callable[[int, int, Shift], object]):
    """(lhs, first, second) products of the T-system at (a, m).

    ``T(a, m, shift)`` supplies T^{(a)}_m(u+shift) in any ring.
    """
    n = spec.n
    lhs = (T(a, m, Shift(-1)), T(a, m, Shift(1)))
    first = (T(a, m - 1, ZERO), T(a, m + 1, ZERO))
    if a < n:
        second = (T(a - 1, m, ZERO), T(a + 1, m, ZERO))
    elif spec.kind == "A2_even":
        second = (T(n - 1, m, ZERO), T(n, m, Shift(0, HALF)))
    else:
        second = (T(n - 1, m, ZERO), T(n - 1, m, Shift(0, HALF)))
    return lhs, first, second


def check_tsystem_symbolic(spec: AlgebraSpec, a_max: int | None = None, m_max: int = 2) -> CheckReport:
    _require_a2(spec)
    a_max = min(a_max or spec.n, spec.n)
    report = CheckReport("tsystem", {**spec.as_record(), "a_max": a_max, "m_max": m_max,
                                     "theta_zero": theta_zero_active()})

    def T(a, m, s):
        return jacobi_trudi(spec, a, m, s)

    with timed(report):
        for a in range(1, a_max + 1):
            for m in range(1, m_max + 1):
                (l1, l2), (f1, f2), (s1, s2) = tsystem_terms(spec, a, m, T)
                report.add_exact(f"a={a} m={m}", l1 * l2 - f1 * f2 - s1 * s2)
    return report


def check_script_T(spec: AlgebraSpec, table: TTable | None = None) -> CheckReport:
    """The boundary table of script_T agrees with T^a(u) for every a."""
    table = table or t_table(spec)
    report = CheckReport("script T", spec.as_record())
    with timed(report):
        for a in range(-1, spec.N + 3):
            report.add_exact(f"a={a}", script_T(spec, a, ZERO, table) - table.T(a))
    return report


def check_tableaux(spec: AlgebraSpec, a_max: int | None = None, m_max: int = 3) -> CheckReport:
    """Rectangular tableaux sums against Jacobi-Trudi, and the column case against T^a."""
    _require_a2(spec)
    a_max = min(a_max or spec.n, spec.n)
    table = t_table(spec)
    report = CheckReport("tableaux", {**spec.as_record(), "a_max": a_max, "m_max": m_max})
    with timed(report):
        for a in range(1, spec.N + 2):
            col, _ = tableaux_sum(spec, YoungData.column(spec.N, a))
            report.add_exact(f"column a={a} vs T^a(u+a)", col - table.T(a, Shift(a)))
        for a in range(1, a_max + 1):
            for m in range(1, m_max + 1):
                data = YoungData.rectangle(spec.N, a, m)
                tab, _ = tableaux_sum(spec, data, Shift(-a - m + 1))
                report.add_exact(f"a={a} m={m} tableaux vs JT", tab - jacobi_trudi(spec, a, m))
                det_form = skew_determinant(spec, data, Shift(-a - m + 1), table)
                report.add_exact(f"a={a} m={m} det vs JT", det_form - jacobi_trudi(spec, a, m))
    return report
