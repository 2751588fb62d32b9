"""Numeric specialization of the Q-functions and Casorati determinants.

Q_a(u) = prod_k sinh(hbar (u - u_k)) is exactly quasi-periodic with
h_a = (-1)^{M_a}.  A filtered basis of L(u) w = 0 is built on a step-2
lattice by a cascade of first-order recursions; ratios of its Casorati
determinants reproduce T^a, the Jacobi-Trudi determinants and the T-system.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .diffop import TTable, build_L, t_table
from .laurent import LaurentPoly, symbol_of
from .reports import CheckReport, timed
from .rootdata import AlgebraSpec
from .shifts import ZERO, Shift
from .tsystem import YoungData, jacobi_trudi, skew_determinant, tableaux_sum, tsystem_terms
from .variables import x_var

HALF = Fraction(1, 2)
TOL = 1e-8
PRECISIONS = {"double": 15, "high": 30}
POLE_TOL = 1e-8
ROOT_TOL = 1e-6
MAX_RESEEDS = 10
# The filtered basis is intrinsically ill-conditioned: sub-dominant modes carry
# amplitudes ~ prod 1/(lambda_i - lambda_j), so frames are computed with guard
# digits on top of the requested precision, raised per frame as needed.
GUARD_DIGITS = 20
GUARD_MARGIN = 10
MAX_CONDITION = 400


class ResampleError(RuntimeError):
    """An evaluation point sits on (or next to) a zero or pole."""


class WindowError(IndexError):
    """A Casorati index falls outside the computed lattice window."""


@dataclass
class Specialization:
    spec: AlgebraSpec
    hbar: float
    roots: dict[int, list]
    u0: mpmath.mpc
    dps: int = 15
    seed: int | None = None
    guard: int = GUARD_DIGITS
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def random(cls, spec: AlgebraSpec, seed: int, hbar: float = 0.7, dps: int = 15,
               root_counts: dict[int, int] | None = None) -> Specialization:
        rng = np.random.default_rng(seed)
        with mpmath.workdps(dps + 5):
            for _ in range(100):
                roots = {}
                for a in spec.orbits:
                    M = (root_counts or {}).get(a) or int(rng.integers(2, 4))
                    roots[a] = [mpmath.mpc(rng.uniform(-2, 2), rng.uniform(-1, 1)) for _ in range(M)]
                u0 = mpmath.mpc(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
                sp = cls(spec, hbar, roots, u0, dps, seed)
                if sp._clear_of_roots(span=40):
                    return sp
        raise ResampleError("could not place the base point away from the roots")

    @property
    def work_dps(self) -> int:
        return self.dps + self.guard

    @property
    def period(self):
        with mpmath.workdps(self.work_dps):
            return mpmath.mpc(0, +mpmath.pi / self.hbar)

    def h(self, a: int) -> int:
        return (-1) ** len(self.roots[a])

    def point(self, s: Shift):
        """The complex number u0 + p + q*pi*i/hbar."""
        with mpmath.workdps(self.work_dps):
            return self.u0 + mpmath.mpf(s.p.numerator) / s.p.denominator + self.period * (
                mpmath.mpf(s.q.numerator) / s.q.denominator)

    def Q(self, a: int, z):
        out = mpmath.mpc(1)
        for r in self.roots[a]:
            out *= mpmath.sinh(self.hbar * (z - r))
        return out

    def Q_at(self, a: int, s: Shift):
        """Q_a at the exact lattice point u0 + s, memoized per working precision."""
        key = (a, s, self.work_dps)
        val = self._memo.get(key)
        if val is None:
            with mpmath.workdps(self.work_dps):
                val = self._memo[key] = self.Q(a, self.point(s))
        return val

    def _clear_of_roots(self, span: int) -> bool:
        # every lattice point u0 + p + q t with integer p in [-span, span] and
        # q in {0, 1/3, 1/2, 2/3}, shifted by the +-1 inside Y
        period = self.period
        for a, roots in self.roots.items():
            for r in roots:
                d = self.u0 - r
                for q in (0, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
                    w = d + period * float(q)
                    # distance of w to the set  Z + period*Z  along the real lattice
                    im = float(mpmath.im(w)) % float(mpmath.im(period))
                    im = min(im, float(mpmath.im(period)) - im)
                    re = float(mpmath.re(w))
                    re_frac = abs(re - round(re))
                    if im < ROOT_TOL and re_frac < ROOT_TOL and abs(re) <= span + 2:
                        return False
        return True


def eval_poly(sp: Specialization, p: LaurentPoly, u, cache: dict | None = None):
    """Evaluate a Q- or Y-polynomial at u.

    ``u`` is either a Shift (the exact point u0 + u, with memoized Q values)
    or a complex number.
    """
    cache = {} if cache is None else cache
    total = mpmath.mpc(0)
    with mpmath.workdps(sp.work_dps):
        for m, c in p.terms.items():
            term = mpmath.mpc(c)
            for sid, e in m:
                val = cache.get(sid)
                if val is None:
                    val = _symbol_value(sp, sid, u)
                    cache[sid] = val
                if e < 0 and abs(val) < POLE_TOL:
                    raise ResampleError(f"pole of {symbol_of(sid)} near {u}")
                term *= val ** e
            total += term
    return total


def _symbol_value(sp: Specialization, sid: int, u):
    sym = symbol_of(sid)
    if sym.family == "h":
        return mpmath.mpc(sp.h(sym.index))
    if isinstance(u, Shift):
        s = u + sym.shift
        if sym.family == "Q":
            return sp.Q_at(sym.index, s)
        num, den = sp.Q_at(sym.index, s - Shift(1)), sp.Q_at(sym.index, s + Shift(1))
    else:
        z = u + mpmath.mpf(sym.shift.p.numerator) / sym.shift.p.denominator + sp.period * (
            mpmath.mpf(sym.shift.q.numerator) / sym.shift.q.denominator)
        if sym.family == "Q":
            return sp.Q(sym.index, z)
        num, den = sp.Q(sym.index, z - 1), sp.Q(sym.index, z + 1)
    if abs(den) < POLE_TOL * max(1, abs(num)):
        raise ResampleError(f"pole of {sym} near {u}")
    return num / den


def _annulus(rng) -> mpmath.mpc:
    r = rng.uniform(0.5, 1.5)
    phi = rng.uniform(0, 2 * np.pi)
    return mpmath.mpc(r * np.cos(phi), r * np.sin(phi))


@dataclass
class CasoratiFrame:
    """Basis values w_b(origin + 2k), k = 0..window, seeded at the origin."""
    sp: Specialization
    origin: Shift
    window: int
    values: list[list] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.values)

    def w(self, b: int, k: int):
        if not 0 <= k <= self.window:
            raise WindowError(f"lattice index {k} outside [0, {self.window}]")
        return self.values[b - 1][k]

    def xi(self, indices, k: int = 0):
        """Casorati determinant [i_1, ..., i_{N+1}] at origin + 2k."""
        if len(indices) != self.size:
            raise ValueError(f"expected {self.size} indices")
        if len(set(indices)) < len(indices):
            return mpmath.mpc(0)
        with mpmath.workdps(self.sp.work_dps):
            M = mpmath.matrix(self.size, self.size)
            for b in range(self.size):
                for c, i in enumerate(indices):
                    M[b, c] = self.w(b + 1, k + i)
            return mpmath.det(M)


def _recursion_coefficients(sp: Specialization, origin: Shift, window: int):
    """y_c(u) = x_c(u+N+1-2c+t/2) on origin + 2k, for c = 1..N+1."""
    spec = sp.spec
    out = {}
    for c in range(1, spec.N + 2):
        poly = x_var(spec, c, Shift(spec.N + 1 - 2 * c, HALF))
        out[c] = [eval_poly(sp, poly, origin + Shift(2 * k)) for k in range(window)]
    return out


def solve_basis(sp: Specialization, window: int, origin: Shift = ZERO, rng=None) -> CasoratiFrame:
    """Filtered basis w_b in Ker L_b, b = 1..N+1, on origin + 2k for k = 0..window.

    The basis is seeded at the origin with random constants and propagated
    forward; frames are meant to be short and local to where they are used.
    When the frame's condition estimate eats into the requested digits the
    working precision of the specialization is raised and the frame rebuilt.
    """
    spec = sp.spec
    rng = rng if rng is not None else np.random.default_rng(sp.seed)
    size = spec.N + 1
    if window < size:
        raise ValueError("window too small for a Casorati frame")
    y, built_at = None, None
    for _ in range(MAX_RESEEDS):
        if built_at != sp.work_dps:
            y, built_at = _recursion_coefficients(sp, origin, window), sp.work_dps
        with mpmath.workdps(sp.work_dps):
            values = []
            for b in range(1, size + 1):
                # v in Ker(D - y_{N+2-b}), then (D - y_c) v_new = v for c = N+3-b..N+1
                c0 = size + 1 - b
                v = [_annulus(rng)]
                for k in range(window):
                    v.append(y[c0][k] * v[k])
                for c in range(c0 + 1, size + 1):
                    nxt = [_annulus(rng)]
                    for k in range(window):
                        nxt.append(y[c][k] * nxt[k] + v[k])
                    v = nxt
                values.append(v)
        frame = CasoratiFrame(sp, origin, window, values)
        cond = frame_condition(frame)
        if cond > MAX_CONDITION:
            continue
        if cond + GUARD_MARGIN > sp.guard:
            sp.guard = int(cond) + 2 * GUARD_MARGIN
            continue
        return frame
    raise ResampleError("degenerate Casorati frame after reseeding")


def frame_condition(frame: CasoratiFrame) -> float:
    """log10 of (prod_b max_k |w_b(k)|) / |[0..N]|: digits lost in any window minor."""
    with mpmath.workdps(frame.sp.work_dps):
        d = abs(frame.xi(list(range(frame.size))))
        if d == 0:
            return float("inf")
        scale = mpmath.mpf(1)
        for b in range(1, frame.size + 1):
            scale *= max(abs(frame.w(b, k)) for k in range(frame.window + 1))
        return float(mpmath.log10(scale / d))


def rel_error(residual, *terms) -> float:
    scale = max([abs(t) for t in terms] + [mpmath.mpf(0)])
    if scale == 0:
        return float(abs(residual))
    return float(abs(residual) / scale)


def xi_indices(N: int, a: int, m: int) -> list[int]:
    """Index list of xi^{(a)}_m = [0..a-1, a+m..N+m]."""
    return list(range(a)) + list(range(a + m, N + m + 1))


class CasoratiSystem:
    """Casorati frames of one specialization, seeded lazily at each base point.

    Ratios of Casorati determinants do not depend on the basis, so every
    ratio is taken in a frame seeded at its own base point; points carrying
    t/2 give the frames on the half-period lattice.
    """

    def __init__(self, sp: Specialization, window: int):
        self.sp = sp
        self.window = window
        self._frames: dict[Shift, CasoratiFrame] = {}
        self._rng = np.random.default_rng([sp.seed or 0, 1])

    def frame_at(self, base: Shift) -> CasoratiFrame:
        f = self._frames.get(base)
        if f is None:
            f = self._frames[base] = solve_basis(self.sp, self.window, base, self._rng)
        return f

    @property
    def frames(self) -> list[CasoratiFrame]:
        return list(self._frames.values())

    def xi(self, indices, base: Shift, frame: CasoratiFrame | None = None):
        """[indices] at u0 + base, inside ``frame`` (default: the frame seeded there)."""
        if frame is None:
            return self.frame_at(base).xi(indices)
        d = base - frame.origin
        if d.q != 0 or d.p.denominator != 1 or d.p.numerator % 2:
            raise WindowError(f"{base} is not on the lattice of the frame at {frame.origin}")
        return frame.xi(indices, d.p.numerator // 2)

    def ratio(self, indices, base: Shift):
        f = self.frame_at(base)
        return f.xi(indices) / f.xi(list(range(f.size)))

    def T_am(self, a: int, m: int, at: Shift):
        """T^{(a)}_m(u) = xi^{(a)}_m(u-a-m+1) / xi(u-a-m+1) at u = u0 + at."""
        if m == 0:
            return mpmath.mpc(1)
        return self.ratio(xi_indices(self.sp.spec.N, a, m), at - Shift(a + m - 1))


# checks ------------------------------------------------------------------

def _params(sp: Specialization, **extra) -> dict:
    return {**sp.spec.as_record(), "seed": sp.seed, "precision": sp.dps, "hbar": sp.hbar, **extra}


def check_basis(system: CasoratiSystem, bases) -> CheckReport:
    """Each w_b lies in Ker L; w_1 follows its first-order recursion."""
    sp = system.sp
    spec = sp.spec
    report = CheckReport("basis", _params(sp))
    L = build_L(spec)
    top = max(L.coeffs)
    with timed(report):
        for base in bases:
            f = system.frame_at(base)
            for b in range(1, spec.N + 2):
                worst = 0.0
                for k in range(f.window - top + 1):
                    u = base + Shift(2 * k)
                    terms = [eval_poly(sp, c, u) * f.w(b, k + a) for a, c in L.coeffs.items()]
                    worst = max(worst, rel_error(sum(terms), *terms))
                report.add_numeric(f"base {base} L w_{b} = 0", worst, 1e-9)
            ratio = f.w(1, 1) / f.w(1, 0)
            expect = eval_poly(sp, x_var(spec, spec.N + 1, Shift(-spec.N - 1, HALF)), base)
            report.add_numeric(f"base {base} w_1 recursion", rel_error(ratio - expect, expect), 1e-12)
    return report


def check_shift_relation(system: CasoratiSystem, bases) -> CheckReport:
    N = system.sp.spec.N
    report = CheckReport("shift relation", _params(system.sp))
    with timed(report):
        for base in bases:
            lhs = system.xi(list(range(N + 1)), base)
            rhs = system.xi(list(range(1, N + 2)), base)
            report.add_numeric(f"base {base}", rel_error(lhs - rhs, lhs, rhs), TOL)
            swapped = system.xi([1, 0] + list(range(2, N + 1)), base)
            report.add_numeric(f"antisymmetry {base}", rel_error(lhs + swapped, lhs), TOL)
            repeated = system.xi([0, 0] + list(range(2, N + 1)), base)
            report.add_numeric(f"repeated index {base}", rel_error(repeated, lhs), 1e-10)
    return report


def check_ta1(system: CasoratiSystem, table: TTable, bases) -> CheckReport:
    sp = system.sp
    N = sp.spec.N
    report = CheckReport("ta1", _params(sp))
    with timed(report):
        for a in range(N + 2):
            worst = 0.0
            for base in bases:
                idx = [i for i in range(N + 2) if i != a]
                r = system.ratio(idx, base)
                expect = eval_poly(sp, table.T(a, Shift(a)), base)
                worst = max(worst, rel_error(r - expect, r, expect))
            report.add_numeric(f"a={a}", worst, TOL)
    return report


def check_plucker(system: CasoratiSystem, a: int, m: int, base: Shift) -> CheckReport:
    N = system.sp.spec.N
    report = CheckReport("plucker", _params(system.sp, a=a, m=m))

    frame = system.frame_at(base)

    def xi(aa, mm, s):
        return system.xi(xi_indices(N, aa, mm), s, frame)

    with timed(report):
        p1 = xi(a, m, base) * xi(a, m, base + Shift(2))
        # three-term Plucker identity on the columns shared by xi(u), xi(u+2);
        # with [0..a-1, a+m..N+m] the longer index sets sit at u, the shorter at u+2
        p2 = xi(a, m + 1, base) * xi(a, m - 1, base + Shift(2))
        p3 = xi(a + 1, m, base) * xi(a - 1, m, base + Shift(2))
        report.add_numeric(f"a={a} m={m} base {base}", rel_error(p1 - p2 - p3, p1, p2, p3), TOL)
    return report


def check_mnnsy_numeric(system: CasoratiSystem, table: TTable, indices, base: Shift) -> CheckReport:
    sp = system.sp
    spec = sp.spec
    data = YoungData(tuple(indices))
    report = CheckReport("skew ratio", _params(sp, indices=list(indices)))
    with timed(report):
        r = system.ratio(list(indices), base)
        u = base
        d = eval_poly(sp, skew_determinant(spec, data, ZERO, table), u)
        tab, _ = tableaux_sum(spec, data)
        t = eval_poly(sp, tab, u)
        report.add_numeric(f"{tuple(indices)} casorati vs det", rel_error(r - d, r, d), TOL)
        report.add_numeric(f"{tuple(indices)} casorati vs tableaux", rel_error(r - t, r, t), TOL)
    return report


def check_dual_ca(system: CasoratiSystem, m_max: int, bases) -> CheckReport:
    N = system.sp.spec.N
    report = CheckReport("dual-Ca", _params(system.sp, m_max=m_max))
    with timed(report):
        for a in range(N + 2):
            for m in range(m_max + 1):
                worst = 0.0
                for base in bases:
                    lhs = system.ratio(xi_indices(N, a, m), base)
                    rhs = system.ratio(xi_indices(N, N - a + 1, m), base + Shift(2 * a - N - 1, HALF))
                    worst = max(worst, rel_error(lhs - rhs, lhs, rhs))
                report.add_numeric(f"a={a} m={m}", worst, TOL)
    return report


def check_tsystem_numeric(system: CasoratiSystem, a_max: int, m_max: int, points) -> CheckReport:
    """The T-system with T^{(a)}_m from Casorati ratios, at u = u0 + a + m + p."""
    spec = system.sp.spec
    report = CheckReport("tsystem numeric", _params(system.sp, a_max=a_max, m_max=m_max))
    with timed(report):
        for a in range(1, min(a_max, spec.n) + 1):
            for m in range(1, m_max + 1):
                worst = 0.0
                for p in points:
                    at = Shift(a + m + p)

                    def T(aa, mm, s):
                        return system.T_am(aa, mm, at + s)

                    (l1, l2), (f1, f2), (s1, s2) = tsystem_terms(spec, a, m, T)
                    lhs, first, second = l1 * l2, f1 * f2, s1 * s2
                    worst = max(worst, rel_error(lhs - first - second, lhs, first, second))
                report.add_numeric(f"a={a} m={m}", worst, TOL)
    return report


def check_jacobi_trudi_numeric(system: CasoratiSystem, a_max: int, m_max: int, points) -> CheckReport:
    sp = system.sp
    spec = sp.spec
    report = CheckReport("JT vs Casorati", _params(sp, a_max=a_max, m_max=m_max))
    with timed(report):
        for a in range(1, min(a_max, spec.n) + 1):
            for m in range(1, m_max + 1):
                jt = jacobi_trudi(spec, a, m)
                tab, _ = tableaux_sum(spec, YoungData.rectangle(spec.N, a, m), Shift(-a - m + 1))
                worst = 0.0
                for p in points:
                    at = Shift(a + m + p)
                    c = system.T_am(a, m, at)
                    j = eval_poly(sp, jt, at)
                    t = eval_poly(sp, tab, at)
                    worst = max(worst, rel_error(c - j, c, j), rel_error(t - j, t, j))
                report.add_numeric(f"a={a} m={m}", worst, TOL)
    return report


def check_quasi_periodicity(sp: Specialization, samples: int = 5) -> CheckReport:
    rng = np.random.default_rng([sp.seed or 0, 2])
    report = CheckReport("quasi-periodicity", _params(sp))
    with timed(report), mpmath.workdps(sp.work_dps):
        for a in sp.roots:
            worst = 0.0
            for _ in range(samples):
                u = mpmath.mpc(rng.uniform(-3, 3), rng.uniform(-2, 2))
                lhs = sp.Q(a, u + sp.period)
                rhs = sp.h(a) * sp.Q(a, u)
                worst = max(worst, rel_error(lhs - rhs, lhs, rhs))
            report.add_numeric(f"a={a}", worst, 1e-12)
    return report


def skew_index_sets(N: int, window: int) -> list[list[int]]:
    """A few index sets with i_0 = 0 exercising non-rectangular skew diagrams."""
    sets = [[0, 1] + list(range(3, N + 2)), [0] + list(range(2, N + 1)) + [N + 3]]
    if N <= 4:
        # the staircase diagram grows fast with N
        sets.insert(0, [0] + [2 * k for k in range(1, N + 1)])
    return [s for s in sets if max(s) <= window and len(set(s)) == N + 1 and s == sorted(s)]


def run_casorati_checks(spec: AlgebraSpec, seed: int = 0, trials: int = 20, m_max: int = 3,
                        a_max: int | None = None, precision: str | int = "double",
                        hbar: float = 0.7, base_points: int = 3) -> CheckReport:
    """All numeric checks over ``trials`` independent specializations."""
    if not spec.is_a2:
        raise ValueError(f"Casorati construction is only available for A2 algebras, not {spec.kind}")
    dps = PRECISIONS[precision] if isinstance(precision, str) else int(precision)
    a_max = min(a_max or spec.n, spec.n)
    N = spec.N
    table = t_table(spec)
    window = N + m_max + 2
    report = CheckReport("casorati", {**spec.as_record(), "seed": seed, "trials": trials,
                                      "precision": dps, "m_max": m_max, "a_max": a_max, "hbar": hbar})
    points = [Fraction(j, 2) for j in range(base_points)]
    bases = [Shift(j) for j in range(max(base_points, 5))]
    with timed(report):
        for trial in range(trials):
            sp = Specialization.random(spec, seed=seed * 1000 + trial, hbar=hbar, dps=dps)
            system = CasoratiSystem(sp, window)
            prefix = f"trial {trial}: "
            parts = [
                check_quasi_periodicity(sp),
                check_basis(system, [bases[0], Shift(0, HALF)]),
                check_shift_relation(system, bases),
                check_ta1(system, table, bases),
                check_dual_ca(system, m_max, bases[:base_points]),
                check_tsystem_numeric(system, a_max, m_max, points),
                check_jacobi_trudi_numeric(system, a_max, m_max, points),
            ]
            for a in range(1, N + 1):
                for m in range(1, m_max + 1):
                    parts.append(check_plucker(system, a, m, bases[0]))
            for indices in skew_index_sets(N, window):
                parts.append(check_mnnsy_numeric(system, table, indices, bases[0]))
            for part in parts:
                report.merge(part, prefix + part.name + " ")
    return report
