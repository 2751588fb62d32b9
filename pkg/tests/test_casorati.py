from fractions import Fraction as F

import mpmath
import numpy as np
import pytest

from oracles import SinhModel, rel
from tsyslab.casorati import (CasoratiSystem, ResampleError, Specialization, WindowError, check_basis,
                              check_dual_ca, check_mnnsy_numeric, check_plucker, check_quasi_periodicity,
                              check_shift_relation, check_ta1, eval_poly, frame_condition,
                              run_casorati_checks, solve_basis, xi_indices)
from tsyslab.diffop import t_table
from tsyslab.laurent import ONE, LaurentPoly
from tsyslab.rootdata import make_algebra
from tsyslab.shifts import ZERO, S

HALF = F(1, 2)


def _oracle(sp):
    return SinhModel({a: [complex(r) for r in rs] for a, rs in sp.roots.items()}, sp.hbar)


@pytest.fixture(scope="module")
def sys2():
    spec = make_algebra("A2_even", 1)
    return CasoratiSystem(Specialization.random(spec, seed=3), window=7)


@pytest.fixture(scope="module")
def sys3():
    spec = make_algebra("A2_odd", 2)
    return CasoratiSystem(Specialization.random(spec, seed=4), window=8)


def test_eval_against_numpy_oracle():
    spec = make_algebra("A2_odd", 2)
    sp = Specialization.random(spec, seed=11)
    model = _oracle(sp)
    u0 = complex(sp.u0)
    T1 = t_table(spec).T(1)
    for s in (ZERO, S(1), S(2, HALF)):
        exact = complex(eval_poly(sp, T1, s))
        z = u0 + float(s.p) + float(s.q) * model.period
        assert rel(exact, model.eval(T1, z)) < 1e-11
        assert rel(complex(eval_poly(sp, T1, mpmath.mpc(z))), exact) < 1e-11


def test_eval_small_examples():
    spec = make_algebra("A2_even", 1)
    sp = Specialization.random(spec, seed=2)
    assert eval_poly(sp, ONE, ZERO) == 1
    root = sp.roots[1][0]
    assert abs(eval_poly(sp, LaurentPoly.symbol("Q", 1, ZERO), root)) < 1e-14
    Y = LaurentPoly.symbol("Y", 1, S(1))
    assert abs(eval_poly(sp, Y * LaurentPoly.symbol("Y", 1, S(1), -1), S(0)) - 1) < 1e-14
    with pytest.raises(ResampleError):
        eval_poly(sp, LaurentPoly.symbol("Q", 1, ZERO, -1), root)


def test_quasi_periodicity():
    sp = Specialization.random(make_algebra("A2_odd", 3), seed=1)
    assert check_quasi_periodicity(sp).passed
    model = _oracle(sp)
    for a in sp.roots:
        z = 0.3 + 0.2j
        assert rel(model.Q(a, z + model.period), sp.h(a) * model.Q(a, z)) < 1e-12


def test_basis_and_shift(sys2, sys3):
    for system in (sys2, sys3):
        assert check_basis(system, [ZERO, S(0, HALF)]).passed
        assert check_shift_relation(system, [S(k) for k in range(4)]).passed


def test_ta1(sys2, sys3):
    for system in (sys2, sys3):
        table = t_table(system.sp.spec)
        report = check_ta1(system, table, [ZERO, S(1), S(2)])
        assert report.passed, report.summary()
        N = system.sp.spec.N
        assert abs(system.ratio([i for i in range(N + 2) if i != 0], ZERO) - 1) < 1e-8
        assert abs(system.ratio(list(range(N + 1)), ZERO) - 1) < 1e-12


def test_plucker(sys2, sys3):
    assert check_plucker(sys2, 1, 1, ZERO).passed
    assert check_plucker(sys3, 2, 2, ZERO).passed
    assert check_plucker(sys3, 1, 3, S(1)).passed


def test_skew_ratio_numeric(sys2):
    assert check_mnnsy_numeric(sys2, t_table(sys2.sp.spec), (0, 2, 4), ZERO).passed


def test_dual_ca(sys2, sys3):
    for system in (sys2, sys3):
        assert check_dual_ca(system, 2, [ZERO, S(1)]).passed


def test_ratios_independent_of_basis():
    spec = make_algebra("A2_odd", 2)
    sp = Specialization.random(spec, seed=8)
    ratios = []
    for k in range(3):
        f = solve_basis(sp, 7, ZERO, np.random.default_rng(100 + k))
        ratios.append(f.xi(xi_indices(spec.N, 1, 2)) / f.xi(list(range(f.size))))
    assert abs(f.xi([0, 1, 2, 3])) > 0
    for r in ratios[1:]:
        assert float(abs(r - ratios[0]) / abs(r)) < 1e-10


def test_frame_bookkeeping(sys2):
    f = sys2.frame_at(ZERO)
    assert f.size == 3
    assert frame_condition(f) + 10 <= sys2.sp.guard
    assert f.xi([0, 0, 2]) == 0
    with pytest.raises(WindowError):
        f.w(1, f.window + 1)
    with pytest.raises(WindowError):
        sys2.xi([0, 1, 2], S(1), f)
    with pytest.raises(ValueError):
        f.xi([0, 1])


def test_run_all_small():
    report = run_casorati_checks(make_algebra("A2_even", 1), seed=1, trials=2)
    assert report.passed, report.summary()
    assert report.max_residual < 1e-8


def test_precision_high():
    report = run_casorati_checks(make_algebra("A2_even", 1), seed=2, trials=1, m_max=2, precision="high")
    assert report.passed


def test_non_a2_rejected():
    with pytest.raises(ValueError):
        run_casorati_checks(make_algebra("D2", 2))


def test_degenerate_cases(sys2):
    # m = 0 collapses to xi(u) xi(u+2) = xi(u) xi(u+2); identity indices give the empty determinant
    assert check_plucker(sys2, 1, 0, ZERO).passed
    report = check_mnnsy_numeric(sys2, t_table(sys2.sp.spec), (0, 1, 2), ZERO)
    assert report.passed and report.max_residual < 1e-14
