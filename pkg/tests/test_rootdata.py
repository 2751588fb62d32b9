from fractions import Fraction

import pytest

from tsyslab.rootdata import AlgebraError, make_algebra, normalize_kind

ALL = [("A2_even", 1), ("A2_even", 2), ("A2_odd", 2), ("A2_odd", 3), ("D2", 2), ("D2", 3), ("D3_4", 2)]


@pytest.mark.parametrize("kind,n,N,r,n_prime", [
    ("A2_even", 1, 2, 2, 2), ("A2_even", 3, 6, 2, 4),
    ("A2_odd", 2, 3, 2, 2), ("A2_odd", 4, 7, 2, 4),
    ("D2", 2, 3, 2, 2), ("D2", 4, 5, 2, 4),
    ("D3_4", 2, 4, 3, 2),
])
def test_rank_data(kind, n, N, r, n_prime):
    spec = make_algebra(kind, n)
    assert (spec.N, spec.r, spec.n_prime) == (N, r, n_prime)


def test_a2_even_smallest():
    spec = make_algebra("A2_even", 1)
    assert (spec.N, spec.r, spec.n_prime, spec.g) == (2, 2, 2, 3)


def test_d34_fixed_point_data():
    spec = make_algebra("D3_4", 2)
    assert spec.r_a(2) == 3 and spec.r_a(1) == 1
    assert spec.incidence(1, 2) == 1
    assert spec.sigma[0] == 3


@pytest.mark.parametrize("kind,n", [("A2_odd", 1), ("A2_even", 0), ("D2", 1), ("D3_4", 3)])
def test_out_of_range(kind, n):
    with pytest.raises(AlgebraError):
        make_algebra(kind, n)


def test_kind_aliases_and_e6():
    assert normalize_kind("a2even") == "A2_even"
    assert normalize_kind("d3_4") == "D3_4"
    with pytest.raises(AlgebraError):
        normalize_kind("E6_2")
    with pytest.raises(AlgebraError):
        normalize_kind("B3")


@pytest.mark.parametrize("kind,n", ALL)
def test_r_a_is_r_exactly_on_fixed_points(kind, n):
    spec = make_algebra(kind, n)
    for a in spec.nodes:
        fixed = spec.sigma[a - 1] == a
        assert spec.r_a(a) == (spec.r if fixed else 1)


@pytest.mark.parametrize("kind,n", ALL)
def test_simply_laced_pairing_and_incidence(kind, n):
    spec = make_algebra(kind, n)
    for a in spec.nodes:
        assert spec.pairing(a, a) == 2
        for b in spec.nodes:
            assert spec.pairing(a, b) == spec.pairing(b, a)
            expected = 2 * (a == b) - 2 * spec.pairing(a, b) / spec.pairing(a, a)
            assert spec.incidence(a, b) == expected
    assert spec.is_connected()


@pytest.mark.parametrize("kind,n", ALL)
def test_sigma_is_a_diagram_automorphism_of_order_r(kind, n):
    spec = make_algebra(kind, n)
    sigma = {a: spec.sigma[a - 1] for a in spec.nodes}
    for a in spec.nodes:
        b = a
        for _ in range(spec.r):
            b = sigma[b]
        assert b == a
    assert any(sigma[a] != a for a in spec.nodes)
    for a in spec.nodes:
        for b in spec.nodes:
            assert spec.pairing(a, b) == spec.pairing(sigma[a], sigma[b])


def test_r_ab_examples():
    assert make_algebra("D3_4", 2).r_ab(1, 2) == 3
    assert make_algebra("A2_odd", 2).r_ab(1, 1) == 1
    assert make_algebra("D2", 2).r_ab(1, 2) == 2
    with pytest.raises(IndexError):
        make_algebra("D2", 2).r_ab(1, 3)


def test_pairing_is_exact():
    assert isinstance(make_algebra("A2_even", 2).pairing(1, 2), Fraction)
