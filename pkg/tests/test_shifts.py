from fractions import Fraction as F

from tsyslab.shifts import S, Shift, canonicalize, shift_add, shift_text, theta_zero, theta_zero_active


def test_shift_add_examples():
    assert shift_add(S(1, F(1, 2)), S(2, F(1, 2))) == S(3, 1)
    assert shift_add(S(), S(5, F(1, 3))) == S(5, F(1, 3))
    assert shift_add(S(F(-1, 2), F(1, 3)), S(F(1, 2), F(2, 3))) == S(0, 1)


def test_canonicalize_examples():
    assert canonicalize("Q", S(0, F(3, 2))) == (S(0, F(1, 2)), 1)
    assert canonicalize("Y", S(2, 1)) == (S(2, 0), 0)
    assert canonicalize("Q", S(1, F(-1, 3))) == (S(1, F(2, 3)), -1)


def test_lowest_terms_and_equality():
    s = Shift(F(2, 4), F(3, 6))
    assert (s.p, s.q) == (F(1, 2), F(1, 2))
    assert Shift(1, 0) == Shift(F(2, 2))
    assert hash(Shift(1, 0)) == hash(Shift(F(2, 2)))


def test_immutable():
    s = Shift(1)
    try:
        s.p = F(3)
    except AttributeError:
        pass
    else:
        raise AssertionError("Shift must be immutable")


def test_theta_zero_forces_q():
    assert not theta_zero_active()
    with theta_zero():
        assert theta_zero_active()
        assert Shift(1, F(1, 2)) == Shift(1)
    assert Shift(1, F(1, 2)).q == F(1, 2)


def test_text_form():
    assert shift_text(S(F(3, 2), F(1, 2))) == "+3/2+1/2t"
    assert shift_text(S(-1, -1)) == "-1-1t"
    assert shift_text(S()) == ""
    assert str(S(2)) == "u+2"
