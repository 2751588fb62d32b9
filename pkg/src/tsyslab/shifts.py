"""Exact argument shifts u + p + q*t with t = pi*i/hbar.

``theta_zero()`` switches on the degenerate regime in which pi*i/hbar is
formally zero; every Shift built while it is active has q = 0.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
from fractions import Fraction
from typing import NamedTuple

_THETA_ZERO = contextvars.ContextVar("theta_zero", default=False)


def theta_zero_active() -> bool:
    return _THETA_ZERO.get()


@contextlib.contextmanager
def theta_zero(enabled: bool = True):
    token = _THETA_ZERO.set(enabled)
    try:
        yield
    finally:
        _THETA_ZERO.reset(token)


class Shift:
    __slots__ = ("p", "q", "_hash")

    def __init__(self, p=0, q=0):
        p = Fraction(p)
        q = Fraction(q)
        if _THETA_ZERO.get():
            q = Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "_hash", hash((p, q)))

    def __setattr__(self, name, value):
        raise AttributeError("Shift is immutable")

    def __reduce__(self):
        return (Shift, (self.p, self.q))

    def __eq__(self, other):
        if not isinstance(other, Shift):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.p, self.q) < (other.p, other.q)

    def __add__(self, other: Shift) -> Shift:
        return Shift(self.p + other.p, self.q + other.q)

    def __sub__(self, other: Shift) -> Shift:
        return Shift(self.p - other.p, self.q - other.q)

    def __neg__(self) -> Shift:
        return Shift(-self.p, -self.q)

    def __repr__(self):
        return f"Shift({self.p}, {self.q})"

    def __str__(self):
        return "u" + shift_text(self)


ZERO = Shift()


def shift_add(s1: Shift, s2: Shift) -> Shift:
    return s1 + s2


def S(p=0, q=0) -> Shift:
    """Shorthand constructor, mostly for tests and notebooks."""
    return Shift(p, q)


class CanonicalizationResult(NamedTuple):
    shift: Shift
    unit_power: int


def canonicalize(family: str, s: Shift) -> CanonicalizationResult:
    """Reduce the t-component into [0, 1).

    Q symbols are quasi-periodic (Q(u + t) = h Q(u)) so each full period is
    returned as one power of h; Y symbols are periodic and shed it.
    """
    k = math.floor(s.q)
    reduced = Shift(s.p, s.q - k)
    if family == "Q":
        return CanonicalizationResult(reduced, k)
    if family == "Y":
        return CanonicalizationResult(reduced, 0)
    raise ValueError(f"unknown family {family!r}")


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def shift_text(s: Shift) -> str:
    """Suffix after ``u``: ``+3/2+1/2t``; empty for the zero shift."""
    out = ""
    if s.p:
        out += ("+" if s.p > 0 else "-") + _frac_text(abs(s.p))
    if s.q:
        out += ("+" if s.q > 0 else "-") + _frac_text(abs(s.q)) + "t"
    return out
