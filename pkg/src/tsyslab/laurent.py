"""Integer Laurent polynomials in shifted Q/Y symbols and the units h_a.

A monomial is a tuple of ``(symbol_id, exponent)`` pairs sorted by id, with
symbol ids handed out by a process-wide intern table.  Polynomials are
immutable ``{monomial: coefficient}`` maps with no zero entries.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .rootdata import AlgebraSpec
from .shifts import ZERO, Shift, canonicalize, shift_text

FAMILIES = ("Q", "Y", "h")


class FamilyError(ValueError):
    """Arithmetic mixing Q-symbols with Y-symbols."""


class FormalSymbol(NamedTuple):
    family: str
    index: int
    shift: Shift

    def sort_key(self):
        return (self.family, self.index, self.shift.p, self.shift.q)

    def __str__(self):
        if self.family == "h":
            return f"h[{self.index}]"
        return f"{self.family}[{self.index}](u{shift_text(self.shift)})"


_SYMBOLS: list[FormalSymbol] = []
_SYMBOL_IDS: dict[FormalSymbol, int] = {}


def symbol_id(sym: FormalSymbol) -> int:
    try:
        return _SYMBOL_IDS[sym]
    except KeyError:
        _SYMBOLS.append(sym)
        _SYMBOL_IDS[sym] = len(_SYMBOLS) - 1
        return _SYMBOL_IDS[sym]


def symbol_of(sid: int) -> FormalSymbol:
    return _SYMBOLS[sid]


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for k, e in m2:
        v = d.get(k, 0) + e
        if v:
            d[k] = v
        else:
            del d[k]
    return tuple(sorted(d.items()))


def _mono_pow(m: tuple, k: int) -> tuple:
    return tuple((s, e * k) for s, e in m) if k else ()


class LaurentPoly:
    __slots__ = ("terms", "_family")

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._family = None

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({(): int(c)})

    @classmethod
    def _raw_symbol(cls, sym: FormalSymbol, exp: int = 1) -> LaurentPoly:
        return cls({((symbol_id(sym), exp),): 1}) if exp else cls.const(1)

    @classmethod
    def symbol(cls, family: str, index: int, shift: Shift = ZERO, exp: int = 1) -> LaurentPoly:
        """A single symbol, canonicalized (Q symbols may pick up h units)."""
        if family == "h":
            return cls._raw_symbol(FormalSymbol("h", index, ZERO), exp)
        res = canonicalize(family, shift)
        out = cls._raw_symbol(FormalSymbol(family, index, res.shift), exp)
        if res.unit_power:
            out = out * cls._raw_symbol(FormalSymbol("h", index, ZERO), res.unit_power * exp)
        return out

    # structure ----------------------------------------------------------
    @property
    def family(self) -> str | None:
        """'Q', 'Y' or None for polynomials in units only."""
        if self._family is None:
            fams = {_SYMBOLS[s].family for m in self.terms for s, _ in m} - {"h"}
            if len(fams) > 1:
                raise FamilyError("polynomial mixes Q and Y symbols")
            self._family = fams.pop() if fams else ""
        return self._family or None

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def iter_terms(self) -> Iterator[tuple[tuple[tuple[FormalSymbol, int], ...], int]]:
        for m, c in self.terms.items():
            yield tuple((_SYMBOLS[s], e) for s, e in m), c

    def coefficient(self, monomial: LaurentPoly) -> int:
        """Coefficient of the (single) monomial of ``monomial`` in self."""
        if not monomial.is_monomial():
            raise ValueError("expected a single monomial")
        (m, c), = monomial.terms.items()
        if c not in (1, -1):
            raise ValueError("monomial must have coefficient +-1")
        return self.terms.get(m, 0) * c

    def symbols(self) -> set[FormalSymbol]:
        return {_SYMBOLS[s] for m in self.terms for s, _ in m}

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def _check_family(self, other: LaurentPoly) -> None:
        f1, f2 = self.family, other.family
        if f1 and f2 and f1 != f2:
            raise FamilyError(f"cannot combine {f1}-polynomial with {f2}-polynomial")

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        self._check_family(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        self._check_family(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials with coefficient +-1 are invertible")
            (m, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only monomials with coefficient +-1 are invertible")
            return LaurentPoly({_mono_pow(m, k): c ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> LaurentPoly:
        return self ** -1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # substitutions -------------------------------------------------------
    def map_symbols(self, fn) -> LaurentPoly:
        """Substitute every symbol id ``s`` by the monomial ``fn(s)``.

        ``fn`` returns a monomial tuple; substitution distributes over
        exponents and products.
        """
        out: dict = {}
        for m, c in self.terms.items():
            new = ()
            for s, e in m:
                new = _mono_mul(new, _mono_pow(fn(s), e))
            out[new] = out.get(new, 0) + c
        return LaurentPoly(out)

    def shift_all(self, d: Shift) -> LaurentPoly:
        if d == ZERO:
            return self
        return self.map_symbols(lambda s: _shifted_symbol(s, d))


@lru_cache(maxsize=None)
def _shifted_symbol(sid: int, d: Shift) -> tuple:
    sym = _SYMBOLS[sid]
    if sym.family == "h":
        return ((sid, 1),)
    (m, _), = LaurentPoly.symbol(sym.family, sym.index, sym.shift + d).terms.items()
    return m


def shift_all(p: LaurentPoly, d: Shift) -> LaurentPoly:
    return p.shift_all(d)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for p in polys:
        out = out * p
    return out


ONE = LaurentPoly.const(1)
ZERO_POLY = LaurentPoly()


def resolve_conventions(spec: AlgebraSpec, family: str, a: int, s: Shift = ZERO) -> LaurentPoly:
    """The symbol ``family_a(u+s)`` after the boundary conventions.

    Index 0 is the constant 1.  Index n+1 is Q_n/Y_n half a period later for
    A2_even and the constant 1 for the other algebras.
    """
    if family not in ("Q", "Y"):
        raise ValueError(f"unknown family {family!r}")
    if not 0 <= a <= spec.n + 1:
        raise IndexError(f"index {a} outside 0..{spec.n + 1} for {spec.kind}")
    if a == 0:
        return ONE
    if a == spec.n + 1:
        if spec.kind == "A2_even":
            return LaurentPoly.symbol(family, spec.n, s + Shift(0, Fraction(1, 2)))
        return ONE
    return LaurentPoly.symbol(family, a, s)


def power_product(spec: AlgebraSpec, family: str, a: int, k: int, s: Shift = ZERO) -> LaurentPoly:
    """Q^k_a(u+s) (or Y^k_a): k copies spaced by t/r."""
    if k < 1:
        raise ValueError("k must be positive")
    return product(
        resolve_conventions(spec, family, a, s + Shift(0, Fraction(j, spec.r))) for j in range(k)
    )


@lru_cache(maxsize=None)
def _y_to_q_symbol(sid: int) -> tuple:
    sym = _SYMBOLS[sid]
    if sym.family == "Q":
        raise FamilyError("y_to_q expects a Y-polynomial")
    if sym.family == "h":
        return ((sid, 1),)
    num = LaurentPoly.symbol("Q", sym.index, sym.shift - Shift(1))
    den = LaurentPoly.symbol("Q", sym.index, sym.shift + Shift(1), exp=-1)
    (m, _), = (num * den).terms.items()
    return m


def y_to_q(p: LaurentPoly) -> LaurentPoly:
    """Substitute Y_a(u) = Q_a(u-1)/Q_a(u+1)."""
    return p.map_symbols(_y_to_q_symbol)


def _term_key(m: tuple):
    syms = sorted((_SYMBOLS[s], e) for s, e in m)
    return tuple(sym.sort_key() + (-e,) for sym, e in sorted(syms, key=lambda t: t[0].sort_key()))


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form in the polynomial grammar."""
    if p.is_zero():
        return "0"
    pieces = []
    for m in sorted(p.terms, key=_term_key):
        c = p.terms[m]
        syms = sorted(((_SYMBOLS[s], e) for s, e in m), key=lambda t: t[0].sort_key())
        body = "*".join(str(sym) + (f"^{e}" if e != 1 else "") for sym, e in syms)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{body}"
        pieces.append(("-" if c < 0 else "+", text))
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
