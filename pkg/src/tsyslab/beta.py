"""Projection of Y-polynomials to classical weights.

beta sends Y_a(u)^{+-1} to e^{+-Lambda_a / r_a} whatever the shift and
sends the units h_a to 1.  Exponent vectors are tuples of Fractions
(lambda_1, ..., lambda_n) standing for sum_a lambda_a Lambda_a.
"""
from __future__ import annotations

from fractions import Fraction

from .diffop import TTable, t_table
from .laurent import LaurentPoly, symbol_of
from .reports import CheckReport, timed
from .rootdata import AlgebraSpec
from .variables import top_term


class WeightPoly:
    """Finite sum of integer multiples of e^{lambda}, lambda a weight vector."""

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms: dict[tuple, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def unit(cls, n: int) -> WeightPoly:
        return cls(n, {(Fraction(0),) * n: 1})

    def __add__(self, other: WeightPoly) -> WeightPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return WeightPoly(self.n, out)

    def __mul__(self, other: WeightPoly) -> WeightPoly:
        out: dict[tuple, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return WeightPoly(self.n, out)

    def __eq__(self, other):
        return isinstance(other, WeightPoly) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for k in self.terms for x in k)

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def dimension(self) -> int:
        """Value at e^{Lambda} = 1."""
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            vec = ",".join(str(x) for x in k)
            parts.append(f"{v} e({vec})")
        return " + ".join(parts)

    def __repr__(self):
        return f"WeightPoly({self})"


def beta_project(spec: AlgebraSpec, p: LaurentPoly) -> WeightPoly:
    n = spec.n
    out: dict[tuple, int] = {}
    for m, c in p.terms.items():
        vec = [Fraction(0)] * n
        for sid, e in m:
            sym = symbol_of(sid)
            if sym.family == "h":
                continue
            if sym.family != "Y":
                raise ValueError("beta is defined on Y-polynomials")
            vec[sym.index - 1] += Fraction(e, spec.r_a(sym.index))
        key = tuple(vec)
        out[key] = out.get(key, 0) + c
    return WeightPoly(n, out)


def fundamental(spec: AlgebraSpec, a: int) -> tuple:
    return tuple(Fraction(int(b == a)) for b in range(1, spec.n + 1))


def check_top_term(spec: AlgebraSpec, a: int, table: TTable | None = None) -> CheckReport:
    """T^a(u) contains prod_k z_k(u+a-2k) with coefficient 1, of weight Lambda_a."""
    table = table or t_table(spec)
    report = CheckReport("top term", {**spec.as_record(), "a": a})
    with timed(report):
        top = top_term(spec, a)
        c = table.T(a).coefficient(top)
        report.add(f"a={a} coefficient", c == 1, None if c == 1 else f"coefficient {c}")
        image = beta_project(spec, top)
        want = WeightPoly(spec.n, {fundamental(spec, a): 1})
        report.add(f"a={a} beta image", image == want, None if image == want else str(image))
    return report


def check_beta(spec: AlgebraSpec, table: TTable | None = None) -> CheckReport:
    """Top terms, integrality and (warning level) positivity of beta(T^a)."""
    table = table or t_table(spec)
    report = CheckReport("beta", spec.as_record())
    with timed(report):
        for a in range(1, spec.top_bound + 1):
            report.merge(check_top_term(spec, a, table))
            image = beta_project(spec, table.T(a))
            report.add(f"a={a} integral weights", image.is_integral(),
                       None if image.is_integral() else str(image))
            report.add(f"a={a} positive coefficients", image.is_positive(),
                       None if image.is_positive() else str(image), warn=True)
    if not spec.is_a2:
        report.note = f"T^a truncated at cutoff {table.cutoff}"
    return report
