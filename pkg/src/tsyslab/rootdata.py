"""Root data for the twisted affine algebras A2_even, A2_odd, D2 and D3_4.

Nodes are enumerated as in the standard Dynkin pictures of the untwisted
diagram X_N: a chain 1..N for the A families, a chain 1..n-1 with the fork
n, n+1 attached to n-1 for D_{n+1}, and the star with centre 2 for D_4.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

KINDS = ("A2_even", "A2_odd", "D2", "D3_4")

_ALIASES = {
    "a2even": "A2_even", "a2_even": "A2_even",
    "a2odd": "A2_odd", "a2_odd": "A2_odd",
    "d2": "D2", "d3_4": "D3_4", "d34": "D3_4",
}


class AlgebraError(ValueError):
    """Unknown algebra kind or rank outside the supported range."""


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str
    n: int
    N: int
    r: int
    n_prime: int
    g: int | None
    r_nodes: tuple[int, ...]
    sigma: tuple[int, ...]
    edges: frozenset = field(repr=False)

    @property
    def nodes(self) -> range:
        return range(1, self.N + 1)

    @property
    def orbits(self) -> range:
        """Orbit representatives 1..n."""
        return range(1, self.n + 1)

    @property
    def is_a2(self) -> bool:
        return self.kind in ("A2_even", "A2_odd")

    @property
    def top_bound(self) -> int:
        """Largest a for which T^a is attached to a Kirillov-Reshetikhin module."""
        return {"A2_even": self.n, "A2_odd": self.n, "D2": self.n - 1, "D3_4": 2}[self.kind]

    def r_a(self, a: int) -> int:
        self._check_node(a)
        return self.r_nodes[a - 1]

    def pairing(self, a: int, b: int) -> Fraction:
        """Invariant form (alpha_a|alpha_b); every X_N here is simply laced."""
        self._check_node(a)
        self._check_node(b)
        if a == b:
            return Fraction(2)
        return Fraction(-1) if frozenset((a, b)) in self.edges else Fraction(0)

    def incidence(self, a: int, b: int) -> int:
        p = self.pairing(a, b)
        res = 2 * (a == b) - 2 * p / self.pairing(a, a)
        return int(res)

    def r_ab(self, a: int, b: int) -> int:
        for x in (a, b):
            if not 1 <= x <= self.n_prime:
                raise IndexError(f"orbit index {x} outside 1..{self.n_prime} for {self.kind}")
        return max(self.r_a(a), self.r_a(b))

    def is_connected(self) -> bool:
        seen = {1}
        queue = deque([1])
        while queue:
            a = queue.popleft()
            for b in self.nodes:
                if b not in seen and self.incidence(a, b) > 0:
                    seen.add(b)
                    queue.append(b)
        return len(seen) == self.N

    def as_record(self) -> dict:
        return {"kind": self.kind, "n": self.n}

    def _check_node(self, a: int) -> None:
        if not 1 <= a <= self.N:
            raise IndexError(f"node {a} outside 1..{self.N} for {self.kind}")


def normalize_kind(kind: str) -> str:
    if kind in KINDS:
        return kind
    key = kind.lower().replace("-", "_")
    if key in _ALIASES:
        return _ALIASES[key]
    if key.startswith("e"):
        raise AlgebraError("E6^(2) is not supported: no z-variables are available for it")
    raise AlgebraError(f"unknown algebra kind {kind!r}; expected one of {', '.join(KINDS)}")


def make_algebra(kind: str, n: int) -> AlgebraSpec:
    kind = normalize_kind(kind)
    if not isinstance(n, int) or isinstance(n, bool):
        raise AlgebraError(f"n must be an integer, got {n!r}")

    if kind == "A2_even":
        if n < 1:
            raise AlgebraError("A2_even requires n >= 1")
        N = 2 * n
        edges = [(a, a + 1) for a in range(1, N)]
        sigma = [N - a + 1 for a in range(1, N + 1)]
        r, n_prime = 2, n + 1
    elif kind == "A2_odd":
        if n < 2:
            raise AlgebraError("A2_odd requires n >= 2")
        N = 2 * n - 1
        edges = [(a, a + 1) for a in range(1, N)]
        sigma = [2 * n - a for a in range(1, N + 1)]
        r, n_prime = 2, n
    elif kind == "D2":
        if n < 2:
            raise AlgebraError("D2 requires n >= 2")
        N = n + 1
        edges = [(a, a + 1) for a in range(1, n - 1)] + [(n - 1, n), (n - 1, n + 1)]
        sigma = list(range(1, n)) + [n + 1, n]
        r, n_prime = 2, n
    else:
        if n != 2:
            raise AlgebraError("D3_4 requires n == 2")
        N = 4
        edges = [(1, 2), (2, 3), (2, 4)]
        sigma = [3, 2, 4, 1]
        r, n_prime = 3, 2

    r_nodes = tuple(r if sigma[a - 1] == a else 1 for a in range(1, N + 1))
    return AlgebraSpec(
        kind=kind, n=n, N=N, r=r, n_prime=n_prime,
        g=N + 1 if kind in ("A2_even", "A2_odd") else None,
        r_nodes=r_nodes, sigma=tuple(sigma),
        edges=frozenset(frozenset(e) for e in edges),
    )
