"""Closed-form counts of primitive periodic orbits.

Two equivalent routes are implemented. The reduced formula counts orbits
of length l and b-count k as (n/l) * sum of mu(m)*C(l/m, k/m) over the
common divisors m of l, k and the winding number. The unreduced formula
splits the same count over word repetition numbers q coprime to the
winding number, one block of Lyndon-word counts per q; both must agree,
and the brute-force oracle module checks them against direct enumeration.

All arithmetic keeps the signed divisor sum as an exact integer, then
multiplies by n and divides by l; integrality of that final division is
asserted, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .errors import DoesNotClose, NotLatticePoint
from .graph import CirculantGraph
from .lattice import OrbitClass, bcounts_for_length
from .numtheory import binomial, divisors, moebius
from .words import check_word, decompose

METHOD_REDUCED = "reduced"
METHOD_UNREDUCED = "unreduced"
METHOD_ORACLE = "oracle"
_METHODS = (METHOD_REDUCED, METHOD_UNREDUCED, METHOD_ORACLE)


class CountTerm(NamedTuple):
    """One signed binomial contribution; q is the repetition block (unreduced only)."""

    m: int
    mu: int
    binomial: int
    q: int | None = None

    def to_json_dict(self) -> dict:
        out: dict = {}
        if self.q is not None:
            out["q"] = self.q
        out["m"] = self.m
        out["mu"] = self.mu
        out["binomial"] = str(self.binomial)
        return out


@dataclass(frozen=True)
class OrbitCountReport:
    """A primitive-orbit count with its term-by-term breakdown."""

    graph: CirculantGraph
    l: int
    k: int
    omega: int | None
    count: int
    terms: tuple[CountTerm, ...]
    method: str

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def orbit_class(self) -> OrbitClass | None:
        if self.omega is None:
            return None
        return OrbitClass(self.l, self.k, self.omega)

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "a": self.graph.a,
            "b": self.graph.b,
            "l": self.l,
            "k": self.k,
            "omega": self.omega,
            "count": str(self.count),
            "terms": [t.to_json_dict() for t in self.terms],
            "method": self.method,
        }


def _check_lk(l: int, k: int) -> None:
    if l < 1:
        raise ValueError(f"length must be >= 1, got {l}")
    if not 0 <= k <= l:
        raise ValueError(f"b-count must satisfy 0 <= k <= l, got k={k}, l={l}")


def _finish(G: CirculantGraph, l: int, k: int, omega: int,
            terms: list[CountTerm], method: str) -> OrbitCountReport:
    total = G.n * sum(t.mu * t.binomial for t in terms)
    assert total % l == 0, f"count formula non-integral for C_{G.n}({G.a},{G.b}), l={l}, k={k}"
    count = total // l
    assert count >= 0
    return OrbitCountReport(G, l, k, omega, count, tuple(terms), method)


def count_orbits_lk(G: CirculantGraph, l: int, k: int) -> OrbitCountReport:
    """Primitive periodic orbits of length l with b-count k (reduced formula).

    Returns a zero count with no terms when (l, k) is not a lattice point.
    Divisors with mu = 0 contribute nothing and are omitted from the terms.
    """
    G.require_connected()
    _check_lk(l, k)
    delta = l * G.a + k * G.d
    if delta % G.n:
        return OrbitCountReport(G, l, k, None, 0, (), METHOD_REDUCED)
    omega = delta // G.n
    assert omega >= 1
    terms = []
    for m in divisors(math.gcd(l, k, omega)):
        mu = moebius(m)
        if mu:
            terms.append(CountTerm(m, mu, binomial(l // m, k // m)))
    return _finish(G, l, k, omega, terms, METHOD_REDUCED)


def count_orbits_l(G: CirculantGraph, l: int) -> tuple[int, list[OrbitCountReport]]:
    """Total primitive orbits of length l, with one report per admissible b-count."""
    reports = [count_orbits_lk(G, c.l, c.k) for c in bcounts_for_length(G, l)]
    return sum(r.count for r in reports), reports


def count_orbits_lk_unreduced(G: CirculantGraph, l: int, k: int) -> OrbitCountReport:
    """Primitive-orbit count via the repetition-number split.

    Sums, over the divisors q of gcd(l, k) coprime to the winding number,
    the Moebius expansion of the Lyndon-word count at (l/q, k/q). Must
    equal count_orbits_lk; unlike it, requires (l, k) to be a lattice point.
    """
    G.require_connected()
    _check_lk(l, k)
    delta = l * G.a + k * G.d
    if delta % G.n:
        raise NotLatticePoint(
            f"(l={l}, k={k}) is not a lattice point of C_{G.n}({G.a},{G.b})"
        )
    omega = delta // G.n
    assert omega >= 1
    gamma = math.gcd(l, k)
    terms = []
    for q in divisors(gamma):
        if math.gcd(q, omega) != 1:
            continue
        for m in divisors(gamma // q):
            mu = moebius(m)
            if mu:
                terms.append(CountTerm(m, mu, binomial(l // (q * m), k // (q * m)), q=q))
    return _finish(G, l, k, omega, terms, METHOD_UNREDUCED)


def sum_reduction_check(gamma: int, omega: int, f: Mapping[int, int]) -> tuple[int, int]:
    """Both sides of the divisor-sum collapse identity, for equality testing.

    lhs iterates divisors q of gamma coprime to omega and squarefree
    divisors s of gamma/q, weighting f(q*s) by mu(s); rhs is the plain
    Moebius sum of f over divisors of gcd(gamma, omega). f must be defined
    on every divisor of gamma.
    """
    if gamma < 1 or omega < 1:
        raise ValueError(f"gamma and omega must be >= 1, got ({gamma}, {omega})")
    lhs = 0
    for q in divisors(gamma):
        if math.gcd(q, omega) != 1:
            continue
        for s in divisors(gamma // q):
            lhs += moebius(s) * f[q * s]
    rhs = sum(moebius(m) * f[m] for m in divisors(math.gcd(gamma, omega)))
    return lhs, rhs


def predicted_repetition(G: CirculantGraph, w: str) -> int:
    """Repetition number the orbit of a closing word must have: gcd(r, omega).

    r is the repetition count of the word itself; the orbit is primitive
    exactly when r is coprime to the winding number.
    """
    check_word(w)
    delta = G.transit_distance(w)
    if delta % G.n:
        raise DoesNotClose(
            f"word {w!r} has transit distance {delta}, not a multiple of n={G.n}"
        )
    omega = delta // G.n
    return math.gcd(decompose(w).repetition, omega)
