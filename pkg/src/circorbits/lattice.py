"""The integer lattice of closed-walk lengths and b-counts.

Closed walks of length l and b-count k on C_n(a, b) exist exactly when
l*a + k*d = omega*n for some integer winding number omega (d = b - a).
The solution set is a rank-2 sublattice of Z^2; this module computes a
basis for it, the exact inverse matrix sending lattice points to integer
coordinates, and the admissible orbit classes with 0 <= k <= l, l >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLatticePoint, RejectedParameters
from .graph import CirculantGraph
from .numtheory import extended_gcd


@dataclass(frozen=True)
class OrbitClass:
    """An admissible (length, b-count, winding number) triple."""

    l: int
    k: int
    omega: int


@dataclass(frozen=True)
class LatticeBasis:
    """Basis (d', -a'), (l0, k0) of the solution lattice, with its inverse matrix.

    a' = a/g and d' = d/g, and l0*a + k0*d = g*n. The inverse of the column
    matrix [(d', l0), (-a', k0)] is (1/n) * [(k0, -l0), (a', d')]; it is
    stored as integer numerators over the denominator n so coordinate maps
    stay exact.
    """

    n: int
    a_prime: int
    d_prime: int
    l0: int
    k0: int

    def matrix_numerators(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.k0, -self.l0), (self.a_prime, self.d_prime))

    def to_coords(self, l: int, k: int) -> tuple[int, int]:
        """Map a lattice point (l, k) to its integer coordinates (x, y); y = omega/g."""
        xn = l * self.k0 - k * self.l0
        yn = l * self.a_prime + k * self.d_prime
        if yn % self.n or xn % self.n:
            raise NotLatticePoint(
                f"({l}, {k}) is not in the solution lattice (mod {self.n})"
            )
        return xn // self.n, yn // self.n

    def from_coords(self, x: int, y: int) -> tuple[int, int]:
        """Inverse of to_coords: (l, k) = x*(d', -a') + y*(l0, k0)."""
        return x * self.d_prime + y * self.l0, -x * self.a_prime + y * self.k0


def basis(G: CirculantGraph) -> LatticeBasis:
    """Lattice basis for C_n(a, b), normalized so 0 <= l0 < d' (l0 = 0 when d' = 1)."""
    G.require_connected()
    g = G.g
    a_prime = G.a // g
    d_prime = G.d // g
    gg, u, v = extended_gcd(a_prime, d_prime)
    assert gg == 1
    # u*a' + v*d' = 1, so (u*n)*a + (v*n)*d = g*n.
    l0 = u * G.n
    k0 = v * G.n
    # Shift along (d', -a') to the smallest nonnegative l0 representative.
    r = l0 % d_prime
    x = (r - l0) // d_prime
    l0, k0 = r, k0 - x * a_prime
    assert l0 * G.a + k0 * G.d == g * G.n
    assert d_prime * k0 + a_prime * l0 == G.n
    return LatticeBasis(G.n, a_prime, d_prime, l0, k0)


def winding_bounds(G: CirculantGraph, l: int) -> tuple[int, int]:
    """Inclusive winding-number range [ceil(l*a/n), floor(l*b/n)] for length l."""
    if l < 1:
        raise RejectedParameters(f"length must be >= 1, got {l}")
    lo = -(-l * G.a // G.n)
    hi = l * G.b // G.n
    return lo, hi


def bcounts_for_length(G: CirculantGraph, l: int) -> list[OrbitClass]:
    """All admissible orbit classes of length l, sorted by winding number."""
    G.require_connected()
    lo, hi = winding_bounds(G, l)
    out = []
    for omega in range(lo, hi + 1):
        num = omega * G.n - l * G.a
        if num % G.d:
            continue
        k = num // G.d
        assert 0 <= k <= l
        assert omega % G.g == 0
        out.append(OrbitClass(l, k, omega))
    return out


def skipped_windings(G: CirculantGraph, l: int) -> list[int]:
    """Winding numbers in range for length l whose b-count is not an integer."""
    lo, hi = winding_bounds(G, l)
    return [w for w in range(lo, hi + 1) if (w * G.n - l * G.a) % G.d]


def lattice_points(G: CirculantGraph, l_max: int) -> list[OrbitClass]:
    """All admissible orbit classes with 1 <= l <= l_max."""
    G.require_connected()
    if l_max < 1:
        raise RejectedParameters(f"l_max must be >= 1, got {l_max}")
    out = []
    for l in range(1, l_max + 1):
        out.extend(bcounts_for_length(G, l))
    return out
