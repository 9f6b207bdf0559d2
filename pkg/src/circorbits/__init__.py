"""Exact counting and enumeration of primitive periodic orbits on two-step circulant digraphs."""

from .counting import (
    CountTerm,
    OrbitCountReport,
    count_orbits_l,
    count_orbits_lk,
    count_orbits_lk_unreduced,
    predicted_repetition,
    sum_reduction_check,
)
from .errors import (
    BudgetExceeded,
    CircorbitsError,
    DisconnectedGraph,
    DoesNotClose,
    NotLatticePoint,
    RejectedParameters,
)
from .graph import Bond, Circuit, CirculantGraph, dot_graph
from .lattice import (
    LatticeBasis,
    OrbitClass,
    basis,
    bcounts_for_length,
    lattice_points,
    skipped_windings,
    winding_bounds,
)
from .numtheory import binomial, divisors, extended_gcd, gcd, moebius, scaled_binomial
from .oracle import Orbit, connected_graphs, enumerate_orbits, phi, verify_range
from .words import (
    WordDecomposition,
    b_count,
    count_lyndon,
    count_nonprimitive,
    decompose,
    is_lyndon,
    list_lyndon,
    lyndon_rotation,
    parse_word,
    rotate,
    to_step_string,
)

__version__ = "0.1.0"

__all__ = [
    "Bond",
    "BudgetExceeded",
    "Circuit",
    "CirculantGraph",
    "CircorbitsError",
    "CountTerm",
    "DisconnectedGraph",
    "DoesNotClose",
    "LatticeBasis",
    "NotLatticePoint",
    "Orbit",
    "OrbitClass",
    "OrbitCountReport",
    "RejectedParameters",
    "WordDecomposition",
    "b_count",
    "basis",
    "bcounts_for_length",
    "binomial",
    "connected_graphs",
    "count_lyndon",
    "count_nonprimitive",
    "count_orbits_l",
    "count_orbits_lk",
    "count_orbits_lk_unreduced",
    "decompose",
    "divisors",
    "dot_graph",
    "enumerate_orbits",
    "extended_gcd",
    "gcd",
    "is_lyndon",
    "lattice_points",
    "list_lyndon",
    "lyndon_rotation",
    "moebius",
    "parse_word",
    "phi",
    "predicted_repetition",
    "rotate",
    "scaled_binomial",
    "skipped_windings",
    "sum_reduction_check",
    "to_step_string",
    "verify_range",
    "winding_bounds",
]
