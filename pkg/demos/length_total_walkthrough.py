#!/usr/bin/env python3
"""Count all primitive periodic orbits of one length, class by class.

On C_21(4,10) a closed walk of length 15 needs a winding number omega
with 15*4 <= 21*omega <= 15*10, i.e. omega in 3..7, and an integer
b-count k = (21*omega - 60)/6. Only omega = 4 and 6 survive, and each
class contributes (n/l) * C(l, k) orbits since gcd(l, k, omega) = 1.
"""

from circorbits import CirculantGraph, count_orbits_l, skipped_windings, winding_bounds

G = CirculantGraph(21, 4, 10)
L = 15

lo, hi = winding_bounds(G, L)
print(f"graph C_{G.n}({G.a},{G.b}), length {L}")
print(f"winding range: {lo}..{hi}, step gap d = {G.d}, g = gcd(a,d) = {G.g}")
print(f"winding numbers with no integer b-count: {skipped_windings(G, L)}")
print()

total, per_class = count_orbits_l(G, L)
print(f"{'k':>4} {'omega':>6} {'count':>8}   terms")
for r in per_class:
    terms = " + ".join(f"{t.mu:+d}*C({r.l}/{t.m},{r.k}/{t.m})={t.mu * t.binomial}"
                       for t in r.terms)
    print(f"{r.k:>4} {r.omega:>6} {r.count:>8}   (n/l) * [ {terms} ]")
print()
print(f"total primitive orbits of length {L}: {total}")
assert total == 3822
