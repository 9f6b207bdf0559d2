#!/usr/bin/env python3
"""Two routes to one huge exact count, shown term by term.

The class l=360, k=240 on C_440(5,14) has winding number 9. The
unreduced route sums one block per word-repetition number q coprime to
9 (q in {1,2,4,8,5,10,20,40}), each block a Moebius expansion of a
Lyndon-word count. Almost everything cancels: the reduced route keeps
only the squarefree common divisors of (l, k, omega), here {1, 3}.
"""

from collections import defaultdict

from circorbits import CirculantGraph, count_orbits_lk, count_orbits_lk_unreduced

G = CirculantGraph(440, 5, 14)
L, K = 360, 240

unred = count_orbits_lk_unreduced(G, L, K)
blocks = defaultdict(list)
for t in unred.terms:
    blocks[t.q].append(t)

print(f"graph C_{G.n}({G.a},{G.b}), class l={L}, k={K}, omega={unred.omega}")
print(f"unreduced: {len(blocks)} repetition blocks, {len(unred.terms)} terms")
for q in sorted(blocks):
    inner = ", ".join(f"mu({t.m})*C({L}/{q * t.m},{K}/{q * t.m})" for t in blocks[q])
    print(f"  q={q:>2}: (n/q) * (q/l) * [ {inner} ]")

red = count_orbits_lk(G, L, K)
print(f"\nreduced: {len(red.terms)} terms survive the cancellation")
for t in red.terms:
    print(f"  m={t.m} mu={t.mu:+d}  C({L // t.m},{K // t.m}) has {len(str(t.binomial))} digits")

assert red.count == unred.count
print(f"\nboth routes agree; the count has {len(str(red.count))} digits:")
print(red.count)
