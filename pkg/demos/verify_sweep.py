#!/usr/bin/env python3
"""Sweep the closed formulas against brute-force enumeration.

Every connected two-step circulant graph with up to 8 vertices, every
length up to 10: per-class counts, per-length totals, reduced vs
unreduced, and the repetition-number law, all checked against direct
enumeration of orbits.
"""

import time

from circorbits import verify_range

t0 = time.perf_counter()
report = verify_range(8, 10)
elapsed = time.perf_counter() - t0

print(f"graphs: {report['graphs']}, cases: {report['cases']}, "
      f"checks: {report['checks']}, elapsed {elapsed:.2f} s")
print(f"mismatches: {len(report['mismatches'])}")
worst = max(report["case_results"], key=lambda c: c["orbits"])
print(f"largest case: C_{worst['n']}({worst['a']},{worst['b']}) "
      f"length {worst['l']} with {worst['orbits']} orbits")
print("PASSED" if report["passed"] else "FAILED")
