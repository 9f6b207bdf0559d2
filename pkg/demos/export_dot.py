#!/usr/bin/env python3
"""Write Graphviz DOT files for three circulant digraphs.

C_5(1,4) and C_8(1,2,3) are strongly connected; C_12(2,4) splits into
two components (gcd(12,2,4) = 2). Rendering works either way; only the
counting commands require connectivity. Render with e.g.
`circo -Tpng c5_1_4.dot -o c5_1_4.png`.
"""

from pathlib import Path

from circorbits import CirculantGraph, dot_graph

for n, steps in ((5, [1, 4]), (8, [1, 2, 3]), (12, [2, 4])):
    name = f"c{n}_" + "_".join(map(str, steps)) + ".dot"
    path = Path.cwd() / name
    path.write_text(dot_graph(n, steps))
    note = ""
    if len(steps) == 2:
        G = CirculantGraph(n, *steps)
        note = " (connected)" if G.is_strongly_connected() else " (disconnected)"
    print(f"wrote {path.name}: {n} vertices, {n * len(steps)} bonds{note}")
