"""Sylow graphs of the Mathieu groups.

M23 is the only one of diameter 5: the path 23 - 11 - 5 - 2 - 3 - 7 has no
shortcut.  Each graph takes well under a second.
"""

import time

from sylowgraph import diameter, mathieu, sylow_graph

for n in (11, 12, 22, 23, 24):
    t = time.perf_counter()
    g = sylow_graph(mathieu(n), f"M{n}")
    pairs = ", ".join(f"{a.source}->{a.target}" for a in g.arrows)
    print(f"M{n:<3} |G| = {g.order:<10} diameter {diameter(g)}  {{{pairs}}}  "
          f"({time.perf_counter() - t:.2f}s)")
