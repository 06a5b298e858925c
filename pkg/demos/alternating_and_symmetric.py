"""Sylow graphs of symmetric and alternating groups.

Symmetric groups stay within distance 2 of everything.  Alternating groups
reach diameter 3 exactly when n is a prime p = 3 (mod 4) or one more than
such a prime; A8 is the smallest case where the bound 3 is attained with a
composite n.
"""

from sylowgraph import alternating, diameter, sylow_graph, symmetric, to_table
from sylowgraph.verify import exceptional_degree


def show(label, G):
    g = sylow_graph(G, label)
    pairs = ", ".join(f"{a.source}->{a.target}" for a in g.arrows)
    print(f"{label:>4}  diameter {diameter(g)}  arrows {{{pairs}}}")
    return g


print("symmetric groups")
for n in range(3, 13):
    show(f"S{n}", symmetric(n))

print("\nalternating groups (* marks n = p or p+1 with p = 3 mod 4)")
for n in range(5, 13):
    g = sylow_graph(alternating(n), f"A{n}")
    mark = "*" if exceptional_degree(n) else " "
    print(f"{mark}A{n:<3} diameter {diameter(g)}")

print()
print(to_table(sylow_graph(alternating(8), "A8")))
# 7 -> 3 -> 2 <- 5 is a path of length 3 and nothing shortcuts it
