"""PSL(2,27) extended by its field automorphism of order 3.

In PSL(2,27) the Sylow 3-subgroup has normalizer of order 27*26/2 = 351.
After adjoining the Frobenius map the Sylow 3-subgroup grows to order 81
and becomes self-normalizing, so the vertex 3 has no outgoing arrow; the
arrow 2 -> 3 appears instead and the diameter drops to 2.
"""

from sylowgraph import normalizer, psl2, psl2_field_extension, sylow, sylow_graph, to_table

L = psl2(27)
P = sylow(L, 3)
print(f"PSL2(27): |P| = {P.order}, |N(P)| = {normalizer(L, P).order}")
print(to_table(sylow_graph(L, "PSL2(27)")))

G = psl2_field_extension(27, 3)
P = sylow(G, 3)
print(f"PSL2(27):3: |P| = {P.order}, |N(P)| = {normalizer(G, P).order}")
print(to_table(sylow_graph(G, "PSL2(27):3")))
