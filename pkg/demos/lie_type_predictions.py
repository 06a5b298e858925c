"""Predicted arrows for groups of Lie type, checked where a permutation model exists.

The predictor works from order arithmetic alone (primitive prime divisors),
so it also runs for groups far too large to build, such as E6(4).
"""

from sylowgraph import LieTypeSpec, alternating, predicted_edges, psl, psl2, psp4, sylow_graph
from sylowgraph.lie import sigma_partition_linear

cases = [
    ("A", 3, 2, alternating(8), "L4(2) = A8"),
    ("A", 2, 2, psl2(7), "L3(2) = PSL2(7)"),
    ("A", 2, 3, psl(3, 3), "L3(3)"),
    ("A", 3, 3, psl(4, 3), "L4(3)"),
    ("2A", 3, 2, psp4(3), "U4(2) = PSp4(3)"),
]
for family, rank, q, G, label in cases:
    spec = LieTypeSpec.from_q(family, rank, q)
    pred = {(a.source, a.target) for a in predicted_edges(spec)}
    have = sylow_graph(G).arrow_pairs()
    print(f"{label:<16} predicted {sorted(pred)}")
    print(f"{'':<16} computed  {sorted(have)}  sound: {pred <= have}")

part = sigma_partition_linear(4, 1, 2)
print(f"\nL4(2): sigma1 {sorted(part.sigma1)} (j = {part.witnesses}), sigma2 {sorted(part.sigma2)}, "
      f"sigma3 {sorted(part.sigma3)}")

print("\nE6(4), no permutation model needed:")
for a in sorted(predicted_edges(LieTypeSpec.from_q("E6", 6, 4))):
    print(f"  {a.source:>4} -> {a.target:<3} {a.justification}")
