"""Covering formations on small soluble groups.

For a prime partition the formation consists of direct products of Hall
subgroups, one per block.  In the soluble case membership is decided by
commuting Sylow pairs across blocks, and it is inherited by and detected on
Sylow normalizers.
"""

from sylowgraph.corpus import soluble_corpus
from sylowgraph.formation import FormationSpec, in_product_class, n_closure_check, soluble_covering_membership

partition = [{2, 3}, {5}, {7}, {11}]
spec = FormationSpec.from_partition(partition)
members = []
for name, G in soluble_corpus():
    a = in_product_class(G, partition)
    b = soluble_covering_membership(G, spec)
    rep = n_closure_check(G, lambda H: in_product_class(H, partition))
    assert a == b and rep.holds
    if a:
        members.append(name)
print(f"blocks {partition}: {len(members)} of 50 groups are members")
print(", ".join(members))

F20 = dict(soluble_corpus())["F20"]
rep = n_closure_check(F20, lambda H: in_product_class(H, [{2}, {5}]))
print(f"\nF20 with blocks {{2}}, {{5}}: member {rep.group_member}, "
      f"Sylow normalizer orders {dict(rep.normalizer_orders)}")
