"""Sylow graphs of finite permutation groups.

The Sylow graph of ``G`` has the primes dividing ``|G|`` as vertices and an
arrow ``p -> q`` whenever ``q`` divides the order of the automiser
``N_G(P) / P C_G(P)`` of a Sylow p-subgroup ``P``.
"""

from .config import BudgetExceeded, budgets, override
from .perm import Permutation, compose, parse_cycles
from .groups import PermGroup, Subgroup, group_from_generators
from .subgroups import (center, centralizer, centralizer_element, extended_centralizer, is_normal,
                        is_real, is_soluble, normal_closure, normalizer, real_witness, sylow)
from .graph import (Arrow, SylowGraph, automiser_order, diameter, distance, from_dot, from_json,
                    is_connected, real_central_edge_certificate, sylow_graph, to_dot, to_json, to_table)
from .arith import Factorization, FactorizationError, factorize, is_prime, primitive_primes, zsigmondy
from .catalog import (alternating, cyclic, dihedral, direct_product, frobenius, mathieu, pgl2, psl,
                      psl2, psl2_field_extension, psp4, symmetric)
from .groupspec import GroupSpecError, build_group, parse_group
from .lie import LieTypeSpec, PredictedArrow, SigmaPartition, group_order, order_E6, predicted_edges
from .formation import FormationSpec, PrimePartition, in_product_class, soluble_covering_membership

__version__ = "0.1.0"
