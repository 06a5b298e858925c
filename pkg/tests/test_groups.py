import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from sylowgraph import catalog
from sylowgraph.config import BudgetExceeded, override
from sylowgraph.groups import PermGroup, group_from_generators
from sylowgraph.oracles import bf_orbit_stabilizer_order, closure
from sylowgraph.perm import Permutation


def test_symmetric_from_transposition_and_cycle():
    G = group_from_generators(5, [Permutation.from_cycles(5, [(0, 1)]),
                                  Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])])
    assert G.order == 120


def test_alternating_from_three_cycles():
    gens = [Permutation.from_cycles(8, [(0, 1, i)]) for i in range(2, 8)]
    assert group_from_generators(8, gens).order == 20160


def test_m11_matches_orbit_stabilizer_oracle():
    G = catalog.mathieu(11)
    assert G.order == 7920
    assert bf_orbit_stabilizer_order(G.generators, G.degree) == 7920


def test_contains():
    A5 = catalog.alternating(5)
    assert A5.contains(Permutation.from_cycles(5, [(0, 1, 2)]))
    assert not A5.contains(Permutation.from_cycles(5, [(0, 1)]))
    M11 = catalog.mathieu(11)
    rng = random.Random(7)
    g = M11.identity
    for _ in range(20):
        g = g * rng.choice(M11.generators)
    assert g in M11


@pytest.mark.parametrize("G, n", [(catalog.cyclic(6), 6), (catalog.symmetric(6), 720), (catalog.psl2(7), 168)])
def test_elements_count(G, n):
    els = list(G.elements())
    assert len(els) == n == len(set(els))


def test_elements_deterministic():
    G = catalog.symmetric(4)
    assert list(G.elements()) == list(G.elements())


def test_elements_budget():
    with override(max_order=100):
        with pytest.raises(BudgetExceeded):
            list(catalog.symmetric(6).elements())


def test_bad_degree():
    with pytest.raises(ValueError):
        PermGroup(4, [(1, 0, 2)])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.lists(st.integers(0, 10 ** 9), min_size=1, max_size=3))
def test_random_groups_match_closure(n, seeds):
    gens = []
    for s in seeds:
        p = list(range(n))
        random.Random(s).shuffle(p)
        gens.append(Permutation(p))
    G = PermGroup(n, gens)
    assert G.order == len(closure(gens, n))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_randomized_chain_agrees(seed):
    S6 = catalog.symmetric(6)
    rng = random.Random(seed)
    gens = [S6.random_element(rng) for _ in range(2)]
    exact = PermGroup(6, gens)
    fast = PermGroup(6, gens, order=exact.order)
    assert fast.order == exact.order
    assert all(fast.contains(g) for g in exact.elements())


def test_chain_with_base_prefix():
    G = catalog.mathieu(12)
    ch = G.chain_with_base((5, 3))
    assert tuple(ch.base[:2]) == (5, 3)
    assert ch.order == G.order


def test_orbits():
    G = catalog.direct_product(catalog.symmetric(3), catalog.cyclic(5))
    assert G.orbits() == [[0, 1, 2], [3, 4, 5, 6, 7]]
    assert not G.is_transitive()
    assert math.prod(len(o) for o in G.orbits()) == 15
