import math

import pytest

from sylowgraph import catalog
from sylowgraph.arith import prime_set, primitive_primes
from sylowgraph.graph import sylow_graph
from sylowgraph.lie import (LieTypeSpec, group_order, is_fine, order_E6, order_E6_classical, order_pomega,
                            order_psl, order_psu, predicted_edges, sigma_partition_linear,
                            sigma_partition_orthogonal, weyl_order)


def classical_E6(q, eps):
    # q^36 * prod over the degrees 2,5,6,8,9,12 of (q^d - eps^d), over gcd(3, q - eps)
    n = q ** 36
    for d in (2, 5, 6, 8, 9, 12):
        n *= q ** d - eps ** d
    return n // math.gcd(3, q - eps)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("eps", [1, -1])
def test_E6_order_matches_degree_product(q, eps):
    assert order_E6(q, eps) == classical_E6(q, eps) == order_E6_classical(q, eps)


def test_E6_examples():
    assert order_E6(2) == 2 ** 36 * math.prod(2 ** d - 1 for d in (2, 5, 6, 8, 9, 12))
    assert math.gcd(3, 4 + 1) == 1 and order_E6(4, -1) == classical_E6(4, -1)
    # both values of d occur in the test range
    assert {math.gcd(3, q - e) for q in (2, 3, 4, 5, 7, 8, 9) for e in (1, -1)} == {1, 3}


def test_orders_against_catalog():
    for m, q in [(3, 2), (3, 3), (4, 2), (3, 4)]:
        assert order_psl(m, q) == catalog.psl(m, q).order
    assert order_pomega(6, 1, 2) == catalog.alternating(8).order
    assert order_pomega(6, -1, 2) == order_psu(4, 2) == catalog.psp4(3).order == 25920
    assert order_psu(3, 3) == 6048
    assert group_order(LieTypeSpec.from_q("C", 2, 3)) == 25920
    assert group_order(LieTypeSpec.from_q("2B2", 2, 8)) == 29120
    assert group_order(LieTypeSpec.from_q("G2", 2, 3)) == 4245696


def test_weyl_orders():
    assert weyl_order("A", 4) == 120
    assert weyl_order("2E6", 6) == 1152
    assert weyl_order("E6", 6) == 51840 == 2 * catalog.psp4(3).order
    assert weyl_order("D", 4) == 2 ** 4 * 24
    assert weyl_order("D", 4, standard=True) == 192


def test_is_fine():
    assert is_fine(LieTypeSpec.from_q("A", 1, 4))
    assert not is_fine(LieTypeSpec.from_q("A", 2, 4))
    assert not is_fine(LieTypeSpec.from_q("E6", 6, 2))
    assert is_fine(LieTypeSpec.from_q("D", 4, 3))
    assert not is_fine(LieTypeSpec.from_q("D", 5, 3))
    assert is_fine(LieTypeSpec.from_q("2E6", 6, 2))


def test_spec_validation():
    with pytest.raises(ValueError):
        LieTypeSpec.from_q("E6", 5, 2)
    with pytest.raises(ValueError):
        LieTypeSpec.from_q("A", 2, 6)
    with pytest.raises(ValueError):
        LieTypeSpec.from_q("2B2", 2, 4)
    with pytest.raises(ValueError):
        LieTypeSpec.from_q("X", 2, 4)


def test_sigma_linear_examples():
    p = sigma_partition_linear(4, 1, 2)
    assert (p.sigma1, p.sigma2, p.sigma3) == ({5, 7}, {3}, {2})
    assert p.witnesses == {7: 3, 5: 4}
    p = sigma_partition_linear(3, 1, 2)
    # j ranges over {2, 3}; 3 is primitive for (2, 2)
    assert (p.sigma1, p.sigma2, p.sigma3) == ({3, 7}, set(), {2})


@pytest.mark.parametrize("l", [3, 4, 5, 6])
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("eps", [1, -1])
def test_sigma_linear_is_partition(l, q, eps):
    p = sigma_partition_linear(l, eps, q)
    order = order_psl(l, q) if eps > 0 else order_psu(l, q)
    assert p.primes == prime_set(order)
    assert not (p.sigma1 & p.sigma2) and not (p.sigma1 & p.sigma3) and not (p.sigma2 & p.sigma3)
    assert p.sigma3 == {2, min(prime_set(q))}


def test_sigma_orthogonal_examples():
    assert sigma_partition_orthogonal(1, 1, 2).sigma1 == set(primitive_primes(2, 3)) == {7}
    assert sigma_partition_orthogonal(1, -1, 2).sigma1 == set()
    for l, e, q in [(1, 1, 3), (2, -1, 5), (1, -1, 7)]:
        assert sigma_partition_orthogonal(l, e, q).sigma3 == {2, q}


def pairs(spec):
    return {(a.source, a.target) for a in predicted_edges(spec)}


def test_prediction_examples():
    assert pairs(LieTypeSpec.from_q("A", 3, 2)) == {(3, 2), (5, 2), (7, 3)}
    e6 = predicted_edges(LieTypeSpec.from_q("E6", 6, 4))
    tags = {(a.source, a.target): a.justification for a in e6}
    assert tags[(3, 2)] == "LE4" and tags[(5, 2)] == "LE3"
    for q in (2, 3, 4, 5):
        P = pairs(LieTypeSpec.from_q("E6", 6, q))
        assert (3, 2) in P
        assert all((s, 2) in P for s in prime_set(q ** 4 + 1) if s >= 5)


@pytest.mark.parametrize("family, rank, q, model", [
    ("A", 2, 2, lambda: catalog.psl2(7)),
    ("A", 2, 3, lambda: catalog.psl(3, 3)),
    ("A", 2, 4, lambda: catalog.psl(3, 4)),
    ("A", 2, 5, lambda: catalog.psl(3, 5)),
    ("A", 3, 2, lambda: catalog.alternating(8)),
    ("A", 3, 3, lambda: catalog.psl(4, 3)),
    ("D", 3, 3, lambda: catalog.psl(4, 3)),
    ("2A", 3, 2, lambda: catalog.psp4(3)),
    ("2D", 3, 2, lambda: catalog.psp4(3)),
])
def test_predictions_are_sound(family, rank, q, model):
    spec = LieTypeSpec.from_q(family, rank, q)
    G = model()
    assert G.order == group_order(spec)
    assert pairs(spec) <= sylow_graph(G).arrow_pairs()


def test_unsupported_family():
    with pytest.raises(ValueError):
        predicted_edges(LieTypeSpec.from_q("B", 2, 3))
    with pytest.raises(ValueError):
        predicted_edges(LieTypeSpec.from_q("D", 4, 3))
