import pytest
from hypothesis import given, strategies as st

from sylowgraph import catalog
from sylowgraph.arith import prime_set
from sylowgraph.corpus import catalog_corpus
from sylowgraph.graph import (Arrow, SylowGraph, automiser_order, diameter, distance, from_dot, from_json,
                              is_connected, real_central_edge_certificate, sylow_graph, to_dot, to_json,
                              to_table)
from sylowgraph.groupspec import build_group
from sylowgraph.oracles import bf_automiser_order
from sylowgraph.perm import Permutation

from conftest import element_set

A8 = catalog.alternating(8)


def test_a8_automisers():
    assert automiser_order(A8, 2) == 1
    assert prime_set(automiser_order(A8, 7)) == {3}


def test_a8_graph():
    g = sylow_graph(A8)
    assert g.arrow_pairs() == {(7, 3), (3, 2), (5, 2)}
    assert distance(g, 7, 2) == 2
    assert distance(g, 5, 5) == 0
    assert diameter(g) == 3


def test_c30_isolated():
    g = sylow_graph(catalog.cyclic(30))
    assert g.vertices == (2, 3, 5) and not g.arrows
    assert not is_connected(g)
    assert diameter(g) is None
    assert distance(g, 2, 3) is None


def test_single_vertex():
    g = sylow_graph(catalog.cyclic(7))
    assert is_connected(g) and diameter(g) == 0


def test_s4_contains_3_to_2():
    assert (3, 2) in sylow_graph(catalog.symmetric(4)).arrow_pairs()


def test_nilpotent_automisers_trivial():
    G = catalog.cyclic(12)
    assert all(automiser_order(G, p) == 1 for p in (2, 3))


def test_metrics_use_undirected_view():
    g = sylow_graph(A8)
    assert g.neighbours(2) == {3, 5}
    assert distance(g, 2, 7) == distance(g, 7, 2) == 2


CORPUS = [(n, G) for n, G in catalog_corpus() if G.order <= 2000]


@pytest.mark.parametrize("name, G", CORPUS, ids=[n for n, _ in CORPUS])
def test_automiser_vs_oracle(name, G, elems):
    E = elems(G)
    for p in sorted(prime_set(G.order)):
        assert automiser_order(G, p) == bf_automiser_order(E, p, G.degree)


@pytest.mark.parametrize("name, G", catalog_corpus(), ids=[n for n, _ in catalog_corpus()])
def test_automiser_coprime_and_certificates(name, G):
    g = sylow_graph(G, name)
    for p, a in g.automisers:
        assert a % p
    for p in g.vertices:
        if p == 2:
            continue
        c = real_central_edge_certificate(G, p)
        if c is not None:
            z, w = c
            assert z.conjugate(w) == z.inverse() and not z.is_identity()
            assert (p, 2) in g.arrow_pairs()


def test_certificate_examples():
    assert real_central_edge_certificate(A8, 5) is not None
    assert real_central_edge_certificate(catalog.alternating(7), 7) is None
    assert real_central_edge_certificate(catalog.frobenius(7, 3), 7) is None


def test_certificate_rejects_two():
    with pytest.raises(ValueError):
        real_central_edge_certificate(A8, 2)


def test_validation():
    with pytest.raises(ValueError):
        SylowGraph("x", 6, (2, 3), (Arrow(2, 2, 2),), ((2, 2), (3, 1)))
    with pytest.raises(ValueError):
        SylowGraph("x", 6, (2, 5), (), ((2, 1), (5, 1)))
    with pytest.raises(ValueError):
        SylowGraph("x", 6, (2, 3), (Arrow(3, 2, 3),), ((2, 1), (3, 3)))


@pytest.mark.parametrize("name, G", catalog_corpus()[:20], ids=[n for n, _ in catalog_corpus()[:20]])
def test_serialization_roundtrip(name, G):
    g = sylow_graph(G, name)
    assert from_json(to_json(g)) == g
    assert from_dot(to_dot(g)) == g
    assert to_dot(from_dot(to_dot(g))) == to_dot(g)


@st.composite
def graphs(draw):
    primes = draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), min_size=1, max_size=5, unique=True))
    primes.sort()
    order = 1
    for p in primes:
        order *= p ** draw(st.integers(1, 4))
    autos, arrows = [], []
    for p in primes:
        targets = draw(st.lists(st.sampled_from([q for q in primes if q != p] or [p]), unique=True))
        targets = [q for q in targets if q != p]
        a = 1
        for q in targets:
            a *= q ** draw(st.integers(1, 2))
        autos.append((p, a))
        arrows += [Arrow(p, q, a) for q in sorted(targets)]
    name = draw(st.text(min_size=1, max_size=12))
    return SylowGraph(name, order, tuple(primes), tuple(sorted(arrows)), tuple(autos))


@given(graphs())
def test_roundtrip_property(g):
    assert from_json(to_json(g)) == g
    assert from_dot(to_dot(g)) == g


def test_json_schema():
    import json
    data = json.loads(to_json(sylow_graph(A8, "A8")))
    assert data == {"group": "A8", "order": "20160", "vertices": [2, 3, 5, 7],
                    "arrows": [{"from": 3, "to": 2, "automiser_order": "8"},
                               {"from": 5, "to": 2, "automiser_order": "4"},
                               {"from": 7, "to": 3, "automiser_order": "3"}],
                    "connected": True, "diameter": 3}


def test_dot_is_canonical():
    text = to_dot(sylow_graph(A8, "A8"))
    assert text.splitlines() == ['digraph "A8" {', "  // order 20160",
                                 '  2 [label="2"];', '  3 [label="3"];', '  5 [label="5"];', '  7 [label="7"];',
                                 '  3 -> 2 [label="8"];', '  5 -> 2 [label="4"];', '  7 -> 3 [label="3"];', "}"]


def test_table_mentions_diameter():
    t = to_table(sylow_graph(catalog.cyclic(30), "C30"))
    assert "none (disconnected)" in t


def test_direct_product_graph_is_union():
    g = sylow_graph(build_group("S3 x C5"))
    assert g.arrow_pairs() == {(3, 2)}
    assert not is_connected(g)
