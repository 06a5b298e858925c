import math

import pytest

from sylowgraph import catalog
from sylowgraph.groups import PermGroup
from sylowgraph.lie import order_psl


def exact_order(G):
    # rebuild without the order hint: deterministic Schreier-Sims
    return PermGroup(G.degree, G.generators).order


@pytest.mark.parametrize("n", range(1, 9))
def test_symmetric_alternating(n):
    assert exact_order(catalog.symmetric(n)) == math.factorial(n)
    if n >= 2:
        assert exact_order(catalog.alternating(n)) == math.factorial(n) // 2


def test_small_constructors():
    assert catalog.alternating(8).order == 20160
    assert catalog.direct_product(catalog.symmetric(3), catalog.cyclic(5)).order == 30
    assert exact_order(catalog.dihedral(10)) == 10
    assert exact_order(catalog.dihedral(4)) == 4
    assert exact_order(catalog.frobenius(11, 5)) == 55
    assert catalog.cyclic(12).is_abelian()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32])
def test_psl2_pgl2(q):
    assert exact_order(catalog.psl2(q)) == q * (q * q - 1) // math.gcd(2, q - 1)
    assert exact_order(catalog.pgl2(q)) == q * (q * q - 1)


def test_field_extensions():
    assert exact_order(catalog.psl2_field_extension(27, 3)) == 29484 == 9828 * 3
    assert exact_order(catalog.psl2_field_extension(32, 5)) == 163680 == 32 * 33 * 31 * 5
    with pytest.raises(ValueError):
        catalog.psl2_field_extension(27, 2)


@pytest.mark.parametrize("m, q", [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (3, 5)])
def test_psl(m, q):
    assert exact_order(catalog.psl(m, q)) == order_psl(m, q)


def test_psl_known_values():
    assert catalog.psl(4, 2).order == 20160 == catalog.alternating(8).order
    assert catalog.psl(3, 2).order == 168
    assert catalog.psl(3, 3).order == 5616


def test_psp4():
    assert exact_order(catalog.psp4(3)) == 25920
    assert exact_order(catalog.psp4(2)) == 720


@pytest.mark.parametrize("n, order", [(11, 7920), (12, 95040), (22, 443520), (23, 10200960), (24, 244823040)])
def test_mathieu(n, order):
    G = catalog.mathieu(n)
    assert G.order == order == catalog.mathieu_order(n)
    assert G.is_transitive()


def test_limits():
    with pytest.raises(ValueError):
        catalog.psl2(6)
    with pytest.raises(ValueError):
        catalog.psl(5, 2)
    with pytest.raises(ValueError):
        catalog.mathieu(13)
