import pytest

from sylowgraph.fields import FiniteField

QS = [q for q in range(2, 65) if len({p for p in range(2, q + 1) if q % p == 0
                                       and all(p % d for d in range(2, p))}) == 1]


@pytest.mark.parametrize("q", QS)
def test_field_axioms(q):
    F = FiniteField(q)
    els = list(F.elements())
    assert len(els) == q
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # distributivity and associativity on a sample grid
    sample = els[:: max(1, q // 9)]
    for a in sample:
        for b in sample:
            assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@pytest.mark.parametrize("q", QS)
def test_primitive_element_and_frobenius(q):
    F = FiniteField(q)
    w = F.primitive_element
    powers = {F.pow(w, k) for k in range(q - 1)}
    assert powers == set(range(1, q))
    for a in F.elements():
        # x -> x^r is additive and x^q = x
        assert F.frobenius(a, F.t) == a
        assert F.frobenius(F.add(a, w), 1) == F.add(F.frobenius(a, 1), F.frobenius(w, 1))


def test_squares():
    F = FiniteField(7)
    assert {a for a in range(1, 7) if F.is_square(a)} == {1, 2, 4}
    assert all(FiniteField(8).is_square(a) for a in range(8))


def test_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        FiniteField(12)
    with pytest.raises(ZeroDivisionError):
        FiniteField(5).inv(0)
