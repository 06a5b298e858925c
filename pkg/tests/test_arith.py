import math

import pytest
from hypothesis import given, settings, strategies as st

from sylowgraph.arith import (Factorization, FactorizationError, factorize, is_prime, is_prime_power,
                              is_primitive_prime, is_zsigmondy_exception, multiplicative_order, p_part,
                              prime_set, primitive_part, primitive_primes, zsigmondy)
from sylowgraph.oracles import bf_prime_factors, bf_primitive_prime


def test_factorize_examples():
    assert factorize(60).factors == {2: 2, 3: 1, 5: 1}
    assert factorize(1).factors == {}
    assert factorize(10200960).factors == bf_prime_factors(10200960) == {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}
    assert str(factorize(20160)) == "2^6 * 3^2 * 5 * 7"


@given(st.integers(1, 10 ** 9))
def test_factorize_matches_trial_division(n):
    assert factorize(n).factors == bf_prime_factors(n)


@given(st.integers(-5, 10 ** 6))
def test_is_prime_small(n):
    assert is_prime(n) == (n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1)))


def test_large_factorizations():
    f7 = 2 ** 128 + 1
    assert factorize(f7).factors == {59649589127497217: 1, 5704689200685129054721: 1}
    # a prime square and a semiprime with two 20-digit factors
    p, q = 10 ** 19 + 51, 10 ** 19 + 87
    assert is_prime(p) and is_prime(q)
    assert factorize(p * p).factors == {p: 2}
    assert factorize(p * q * 12).factors == {2: 2, 3: 1, p: 1, q: 1}


def test_factorization_error_reports_partial():
    from sympy import nextprime
    p, q = nextprime(2 ** 210), nextprime(2 ** 211)
    with pytest.raises(FactorizationError) as info:
        factorize(6 * p * q, rho_iterations=50)
    assert info.value.partial == {2: 1, 3: 1}
    assert info.value.cofactor == p * q


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, {2: 1, 3: 1})
    with pytest.raises(ValueError):
        factorize(0)


def test_helpers():
    assert p_part(7920, 2) == 16
    assert prime_set(7920) == {2, 3, 5, 11}
    assert is_prime_power(27) == (3, 3)
    assert is_prime_power(12) is None
    assert multiplicative_order(2, 7) == 3
    assert is_primitive_prime(5, 2, 4)
    assert not is_primitive_prime(3, 2, 4)


def test_zsigmondy_examples():
    assert zsigmondy(2, 6) is None
    assert zsigmondy(3, 2) is None
    assert zsigmondy(7, 2) is None
    assert zsigmondy(2, 4) == 5
    assert zsigmondy(2, 3) == 7


@pytest.mark.parametrize("a", range(2, 13))
@pytest.mark.parametrize("n", range(2, 13))
def test_zsigmondy_vs_oracle(a, n):
    assert zsigmondy(a, n) == bf_primitive_prime(a, n)


@pytest.mark.parametrize("a, n", [(2, 30), (3, 29), (10, 30), (43, 23), (47, 29), (50, 30)])
def test_zsigmondy_hard_cases(a, n):
    r = zsigmondy(a, n)
    assert r is not None and r % n == 1 and is_primitive_prime(r, a, n)
    # nothing smaller in the progression is primitive (checked below 10^6)
    assert all(not is_primitive_prime(s, a, n) for s in range(n + 1, min(r, 10 ** 6), n) if is_prime(s))


def test_exception_set():
    assert is_zsigmondy_exception(2, 6)
    assert is_zsigmondy_exception(31, 2)
    assert is_zsigmondy_exception(15, 2)   # composite base, 15 + 1 = 16
    assert not is_zsigmondy_exception(5, 2)
    assert not is_zsigmondy_exception(2, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.integers(1, 12))
def test_primitive_part_divides(a, n):
    m = primitive_part(a, n)
    assert (a ** n - 1) % m == 0
    assert sorted(prime_set(m)) == primitive_primes(a, n) if m > 1 else primitive_primes(a, n) == []


def test_invalid_arguments():
    with pytest.raises(ValueError):
        zsigmondy(1, 5)
    with pytest.raises(ValueError):
        zsigmondy(2, 1)
