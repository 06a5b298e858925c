"""Integer arithmetic: primality, factorization, p-parts, primitive prime divisors."""

import math
import random
from functools import lru_cache
from dataclasses import dataclass, field

__all__ = [
    "FactorizationError",
    "Factorization",
    "is_prime",
    "factorize",
    "prime_set",
    "p_part",
    "multiplicative_order",
    "is_primitive_prime",
    "primitive_primes",
    "zsigmondy",
    "primitive_part",
    "is_zsigmondy_exception",
    "is_prime_power",
]

TRIAL_BOUND = 100_000
RHO_ITERATIONS = 200_000
# cofactor size (bits) above which an unsplit composite goes to ECM
ECM_LIMIT_BITS = 400
# primitive primes below this are found by a batched gcd
ZSIG_SIEVE = 1_000_000

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1))]
# Miller-Rabin with these bases is exact below 3.3e24
_MR_BASES = _SMALL_PRIMES[:13]


class FactorizationError(ArithmeticError):
    """Factorization gave up; ``partial`` holds what was found."""

    def __init__(self, message, partial, cofactor):
        super().__init__(message)
        self.partial = partial
        self.cofactor = cofactor


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: dict = field(default_factory=dict)

    def __post_init__(self):
        prod = math.prod(p ** e for p, e in self.factors.items())
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self):
        return sorted(self.factors)

    def p_part(self, p):
        return p ** self.factors.get(p, 0)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items()))


def is_prime(n):
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < 3_317_044_064_679_887_385_961_981 else _SMALL_PRIMES[:40]
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n, rng, limit):
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        steps = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            steps += r
            if steps > limit:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _ecm_primes(m):
    # elliptic-curve method from sympy for cofactors that defeat rho;
    # returns the distinct prime factors, or None
    if m.bit_length() > ECM_LIMIT_BITS:
        return None
    from sympy.ntheory import ecm
    # small stage-1 bounds first: cofactors here usually have 10-20 digit factors
    for b1, b2, curves in ((1000, 50_000, 50), (2000, 200_000, 100), (20_000, 2_000_000, 200)):
        try:
            found = sorted(int(f) for f in ecm(m, B1=b1, B2=b2, max_curve=curves, seed=1))
        except ValueError:
            continue
        if found and all(is_prime(f) for f in found):
            return found
    return None


def factorize(n, trial_bound=TRIAL_BOUND, rho_iterations=RHO_ITERATIONS):
    """Complete factorization of ``n >= 1``.

    Trial division up to ``trial_bound``, then Miller-Rabin and Pollard-Brent
    rho, then ECM for cofactors of at most ``ECM_LIMIT_BITS`` bits.  Raises
    :class:`FactorizationError` if a composite cofactor resists all of them.
    """
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    value = n
    factors = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = _SMALL_PRIMES[-1] + 2
    while d <= trial_bound and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1 and d * d > n:
        factors[n] = factors.get(n, 0) + 1
        n = 1
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _brent(m, rng, rho_iterations)
        if f is None:
            ps = _ecm_primes(m)
            if ps is not None:
                for p in ps:
                    while m % p == 0:
                        factors[p] = factors.get(p, 0) + 1
                        m //= p
                continue
            raise FactorizationError(
                f"could not split {m} within {rho_iterations} rho steps",
                dict(sorted(factors.items())), m)
        stack += [f, m // f]
    return Factorization(value, dict(sorted(factors.items())))


def prime_set(n):
    """pi(n): the set of primes dividing ``n``."""
    return set(factorize(n).factors)


def p_part(n, p):
    """Largest power of ``p`` dividing ``n``."""
    if n == 0:
        raise ValueError("p_part(0) is undefined")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_prime_power(q):
    """Return ``(r, t)`` with ``q = r**t``, or ``None``."""
    if q < 2:
        return None
    f = factorize(q).factors
    if len(f) != 1:
        return None
    (r, t), = f.items()
    return r, t


def multiplicative_order(a, m):
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m == 1:
        return 1
    phi = 1
    for p, e in factorize(m).factors.items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for p in factorize(phi).factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def is_primitive_prime(r, a, n):
    """``r`` divides ``a**n - 1`` but no ``a**e - 1`` with ``1 <= e < n``."""
    if a % r == 0:
        return False
    return multiplicative_order(a % r, r) == n


def _cyclotomic_value(n, a):
    # Phi_n(a) = prod_{d | n} (a^d - 1)^mu(n/d)
    num, den = 1, 1
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 1:
            num *= a ** d - 1
        elif mu == -1:
            den *= a ** d - 1
    return num // den


def _mobius(k):
    f = factorize(k).factors
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def primitive_primes(a, n):
    """All primes primitive with respect to ``(a, n)``, sorted."""
    if a < 2 or n < 1:
        raise ValueError("need a >= 2 and n >= 1")
    m = _cyclotomic_value(n, a)
    return sorted(r for r in factorize(m).factors if is_primitive_prime(r, a, n))


def is_zsigmondy_exception(a, n):
    """True when ``a**n - 1`` has no primitive prime divisor (``a, n >= 2``).

    The exceptions are ``(a, n) = (2, 6)`` and ``n = 2`` with ``a + 1`` a power
    of two (for prime ``a``: a Mersenne prime).
    """
    if n == 6 and a == 2:
        return True
    return n == 2 and (a + 1) & a == 0


@lru_cache(maxsize=None)
def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\0\0"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if flags[i]]


@lru_cache(maxsize=None)
def _progression_primes(n, limit):
    # primes = 1 (mod n) up to limit, and their product for batched gcds
    ps = [r for r in _sieve(limit) if r % n == 1]
    return ps, _tree_product(ps)


def _tree_product(xs):
    # balanced product; a left fold over many factors is quadratic
    xs = list(xs) or [1]
    while len(xs) > 1:
        xs = [xs[i] * xs[i + 1] if i + 1 < len(xs) else xs[i] for i in range(0, len(xs), 2)]
    return xs[0]


def primitive_part(a, n):
    """The largest divisor of ``a**n - 1`` built only from primitive primes."""
    if a < 2 or n < 1:
        raise ValueError("need a >= 2 and n >= 1")
    m = _cyclotomic_value(n, a)
    # a prime dividing Phi_n(a) is primitive unless it divides n
    for p in factorize(n).factors:
        while m % p == 0 and not is_primitive_prime(p, a, n):
            m //= p
    return m


def zsigmondy(a, n):
    """Smallest prime primitive with respect to ``(a, n)``, or ``None``.

    Primitive primes are ``1 (mod n)``; those below ``ZSIG_SIEVE`` are found
    with one gcd against their product.  Past that the primitive part is
    factored completely, so this raises :class:`FactorizationError` only
    when :func:`factorize` gives up.
    """
    if a < 2 or n < 2:
        raise ValueError("zsigmondy needs a >= 2 and n >= 2")
    m = primitive_part(a, n)
    if m == 1:
        return None
    ps, prod = _progression_primes(n, ZSIG_SIEVE)
    g = math.gcd(m, prod)
    if g > 1:
        return next(r for r in ps if g % r == 0)
    return min(factorize(m, trial_bound=1000, rho_iterations=5_000).factors)
