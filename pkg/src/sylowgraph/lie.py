"""Order arithmetic for groups of Lie type and the arrow predictor.

Nothing here builds a group.  Orders come from closed formulas; the prime
partitions and predicted arrows come from number theory alone.  Every
predicted arrow is one the theory guarantees, so predictions are a subset of
the true arrow set and never claim an arrow is absent.
"""

import math
from dataclasses import dataclass, field

from .arith import factorize, is_prime_power, primitive_primes, prime_set

__all__ = [
    "FAMILIES",
    "LieTypeSpec",
    "SigmaPartition",
    "PredictedArrow",
    "order_psl",
    "order_psu",
    "order_pomega",
    "order_E6",
    "order_E6_classical",
    "group_order",
    "weyl_order",
    "is_fine",
    "sigma_partition_linear",
    "sigma_partition_orthogonal",
    "predicted_edges",
]

FAMILIES = ("A", "2A", "B", "C", "D", "2D", "E6", "2E6", "E7", "E8",
            "F4", "G2", "2B2", "3D4", "2F4", "2G2")

_FIXED_RANK = {"E6": 6, "2E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2,
               "2B2": 2, "3D4": 4, "2F4": 4, "2G2": 2}
_MIN_RANK = {"A": 1, "2A": 2, "B": 2, "C": 2, "D": 3, "2D": 3}
# Suzuki and Ree groups live over odd powers of one characteristic
_FIELD_CHAR = {"2B2": 2, "2F4": 2, "2G2": 3}


@dataclass(frozen=True)
class LieTypeSpec:
    """A simple group of Lie type: family, Lie rank and field ``GF(r^t)``.

    ``rank`` is the rank of the root system, so ``A`` of rank ``l`` is
    ``PSL(l+1, q)`` and ``D`` of rank ``n`` is ``POmega+(2n, q)``.
    """

    family: str
    rank: int
    r: int
    t: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in _FIXED_RANK and self.rank != _FIXED_RANK[self.family]:
            raise ValueError(f"{self.family} has rank {_FIXED_RANK[self.family]}, not {self.rank}")
        if self.rank < _MIN_RANK.get(self.family, 1):
            raise ValueError(f"{self.family} needs rank >= {_MIN_RANK[self.family]}")
        if self.t < 1 or is_prime_power(self.r) != (self.r, 1):
            raise ValueError(f"need r prime and t >= 1, got r={self.r}, t={self.t}")
        need = _FIELD_CHAR.get(self.family)
        if need is not None and (self.r != need or self.t % 2 == 0):
            raise ValueError(f"{self.family} needs q = {need}^(2m+1)")

    @classmethod
    def from_q(cls, family, rank, q):
        pp = is_prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(family, rank, pp[0], pp[1])

    @property
    def q(self):
        return self.r ** self.t

    @property
    def eps(self):
        return -1 if self.family in ("2A", "2D", "2E6") else 1

    def __str__(self):
        if self.family in _FIXED_RANK:
            return f"{self.family}({self.q})"
        return f"{self.family}{self.rank}({self.q})"


@dataclass(frozen=True)
class SigmaPartition:
    sigma1: frozenset
    sigma2: frozenset
    sigma3: frozenset
    provenance: str
    # p in sigma1 -> the exponent j for which it is primitive
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def primes(self):
        return self.sigma1 | self.sigma2 | self.sigma3


@dataclass(frozen=True, order=True)
class PredictedArrow:
    source: int
    target: int
    justification: str = field(compare=False)
    certain: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError("an arrow needs two distinct primes")


# -- orders -----------------------------------------------------------------

def order_psl(n, q):
    return q ** (n * (n - 1) // 2) * math.prod(q ** i - 1 for i in range(2, n + 1)) // math.gcd(n, q - 1)


def order_psu(n, q):
    return (q ** (n * (n - 1) // 2) * math.prod(q ** i - (-1) ** i for i in range(2, n + 1))
            // math.gcd(n, q + 1))


def order_pomega(dim, eps, q):
    """``|POmega^eps(dim, q)|`` for even ``dim = 2n``."""
    if dim % 2:
        raise ValueError("only even dimensions")
    n = dim // 2
    top = q ** n - eps
    return (q ** (n * (n - 1)) * top * math.prod(q ** (2 * i) - 1 for i in range(1, n))
            // math.gcd(4, top))


def order_E6(q, eps=1):
    """``|E6(q)|`` (``eps=+1``) or ``|2E6(q)|`` (``eps=-1``) as a product of
    cyclotomic-type factors, divided by ``d = gcd(3, q - eps)``."""
    e = eps
    d = math.gcd(3, q - e)
    num = (q ** 36 * (q - e) ** 6 * (q + e) ** 4 * (q * q - e * q + 1) ** 2
           * (q * q + e * q + 1) ** 3 * (q * q + 1) ** 2 * (q ** 4 - q * q + 1)
           * (q ** 4 + 1) * ((q ** 5 - e) // (q - e)) * (q ** 6 + e * q ** 3 + 1))
    if num % d:
        raise ArithmeticError("E6 order not divisible by d")
    return num // d


def order_E6_classical(q, eps=1):
    """Degree-product form: ``q^36 prod (q^d - eps^d)`` over degrees 2,5,6,8,9,12."""
    num = q ** 36 * math.prod(q ** k - eps ** k for k in (2, 5, 6, 8, 9, 12))
    return num // math.gcd(3, q - eps)


def group_order(spec):
    q, n, f = spec.q, spec.rank, spec.family
    if f == "A":
        return order_psl(n + 1, q)
    if f == "2A":
        return order_psu(n + 1, q)
    if f in ("B", "C"):
        return q ** (n * n) * math.prod(q ** (2 * i) - 1 for i in range(1, n + 1)) // math.gcd(2, q - 1)
    if f == "D":
        return order_pomega(2 * n, 1, q)
    if f == "2D":
        return order_pomega(2 * n, -1, q)
    if f == "E6":
        return order_E6(q, 1)
    if f == "2E6":
        return order_E6(q, -1)
    if f == "E7":
        return q ** 63 * math.prod(q ** k - 1 for k in (2, 6, 8, 10, 12, 14, 18)) // math.gcd(2, q - 1)
    if f == "E8":
        return q ** 120 * math.prod(q ** k - 1 for k in (2, 8, 12, 14, 18, 20, 24, 30))
    if f == "F4":
        return q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f == "G2":
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if f == "3D4":
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f == "2B2":
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if f == "2G2":
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if f == "2F4":
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    raise ValueError(f"no order formula for {f}")


# -- Weyl groups and fineness --------------------------------------------

def weyl_order(family, rank, standard=False):
    """Order of the Weyl group.

    For ``D`` the default follows the description as a split extension of an
    elementary abelian group of order ``2^n`` by ``S_n``, giving ``2^n n!``;
    ``standard=True`` returns the true ``|W(D_n)| = 2^(n-1) n!``.  Both have
    the same prime divisors, which is all the predictor uses.
    """
    n = rank
    if family == "A":
        return math.factorial(n + 1)
    if family == "D":
        return 2 ** (n - 1 if standard else n) * math.factorial(n)
    if family == "2D":
        return 2 ** (n - 1) * math.factorial(n - 1)
    if family == "E6":
        return 2 * 25920   # twice |PSp4(3)|
    if family == "2E6":
        return 1152        # W(F4)
    if family in ("B", "C"):
        return 2 ** n * math.factorial(n)
    if family == "2A":
        k = (n + 1) // 2
        return 2 ** k * math.factorial(k)
    fixed = {"E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12,
             "3D4": 12, "2B2": 2, "2G2": 2, "2F4": 16}
    if family in fixed:
        return fixed[family]
    raise ValueError(f"unsupported family {family!r}")


def is_fine(spec):
    """False exactly for untwisted ``A_l`` (l > 1), ``D_(2l+1)`` and ``E6``."""
    f, n = spec.family, spec.rank
    if f == "A":
        return n <= 1
    if f == "D":
        return n % 2 == 0
    return f != "E6"


# -- prime partitions ----------------------------------------------------------

def _primitive(q, j):
    # primes primitive for (q, j); none for j = 1 with q = 2
    return primitive_primes(q, j) if q ** j - 1 > 1 else []


def sigma_partition_linear(l, eps, q):
    """Partition of ``pi(L)`` for ``L = PSL(l, q)`` (``eps=+1``) or ``PSU(l, q)``.

    ``sigma1`` collects the primes primitive for ``(q, j)`` with
    ``j <= l < 2j``; in the unitary case ``j`` is replaced by ``2j`` when ``j``
    is odd.  ``sigma3 = {r, 2}`` and ``sigma2`` is what is left.
    """
    if l <= 2:
        raise ValueError("need l > 2")
    pp = is_prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    r = pp[0]
    order = order_psl(l, q) if eps > 0 else order_psu(l, q)
    primes = prime_set(order)
    wit = {}
    for j in range(1, l + 1):
        if not j <= l < 2 * j:
            continue
        k = j if eps > 0 or j % 2 == 0 else 2 * j
        for p in _primitive(q, k):
            wit[p] = j
    s3 = frozenset({r, 2})
    s1 = frozenset(wit) - s3
    s2 = frozenset(primes) - s1 - s3
    return SigmaPartition(s1, s2, s3, "L", {p: wit[p] for p in s1})


def sigma_partition_orthogonal(l, eps, q):
    """Partition of ``pi(L)`` for ``L = POmega^eps(4l+2, q)``."""
    if l < 1:
        raise ValueError("need l >= 1")
    pp = is_prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    r = pp[0]
    primes = prime_set(order_pomega(4 * l + 2, eps, q))
    k = 2 * l + 1 if eps > 0 else 4 * l + 2
    s3 = frozenset({r, 2})
    s1 = frozenset(_primitive(q, k)) - s3
    s2 = frozenset(primes) - s1 - s3
    return SigmaPartition(s1, s2, s3, "O", {p: 2 * l + 1 for p in s1})


# -- predictor -----------------------------------------------------------------

def _arrows_from_sigma(part, r):
    out = set()
    for p in part.sigma2:
        if p != 2:
            out.add(PredictedArrow(p, 2, f"{part.provenance}: odd p in sigma2"))
    for p, j in part.witnesses.items():
        for s in prime_set(j):
            out.add(PredictedArrow(p, s, f"{part.provenance}: sigma1, s | {j}"))
    return out


def _predict_E6(spec):
    q, e, r = spec.q, spec.eps, spec.r
    primes = prime_set(group_order(spec))
    out = set()

    def add(p, s, why):
        if p != s and p in primes and s in primes:
            out.add(PredictedArrow(p, s, why))

    for val in (q ** 4 - q * q + 1, q * q + q + 1, q * q - q + 1, q * q + 1, q ** 4 + 1):
        for s in prime_set(val):
            if s >= 5:
                add(s, 2, "LE1")
    for s in prime_set(q ** 4 + e * q ** 3 + q * q + e * q + 1):
        if s != 5 and (q - e) % s:
            add(s, 5, "LE2")
    add(5, 2, "LE3")
    if r != 2:
        add(r, 2, "LE3: r odd")
    add(3, 2, "LE4")
    # two further claims established inside the LE4 argument
    for p in prime_set(q * q - 1):
        if p != 2:
            add(p, 2, "LE4: p | q^2-1")
    d = math.gcd(3, q - e)
    for p in prime_set((q ** 6 + e * q ** 3 + 1) // d):
        if p != 3:
            add(p, 3, "LE4: Frobenius 9(q^6+eq^3+1)")
    return out


def predicted_edges(spec):
    """Arrows guaranteed to lie in the Sylow graph of the simple group ``spec``.

    Supported: ``E6``/``2E6``, ``A``/``2A`` with ``rank >= 2`` (dimension at
    least 3) and ``D``/``2D`` of odd rank.
    """
    f, q, r = spec.family, spec.q, spec.r
    if f in ("E6", "2E6"):
        return _predict_E6(spec)
    if f in ("A", "2A"):
        l = spec.rank + 1
        if l <= 2:
            raise ValueError("linear/unitary prediction needs dimension > 2")
        part = sigma_partition_linear(l, spec.eps, q)
        out = _arrows_from_sigma(part, r)
        if r > 2:
            # the torus acts faithfully on a Sylow r-subgroup
            for s in prime_set(r - 1):
                out.add(PredictedArrow(r, s, "L: r -> pi(r-1)"))
        return out
    if f in ("D", "2D"):
        if spec.rank % 2 == 0:
            raise ValueError("orthogonal prediction needs D of odd rank 2l+1")
        part = sigma_partition_orthogonal((spec.rank - 1) // 2, spec.eps, q)
        out = _arrows_from_sigma(part, r)
        if r > 2:
            out.add(PredictedArrow(r, 2, "O: r odd"))
        return out
    raise ValueError(f"no predictor for family {f}")


def pi_order(spec):
    return sorted(factorize(group_order(spec)).factors)
