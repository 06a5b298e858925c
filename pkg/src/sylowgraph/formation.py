"""Covering formations given by prime relations, and membership tests.

A :class:`FormationSpec` fixes a set of primes ``pi`` and, for each ``p`` in
it, a set ``pi(p)`` with ``p in pi(p) <= pi`` and ``q in pi(p) <=> p in pi(q)``.
Membership is decided only where there is an effective test: direct
products of Hall parts over a prime partition (any group), and the
nilpotent-Hall-pair description in the soluble case.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .arith import prime_set
from .groups import Subgroup
from .subgroups import (as_subgroup, is_soluble, nilpotent_hall_pair_exists, normal_closure,
                        normalizer, sylow)

__all__ = [
    "FormationSpec",
    "PrimePartition",
    "validate_spec",
    "sigma_family_member",
    "prime_components",
    "in_product_class",
    "in_E_sigma_n",
    "soluble_covering_membership",
    "NClosureReport",
    "n_closure_check",
]


@dataclass(frozen=True)
class PrimePartition:
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError(f"blocks overlap in {sorted(seen & b)}")
            seen |= b
        object.__setattr__(self, "blocks", blocks)

    @property
    def primes(self):
        return frozenset().union(*self.blocks)

    def block_of(self, p):
        for b in self.blocks:
            if p in b:
                return b
        return None

    def __str__(self):
        return " | ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)


@dataclass(frozen=True)
class FormationSpec:
    pi: frozenset
    relation: dict = field(hash=False)

    @classmethod
    def from_partition(cls, partition):
        if not isinstance(partition, PrimePartition):
            partition = PrimePartition(partition)
        rel = {p: frozenset(b) for b in partition.blocks for p in b}
        return cls(partition.primes, rel)

    @classmethod
    def from_relation(cls, relation):
        rel = {p: frozenset(v) for p, v in relation.items()}
        return cls(frozenset(rel), rel)

    def related(self, p, q):
        return q in self.relation.get(p, ())


def validate_spec(spec):
    """Conditions ``p in pi(p) <= pi`` and symmetry of the relation."""
    if set(spec.relation) != set(spec.pi):
        return False
    for p in spec.pi:
        block = spec.relation[p]
        if p not in block or not block <= spec.pi:
            return False
        if any(p not in spec.relation.get(q, ()) for q in block):
            return False
    return True


def sigma_family_member(spec, sigma):
    """True iff no two distinct primes of ``sigma`` are related."""
    sigma = set(sigma)
    if not sigma <= spec.pi:
        raise ValueError(f"{sorted(sigma - spec.pi)} not in the characteristic")
    return not any(spec.related(p, q) for p, q in combinations(sorted(sigma), 2))


def prime_components(spec):
    """Classes of the transitive closure of the relation, sorted by least prime."""
    left = set(spec.pi)
    out = []
    while left:
        start = min(left)
        comp = {start}
        queue = [start]
        for p in queue:
            for q in spec.relation.get(p, ()):
                if q not in comp:
                    comp.add(q)
                    queue.append(q)
        left -= comp
        out.append(frozenset(comp))
    return out


def _pi(G):
    return prime_set(G.order) if G.order > 1 else set()


def in_product_class(G, partition):
    """Is ``G`` the direct product of its Hall ``tau``-subgroups, one per block?

    For each block meeting ``pi(G)`` the normal closure of the block's
    Sylow subgroups must itself be a group of that block.
    """
    if not isinstance(partition, PrimePartition):
        partition = PrimePartition(partition)
    primes = _pi(G)
    missing = primes - partition.primes
    if missing:
        raise ValueError(f"primes {sorted(missing)} of |G| are not covered by the partition")
    for block in partition.blocks:
        here = sorted(block & primes)
        if not here:
            continue
        gens = []
        for p in here:
            gens.extend(sylow(G, p).generators)
        H = Subgroup(as_subgroup(G), gens)
        if not prime_set(normal_closure(G, H).order) <= block:
            return False
    return True


def in_E_sigma_n(G, sigma):
    """Does ``G`` have a nilpotent Hall ``sigma``-subgroup (``|sigma| = 2``)?"""
    sigma = set(sigma)
    if len(sigma) != 2:
        raise ValueError("sigma must contain exactly two primes")
    present = sorted(sigma & _pi(G))
    if len(present) < 2:
        return True
    return nilpotent_hall_pair_exists(G, present[0], present[1])


def soluble_covering_membership(G, spec):
    """Membership of a soluble ``G`` in the formation of ``spec``."""
    primes = _pi(G)
    if not primes <= spec.pi:
        raise ValueError(f"primes {sorted(primes - spec.pi)} lie outside the characteristic")
    if not is_soluble(G):
        raise ValueError("G is not soluble")
    for p, q in combinations(sorted(primes), 2):
        if not spec.related(p, q) and not in_E_sigma_n(G, {p, q}):
            return False
    return True


@dataclass(frozen=True)
class NClosureReport:
    group_member: bool
    normalizer_members: tuple   # ((p, bool), ...)
    normalizer_orders: tuple    # ((p, |N_G(G_p)|), ...)

    @property
    def all_normalizers(self):
        return all(v for _, v in self.normalizer_members)

    @property
    def holds(self):
        return self.group_member == self.all_normalizers


def n_closure_check(G, membership):
    """Compare ``G in X`` with ``N_G(G_p) in X`` for every prime ``p``."""
    members, orders = [], []
    for p in sorted(_pi(G)):
        N = normalizer(G, sylow(G, p))
        members.append((p, bool(membership(N))))
        orders.append((p, N.order))
    return NClosureReport(bool(membership(G)), tuple(members), tuple(orders))
