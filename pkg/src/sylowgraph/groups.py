"""Permutation groups given by generators, backed by a stabilizer chain.

The chain is built with Schreier-Sims.  Without a known order we run the
deterministic incremental version; when the order is known in advance (for
instance when re-basing an existing group, or when a search has already
counted the result) we use random sifting, which stops as soon as the chain
accounts for the full order.  Both routes yield a verified chain: every
transversal element is a genuine group element, and the product of the
basic orbit lengths equals the group order.
"""

import math
import random

from .config import BudgetExceeded, budgets
from .perm import Permutation, inv, mul

__all__ = ["StabChain", "PermGroup", "Subgroup", "group_from_generators"]


def _first_moved(g):
    for i, x in enumerate(g):
        if i != x:
            return i
    return None


def _orbit_transversal(point, gens, ident):
    trans = {point: ident}
    queue = [point]
    for beta in queue:
        u = trans[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in trans:
                trans[gamma] = mul(u, s)
                queue.append(gamma)
    return trans


class _Level:
    __slots__ = ("base", "gens", "trans", "_itrans")

    def __init__(self, base, gens, ident):
        self.base = base
        self.gens = list(gens)
        self.trans = _orbit_transversal(base, self.gens, ident)
        self._itrans = None

    def extend(self, g, ident):
        self.gens.append(g)
        self.trans = _orbit_transversal(self.base, self.gens, ident)
        self._itrans = None

    @property
    def itrans(self):
        if self._itrans is None:
            self._itrans = {k: inv(u) for k, u in self.trans.items()}
        return self._itrans


class StabChain:
    """Base, strong generators and basic orbit transversals.

    Level ``i`` describes ``G^(i)``, the pointwise stabilizer of the first
    ``i`` base points.  ``trans[i][beta]`` maps ``base[i]`` to ``beta``.
    """

    def __init__(self, degree, levels):
        self.degree = degree
        self.levels = levels
        self.identity = tuple(range(degree))

    @property
    def base(self):
        return [lv.base for lv in self.levels]

    @property
    def order(self):
        return math.prod(len(lv.trans) for lv in self.levels)

    def orbit_sizes(self):
        return [len(lv.trans) for lv in self.levels]

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; return (residue, failing level)."""
        levels = self.levels
        for j in range(start, len(levels)):
            lv = levels[j]
            beta = g[lv.base]
            if beta not in lv.trans:
                return g, j
            if beta != lv.base:
                g = mul(g, lv.itrans[beta])
        return g, len(levels)

    def contains(self, g):
        h, j = self.strip(g)
        return j == len(self.levels) and h == self.identity

    def strong_generators(self):
        seen = set()
        out = []
        for lv in self.levels:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def random_element(self, rng):
        g = self.identity
        for lv in reversed(self.levels):
            u = rng.choice(list(lv.trans.values()))
            g = mul(g, u)
        return g

    def elements(self):
        """Every element once, ordered lexicographically by base images."""
        levels = self.levels
        m = len(levels)
        if m == 0:
            yield self.identity
            return
        pairs = [sorted(lv.trans.items()) for lv in levels]

        # An element is s_{m-1} ... s_1 s_0 (applied left to right) with s_i
        # in the level-i transversal; c holds s_{i-1} ... s_0, so choosing s_i
        # sends base[i] to c[delta].
        def walk_sorted(i, c):
            opts = sorted(((c[d], u) for d, u in pairs[i]), key=lambda t: t[0])
            if i == m - 1:
                for _, u in opts:
                    yield mul(u, c)
                return
            for _, u in opts:
                yield from walk_sorted(i + 1, mul(u, c))

        yield from walk_sorted(0, self.identity)


def schreier_sims(degree, gens, base_prefix=()):
    """Deterministic Schreier-Sims (incremental form)."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens if tuple(g) != ident]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = []
    for i, b in enumerate(base):
        fixing = [g for g in gens if all(g[c] == c for c in base[:i])]
        levels.append(_Level(b, fixing, ident))
    chain = StabChain(degree, levels)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        for beta, u in list(lv.trans.items()):
            for s in list(lv.gens):
                x = mul(u, s)
                ug = lv.trans[s[beta]]
                if x == ug:
                    continue
                h, j = chain.strip(mul(x, inv(ug)), i + 1)
                if j == len(levels) and h == ident:
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(h), [], ident))
                for k in range(i + 1, j + 1):
                    levels[k].extend(h, ident)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    _trim(levels, len(base_prefix))
    return chain


def _trim(levels, keep):
    # trailing levels with a trivial stabilizer carry no information
    while len(levels) > keep and len(levels[-1].trans) == 1:
        levels.pop()


class _ProductReplacement:
    def __init__(self, gens, ident, rng, size=10, warmup=40):
        state = list(gens) or [ident]
        while len(state) < size:
            state.append(state[len(state) % max(1, len(gens))] if gens else ident)
        self.state = state
        self.acc = ident
        self.rng = rng
        for _ in range(warmup):
            self.next()

    def next(self):
        st = self.state
        i, j = self.rng.sample(range(len(st)), 2)
        if self.rng.random() < 0.5:
            st[i] = mul(st[i], st[j])
        else:
            st[i] = mul(st[i], inv(st[j]))
        self.acc = mul(self.acc, st[i])
        return self.acc


def random_schreier_sims(degree, gens, order, base_prefix=(), rng=None, max_tries=20000):
    """Schreier-Sims by random sifting; stops once the chain has ``order``.

    Falls back to the deterministic algorithm if the target is not reached
    (which signals a wrong ``order``), and raises in that case.
    """
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens if tuple(g) != ident]
    rng = rng or random.Random(budgets.seed)
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = []
    for i, b in enumerate(base):
        fixing = [g for g in gens if all(g[c] == c for c in base[:i])]
        levels.append(_Level(b, fixing, ident))
    chain = StabChain(degree, levels)
    if chain.order == order:
        _trim(levels, len(base_prefix))
        return chain
    source = _ProductReplacement(gens, ident, rng)
    tries = 0
    while chain.order < order:
        tries += 1
        if tries > max_tries:
            chain = schreier_sims(degree, gens, base_prefix)
            if chain.order != order:
                raise ValueError(f"claimed order {order} but group has order {chain.order}")
            return chain
        h, j = chain.strip(source.next())
        if j == len(levels) and h == ident:
            continue
        if j == len(levels):
            levels.append(_Level(_first_moved(h), [], ident))
        for k in range(0, j + 1):
            levels[k].extend(h, ident)
    if chain.order != order:
        raise ValueError(f"claimed order {order} but chain reached {chain.order}")
    _trim(levels, len(base_prefix))
    return chain


class PermGroup:
    """A permutation group on ``{0, ..., degree-1}`` given by generators."""

    def __init__(self, degree, generators, *, order=None, base=(), name=None, _chain=None):
        gens = []
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        if _chain is not None:
            self._chain = _chain
        elif order is not None:
            self._chain = random_schreier_sims(degree, gens, order, base)
        else:
            self._chain = schreier_sims(degree, gens, base)
        self._rebased = {}

    # -- basic facts ------------------------------------------------------

    @property
    def order(self):
        return self._chain.order

    @property
    def chain(self):
        return self._chain

    @property
    def base(self):
        return self._chain.base

    @property
    def identity(self):
        return Permutation._raw(range(self.degree))

    def is_trivial(self):
        return self.order == 1

    def is_abelian(self):
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def contains(self, g):
        if len(g) != self.degree:
            raise ValueError(f"degree mismatch: {len(g)} vs {self.degree}")
        return self._chain.contains(tuple(g))

    __contains__ = contains

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self.degree == other.degree and self.order == other.order
                and self.is_subgroup_of(other) and other.is_subgroup_of(self))

    def __hash__(self):
        return hash((self.degree, self.order))

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    # -- orbits and elements ---------------------------------------------

    def orbit(self, point):
        seen = {point}
        queue = [point]
        for a in queue:
            for g in self.generators:
                b = g[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            orb = self.orbit(min(left))
            left.difference_update(orb)
            out.append(orb)
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    def random_element(self, rng):
        return Permutation._raw(self._chain.random_element(rng))

    def elements(self):
        """Stream every element once, in base-image lexicographic order."""
        if self.order > budgets.max_order:
            raise BudgetExceeded(
                f"|G| = {self.order} exceeds enumeration budget {budgets.max_order}")
        for g in self._chain.elements():
            yield Permutation._raw(g)

    # -- re-basing -------------------------------------------------------

    def chain_with_base(self, prefix):
        """A stabilizer chain whose base starts with ``prefix``."""
        prefix = tuple(prefix)
        if tuple(self.base[:len(prefix)]) == prefix:
            return self._chain
        chain = self._rebased.get(prefix)
        if chain is None:
            rng = random.Random(budgets.seed)
            chain = random_schreier_sims(
                self.degree, self._chain.strong_generators(), self.order, prefix, rng)
            self._rebased[prefix] = chain
        return chain

    def subgroup(self, generators, *, order=None, name=None):
        """The subgroup generated by ``generators`` (checked for membership)."""
        return Subgroup(self, generators, order=order, name=name)


class Subgroup(PermGroup):
    """A subgroup of a known parent group, on the same points."""

    def __init__(self, parent, generators, *, order=None, name=None, base=(), _chain=None):
        gens = list(generators)
        for g in gens:
            if not parent.contains(g):
                raise ValueError(f"{Permutation._raw(g)} is not in the parent group")
        super().__init__(parent.degree, gens, order=order, name=name, base=base, _chain=_chain)
        self.parent = parent

    @property
    def group(self):
        return self


def group_from_generators(degree, gens, name=None):
    """Build a :class:`PermGroup`; base points are smallest-moved-first."""
    return PermGroup(degree, gens, name=name)
