"""Sylow subgroups, normalizers, centralizers and related constructions.

Normalizers and centralizers come from :func:`sylowgraph.search.subgroup_search`
rather than a scan of every element; see the module notes there.  Everything
else is built on top of those two searches and on Schreier-Sims.
"""

import random

from .arith import factorize, p_part
from .config import BudgetExceeded, budgets
from .groups import PermGroup, Subgroup, schreier_sims
from .perm import Permutation, inv, mul
from .search import CommutingRefiner, OrbitalRefiner, orbitals, subgroup_search

__all__ = [
    "as_subgroup",
    "conjugate_subgroup",
    "sylow",
    "normalizer",
    "centralizer",
    "centralizer_element",
    "center",
    "is_real",
    "real_witness",
    "extended_centralizer",
    "normal_closure",
    "derived_series",
    "is_soluble",
    "is_normal",
    "nilpotent_hall_pair_exists",
    "frattini_product_order",
    "cyclic_subgroup",
]


def _conj(h, g):
    # g^-1 h g on raw tuples
    out = [0] * len(h)
    for i, x in enumerate(h):
        out[g[i]] = g[x]
    return tuple(out)


def as_subgroup(G, H=None):
    """View ``H`` (default: ``G`` itself) as a :class:`Subgroup` of ``G``."""
    if H is None:
        H = G
    if isinstance(H, Subgroup) and H.parent is G:
        return H
    return Subgroup(G, H.generators, name=H.name, _chain=H.chain)


def cyclic_subgroup(G, z):
    z = Permutation._raw(z)
    gens = [] if z.is_identity() else [z]
    return Subgroup(G, gens, order=z.order())


def conjugate_subgroup(H, g):
    """``H^g``: generated by ``g^-1 h g`` for the generators ``h`` of ``H``."""
    parent = H.parent if isinstance(H, Subgroup) else H
    if not parent.contains(g):
        raise ValueError(f"{Permutation._raw(g)} is not in the parent group")
    gens = [Permutation._raw(_conj(h, g)) for h in H.generators]
    return Subgroup(parent, gens, order=H.order)


def is_normal(G, N):
    return all(N.contains(_conj(n, s)) for n in N.generators for s in G.generators)


# -- base choices ------------------------------------------------------------

def _centralizer_prefix(H):
    # one point per nontrivial H-orbit, big orbits first: fixing its image
    # forces the whole orbit under a commuting map
    orbs = [o for o in H.orbits() if len(o) > 1]
    orbs.sort(key=lambda o: (-len(o), o[0]))
    return [o[0] for o in orbs]


def _normalizer_prefix(H):
    n = H.degree
    colour, sizes = orbitals([tuple(h) for h in H.generators], n)
    orbs = sorted(H.orbits(), key=lambda o: (-len(o), o[0]))
    if len(orbs[0]) == 1:
        return []
    chosen = [orbs[0][0]]
    left = set(range(n)) - {chosen[0]}
    # greedily take the point whose orbitals with the chosen points are
    # rarest; small orbitals leave the refiner few choices
    while left:
        best = min(left, key=lambda x: (sorted(sizes[colour[c][x]] for c in chosen), x))
        if all(sizes[colour[c][best]] == n for c in chosen) and len(chosen) > 1:
            break
        chosen.append(best)
        left.discard(best)
        if len(chosen) >= 2 * len(orbs) + 8:
            break
    return chosen


# -- normalizers and centralizers -----------------------------------------

def normalizer(G, H):
    """``N_G(H)`` as a :class:`Subgroup` of ``G``."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    if H.is_trivial() or H.order == G.order:
        return as_subgroup(G)
    hgens = [tuple(h) for h in H.generators]
    hchain = H.chain

    def test(g):
        return all(hchain.contains(_conj(h, g)) for h in hgens)

    return subgroup_search(G, test, OrbitalRefiner(hgens, G.degree),
                           _normalizer_prefix(H), known=H, name="N")


def centralizer(G, H):
    """``C_G(H)``; elements commuting with every generator of ``H``."""
    hgens = [tuple(h) for h in H.generators if not Permutation._raw(h).is_identity()]
    if not hgens:
        return as_subgroup(G)
    if all(mul(a, h) == mul(h, a) for a in G.generators for h in hgens):
        return as_subgroup(G)

    def test(g):
        return all(mul(g, h) == mul(h, g) for h in hgens)

    return subgroup_search(G, test, CommutingRefiner(hgens, G.degree),
                           _centralizer_prefix(H), name="C")


def centralizer_element(G, z):
    return centralizer(G, cyclic_subgroup(G, z))


def center(H):
    """``Z(H)``."""
    if H.is_abelian():
        return as_subgroup(H)
    return centralizer(H, H)


# -- Sylow subgroups ---------------------------------------------------------

def _p_element(g, p):
    """The p-part of ``g`` (a power of ``g`` of p-power order)."""
    g = Permutation._raw(g)
    o = g.order()
    return g ** (o // p_part(o, p))


def sylow(G, p, rng=None):
    """A Sylow ``p``-subgroup of ``G``; trivial when ``p`` does not divide ``|G|``.

    Start from the p-part of a random element and ascend: if ``Q`` is not
    yet Sylow then ``p`` divides ``|N_G(Q) : Q|``, so some p-element of
    ``N_G(Q)`` lies outside ``Q`` and ``Q`` grows.
    """
    target = p_part(G.order, p)
    ident = G.identity
    if target == 1:
        return Subgroup(G, [], order=1, name=f"Syl{p}")
    rng = rng or random.Random(budgets.seed + p)
    x = ident
    for _ in range(1000):
        x = _p_element(G.random_element(rng), p)
        if not x.is_identity():
            break
    if x.is_identity():
        # every group of order divisible by p has an element of order p;
        # fall back to the generators' powers
        for g in G.generators:
            x = _p_element(g, p)
            if not x.is_identity():
                break
    gens = [x]
    Q = Subgroup(G, gens, order=x.order())
    while Q.order < target:
        N = normalizer(G, Q)
        grown = None
        for _ in range(20000):
            y = _p_element(N.random_element(rng), p)
            if not Q.contains(y):
                grown = y
                break
        if grown is None:
            raise BudgetExceeded(f"Sylow {p} ascent stalled at order {Q.order}")
        gens.append(grown)
        # Q is normal in N and y is a p-element, so <Q, y> is a p-group
        Q = Subgroup(G, gens, _chain=schreier_sims(G.degree, gens))
        gens = list(Q.chain.strong_generators()) if len(gens) > 8 else gens
    Q = Subgroup(G, gens, order=Q.order, name=f"Syl{p}")
    return Q


# -- reality ---------------------------------------------------------------

def real_witness(G, z):
    """Some ``g`` in ``G`` with ``g^-1 z g = z^-1``, or ``None``.

    Walks the conjugacy class of ``z`` under conjugation by the generators
    of ``G``, stopping early when ``z^-1`` turns up.  Raises
    :class:`BudgetExceeded` if the class outgrows ``budgets.max_class_size``.
    """
    z = tuple(z)
    if not G.contains(z):
        raise ValueError("z is not in G")
    target = inv(z)
    if target == z:
        return G.identity
    gens = [tuple(s) for s in G.generators]
    parent = {z: None}
    queue = [z]
    limit = budgets.max_class_size
    found = None
    for c in queue:
        for k, s in enumerate(gens):
            d = _conj(c, s)
            if d in parent:
                continue
            parent[d] = (c, k)
            if d == target:
                found = d
                break
            queue.append(d)
            if len(parent) > limit:
                raise BudgetExceeded(f"conjugacy class exceeds {limit} elements")
        if found is not None:
            break
    if found is None:
        return None
    word = []
    c = found
    while parent[c] is not None:
        c, k = parent[c]
        word.append(gens[k])
    g = G.identity
    for s in reversed(word):
        g = mul(g, s)
    return Permutation._raw(g)


def is_real(G, z):
    return real_witness(G, z) is not None


def extended_centralizer(G, z):
    """``{y in G : z^y = z or z^-1}``."""
    z = tuple(z)
    if all(i == x for i, x in enumerate(z)):
        raise ValueError("z must be nontrivial")
    C = centralizer_element(G, z)
    zi = inv(z)
    if zi == z:
        return C
    w = real_witness(G, z)
    if w is None:
        return C
    return Subgroup(G, list(C.generators) + [w], order=2 * C.order, name="ExtC")


# -- closures and series ------------------------------------------------------

def normal_closure(G, H):
    """Smallest normal subgroup of ``G`` containing ``H``."""
    gens = [tuple(h) for h in H.generators if not Permutation._raw(h).is_identity()]
    if not gens:
        return Subgroup(G, [], order=1)
    chain = schreier_sims(G.degree, gens)
    queue = list(gens)
    while queue:
        h = queue.pop()
        for s in G.generators:
            c = _conj(h, s)
            if not chain.contains(c):
                gens.append(c)
                queue.append(c)
                chain = schreier_sims(G.degree, chain.strong_generators() + [c])
    return Subgroup(G, gens, _chain=chain)


def _commutator(a, b):
    return mul(mul(inv(a), inv(b)), mul(a, b))


def derived_series(G):
    """``[G, G', G'', ...]`` down to the first repeated term."""
    series = [as_subgroup(G)]
    while True:
        cur = series[-1]
        gens = cur.generators
        comm = [Permutation._raw(_commutator(a, b)) for i, a in enumerate(gens) for b in gens[i + 1:]]
        comm = [c for c in comm if not c.is_identity()]
        if not comm:
            D = Subgroup(G, [], order=1)
        else:
            D = normal_closure(cur, PermGroup(G.degree, comm))
            D = Subgroup(G, D.generators, _chain=D.chain)
        if D.order == cur.order:
            return series
        series.append(D)
        if D.order == 1:
            return series


def is_soluble(G):
    return derived_series(G)[-1].order == 1


# -- arithmetic consequences -----------------------------------------------

def nilpotent_hall_pair_exists(G, p, q):
    """True iff some Sylow p-subgroup commutes elementwise with some Sylow q-subgroup.

    All Sylow p-subgroups are conjugate, so fix one ``P``; a commuting Sylow
    q-subgroup exists iff ``C_G(P)`` contains one, i.e. iff the q-part of
    ``|C_G(P)|`` is the q-part of ``|G|``.
    """
    if p == q:
        raise ValueError("p and q must differ")
    if G.order % p or G.order % q:
        raise ValueError(f"{p} and {q} must both divide |G| = {G.order}")
    C = centralizer(G, sylow(G, p))
    return p_part(C.order, q) == p_part(G.order, q)


def frattini_product_order(G, N, p):
    """``|N N_G(S)|`` for ``S`` a Sylow p-subgroup of the normal subgroup ``N``."""
    if not N.is_subgroup_of(G) or not is_normal(G, N):
        raise ValueError("N is not a normal subgroup of G")
    Nsub = as_subgroup(G, N)
    S = sylow(Nsub, p)
    NG = normalizer(G, S)
    NN = normalizer(Nsub, S)   # N meet N_G(S) = N_N(S)
    return N.order * NG.order // NN.order


def prime_divisors(G):
    return list(factorize(G.order).factors)
