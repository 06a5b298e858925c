"""Brute-force reference implementations over explicit element sets.

These are deliberately naive: they share no code with the stabilizer-chain
and search machinery, and are only meant for groups of a few thousand
elements.  Tests compare the fast routines against them.
"""

from itertools import product

__all__ = [
    "closure",
    "bf_normalizer",
    "bf_centralizer",
    "bf_normal_closure",
    "bf_center",
    "bf_is_real",
    "bf_sylow_subgroups",
    "bf_commuting_sylow_pair",
    "bf_automiser_order",
    "bf_orbit_stabilizer_order",
    "bf_primitive_prime",
    "bf_prime_factors",
    "bf_in_product_class",
]

ORACLE_LIMIT = 200_000


def _mul(a, b):
    return tuple(b[x] for x in a)


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _conj(h, g):
    return _mul(_mul(_inv(g), h), g)


def closure(gens, degree, limit=ORACLE_LIMIT):
    """All products of ``gens``, by breadth-first search on the Cayley graph."""
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        if len(seen) > limit:
            raise RuntimeError("closure too large for the oracle")
        frontier = nxt
    return seen


def bf_normalizer(G_elems, H_elems):
    H = set(H_elems)
    return {g for g in G_elems if all(_conj(h, g) in H for h in H)}


def bf_centralizer(G_elems, H_elems):
    return {g for g in G_elems if all(_mul(g, h) == _mul(h, g) for h in H_elems)}


def bf_center(H_elems):
    return bf_centralizer(H_elems, H_elems)


def bf_normal_closure(G_elems, H_elems, degree):
    gens = {_conj(h, g) for h in H_elems for g in G_elems}
    return closure(gens, degree)


def bf_is_real(G_elems, z):
    zi = _inv(tuple(z))
    return any(_conj(tuple(z), g) == zi for g in G_elems)


def _order(g):
    ident = tuple(range(len(g)))
    k, x = 1, g
    while x != ident:
        x = _mul(x, g)
        k += 1
    return k


def _p_part(n, p):
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def bf_sylow_subgroups(G_elems, p, degree):
    """Every Sylow p-subgroup, as frozensets, by conjugating one of them.

    The first one is grown greedily from p-elements.
    """
    G_elems = list(G_elems)
    target = _p_part(len(G_elems), p)
    pel = [g for g in G_elems if _p_part(_order(g), p) == _order(g)]
    P = {tuple(range(degree))}
    gens = []
    for g in sorted(pel):
        if len(P) == target:
            break
        if g in P:
            continue
        cand = closure(gens + [g], degree)
        if _p_part(len(cand), p) == len(cand):
            gens.append(g)
            P = cand
    if len(P) != target:
        raise AssertionError("greedy Sylow construction failed")
    out = set()
    for g in G_elems:
        out.add(frozenset(_conj(x, g) for x in P))
    return out


def bf_commuting_sylow_pair(G_elems, p, q, degree):
    """Some Sylow p- and q-subgroups commute elementwise (checked over all pairs)."""
    Ps = bf_sylow_subgroups(G_elems, p, degree)
    Qs = bf_sylow_subgroups(G_elems, q, degree)
    for P, Q in product(Ps, Qs):
        if all(_mul(a, b) == _mul(b, a) for a in P for b in Q):
            return True
    return False


def bf_automiser_order(G_elems, p, degree):
    P = next(iter(bf_sylow_subgroups(G_elems, p, degree)))
    N = bf_normalizer(G_elems, P)
    C = bf_centralizer(G_elems, P)
    PC = {_mul(a, b) for a in P for b in C}
    return len(N) // len(PC)


def bf_orbit_stabilizer_order(gens, degree):
    """``|G|`` as a product of orbit lengths down a chain of point stabilizers,
    with each stabilizer found by exhaustive enumeration of the group."""
    elems = closure(gens, degree)
    order = 1
    current = elems
    for point in range(degree):
        orbit = {g[point] for g in current}
        order *= len(orbit)
        current = {g for g in current if g[point] == point}
        if len(current) == 1:
            break
    return order


def bf_prime_factors(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def bf_primitive_prime(a, n):
    """Smallest prime dividing ``a^n - 1`` and no ``a^e - 1`` with ``e < n``."""
    for r in sorted(bf_prime_factors(a ** n - 1)):
        if all((a ** e - 1) % r for e in range(1, n)):
            return r
    return None


def bf_in_product_class(G_elems, blocks):
    """Is the group the direct product of its Hall subgroups, one per block?

    True iff for every block the elements whose order only involves primes
    of the block form a subgroup of the full block-part order.
    """
    G_elems = list(G_elems)
    n = len(G_elems)
    for block in blocks:
        part = 1
        for p in block:
            part *= _p_part(n, p)
        S = {g for g in G_elems if set(bf_prime_factors(_order(g))) <= set(block)}
        if len(S) != part:
            return False
        if any(_mul(a, b) not in S for a in S for b in S):
            return False
    return True
