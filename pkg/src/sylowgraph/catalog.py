"""Constructors for the test groups, all as permutation groups.

Matrix groups are turned into permutation actions on projective points
straight away; nothing downstream knows about matrices.
"""

import math
from itertools import product

from .arith import factorize, is_prime, is_prime_power
from .fields import FiniteField
from .groups import PermGroup
from .perm import Permutation, parse_cycles

__all__ = [
    "symmetric",
    "alternating",
    "cyclic",
    "dihedral",
    "direct_product",
    "frobenius",
    "psl2",
    "pgl2",
    "psl2_field_extension",
    "psl",
    "psp4",
    "mathieu",
    "psl_order",
    "MAX_SYMMETRIC_DEGREE",
]

MAX_SYMMETRIC_DEGREE = 64
MAX_PROJECTIVE_POINTS = 200


def _perm(images):
    return Permutation(images)


def symmetric(n):
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise ValueError(f"symmetric degree must be in 1..{MAX_SYMMETRIC_DEGREE}")
    gens = []
    if n >= 2:
        gens.append(_perm([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(_perm(list(range(1, n)) + [0]))
    return PermGroup(n, gens, order=math.factorial(n), name=f"S{n}")


def alternating(n):
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise ValueError(f"alternating degree must be in 1..{MAX_SYMMETRIC_DEGREE}")
    gens = []
    if n >= 3:
        # (0 1 2) and an (n-1)- or (n-2)-cycle of the right parity
        gens.append(_perm([1, 2, 0] + list(range(3, n))))
        if n > 3:
            if n % 2:
                gens.append(_perm(list(range(1, n)) + [0]))
            else:
                gens.append(_perm([0] + list(range(2, n)) + [1]))
    order = math.factorial(n) // 2 if n >= 2 else 1
    return PermGroup(n, gens, order=order, name=f"A{n}")


def cyclic(n):
    if n < 1:
        raise ValueError("cyclic order must be positive")
    gens = [_perm(list(range(1, n)) + [0])] if n > 1 else []
    return PermGroup(n, gens, order=n, name=f"C{n}")


def dihedral(order):
    """Dihedral group of the given order ``2n``, acting on ``n`` points."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and positive")
    n = order // 2
    if n == 1:
        return PermGroup(2, [_perm([1, 0])], order=2, name="D2")
    if n == 2:
        # Klein four-group as D4, regular action
        return PermGroup(4, [_perm([1, 0, 3, 2]), _perm([2, 3, 0, 1])], order=4, name="D4")
    rot = _perm(list(range(1, n)) + [0])
    ref = _perm([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref], order=order, name=f"D{order}")


def direct_product(G, H, name=None):
    """``G x H`` on the disjoint union of the two point sets."""
    n, m = G.degree, H.degree
    gens = [_perm(tuple(g) + tuple(range(n, n + m))) for g in G.generators]
    gens += [_perm(tuple(range(n)) + tuple(n + x for x in h)) for h in H.generators]
    label = name or f"{G.name or 'G'} x {H.name or 'H'}"
    return PermGroup(n + m, gens, order=G.order * H.order, name=label)


def frobenius(p, k):
    """``C_p : C_k`` with ``k | p - 1``, acting on ``GF(p)`` as ``x -> a x + b``."""
    if not is_prime(p) or (p - 1) % k:
        raise ValueError("need p prime and k dividing p - 1")
    F = FiniteField(p)
    a = F.pow(F.primitive_element, (p - 1) // k)
    gens = [_perm([(x + 1) % p for x in range(p)])]
    if k > 1:
        gens.append(_perm([a * x % p for x in range(p)]))
    return PermGroup(p, gens, order=p * k, name=f"F{p * k}")


# -- projective line --------------------------------------------------------

def _line_maps(F):
    """Point indices: field element x is [x : 1]; q is the point at infinity."""
    q = F.q
    inf = q

    def mobius(a, b, c, d):
        # x -> (a x + b) / (c x + d)
        images = []
        for x in range(q):
            num = F.add(F.mul(a, x), b)
            den = F.add(F.mul(c, x), d)
            images.append(inf if den == 0 else F.div(num, den))
        images.append(inf if c == 0 else F.div(a, c))
        return _perm(images)

    return mobius


def _q_check(q):
    pp = is_prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    if q > 1024:
        raise ValueError("q must be at most 1024")
    return pp


def psl2(q):
    _q_check(q)
    F = FiniteField(q)
    mob = _line_maps(F)
    one, w = 1, F.primitive_element
    w2 = F.mul(w, w)
    gens = [mob(one, one, 0, one), mob(w2, 0, 0, one), mob(0, F.neg(one), one, 0)]
    order = q * (q * q - 1) // math.gcd(2, q - 1)
    return PermGroup(q + 1, gens, order=order, name=f"PSL2({q})")


def pgl2(q):
    _q_check(q)
    F = FiniteField(q)
    mob = _line_maps(F)
    gens = [mob(1, 1, 0, 1), mob(F.primitive_element, 0, 0, 1), mob(0, F.neg(1), 1, 0)]
    return PermGroup(q + 1, gens, order=q * (q * q - 1), name=f"PGL2({q})")


def psl2_field_extension(q, k):
    """``PSL2(q)`` extended by the field automorphism of order ``k``."""
    r, t = _q_check(q)
    if k < 2 or t % k:
        raise ValueError(f"k = {k} must be > 1 and divide t = {t} (q = {r}^{t})")
    L = psl2(q)
    F = FiniteField(q)
    e = t // k
    frob = _perm([F.frobenius(x, e) for x in range(q)] + [q])
    return PermGroup(q + 1, list(L.generators) + [frob], order=L.order * k,
                     name=f"PSL2({q}):{k}")


# -- projective space ---------------------------------------------------------

def _projective_points(F, m):
    pts = []
    for v in product(range(F.q), repeat=m):
        lead = next((x for x in v if x), None)
        if lead == 1:
            pts.append(v)
    return pts


def _normalize(F, v):
    lead = next(x for x in v if x)
    if lead == 1:
        return v
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in v)


def _matrix_action(F, pts, index, mat):
    m = len(mat)
    images = []
    for v in pts:
        # row vector times matrix
        w = []
        for j in range(m):
            acc = 0
            for i in range(m):
                if v[i] and mat[i][j]:
                    acc = F.add(acc, F.mul(v[i], mat[i][j]))
            w.append(acc)
        images.append(index[_normalize(F, tuple(w))])
    return _perm(images)


def psl_order(m, q):
    r = math.prod(q ** m - q ** i for i in range(m)) // (q - 1)
    return r // math.gcd(m, q - 1)


def psl(m, q):
    """``PSL(m, q)`` on the ``(q^m - 1)/(q - 1)`` projective points."""
    _q_check(q)
    if m < 2:
        raise ValueError("m must be at least 2")
    if m == 2:
        return psl2(q)
    npts = (q ** m - 1) // (q - 1)
    if m > 4 or npts > MAX_PROJECTIVE_POINTS:
        raise ValueError(f"PSL({m},{q}) acts on {npts} points; limit is m <= 4 and {MAX_PROJECTIVE_POINTS} points")
    F = FiniteField(q)
    pts = _projective_points(F, m)
    index = {v: i for i, v in enumerate(pts)}
    basis = [F.pow(F.primitive_element, k) for k in range(F.t)]
    gens = []
    # elementary transvections generate SL(m, q)
    for i in range(m):
        for j in range(m):
            if i == j or (abs(i - j) != 1):
                continue
            for lam in basis:
                mat = [[1 if a == b else 0 for b in range(m)] for a in range(m)]
                mat[i][j] = lam
                gens.append(_matrix_action(F, pts, index, mat))
    return PermGroup(len(pts), gens, order=psl_order(m, q), name=f"PSL{m}({q})")


def psp4(q):
    """``PSp4(q)`` on the projective points of its natural module."""
    _q_check(q)
    F = FiniteField(q)
    pts = _projective_points(F, 4)
    if len(pts) > MAX_PROJECTIVE_POINTS:
        raise ValueError("q too large for PSp4")
    index = {v: i for i, v in enumerate(pts)}

    def form(u, v):
        # symplectic form with e0.e2 = e1.e3 = 1
        a = F.sub(F.mul(u[0], v[2]), F.mul(u[2], v[0]))
        b = F.sub(F.mul(u[1], v[3]), F.mul(u[3], v[1]))
        return F.add(a, b)

    def transvection(a, lam):
        # v -> v + lam (v, a) a
        images = []
        for v in pts:
            c = F.mul(lam, form(v, a))
            w = tuple(F.add(x, F.mul(c, y)) for x, y in zip(v, a))
            images.append(index[_normalize(F, w)])
        return _perm(images)

    basis = [F.pow(F.primitive_element, k) for k in range(F.t)]
    gens = [transvection(a, lam) for a in pts for lam in basis
            if sum(1 for x in a if x) <= 2]
    order = q ** 4 * (q ** 2 - 1) * (q ** 4 - 1) // math.gcd(2, q - 1)
    return PermGroup(len(pts), gens, order=order, name=f"PSp4({q})")


# -- Mathieu groups ----------------------------------------------------------
# Standard permutation generators as distributed with GAP's primitive groups
# library; the orders below are re-derived from the chain in the tests.

_MATHIEU = {
    11: (11, ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"], 7920),
    12: (12, ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
              "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"], 95040),
    22: (22, ["(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
              "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
              "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"], 443520),
    23: (23, ["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
              "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"], 10200960),
    24: (24, ["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
              "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
              "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"],
         244823040),
}


def mathieu(n):
    if n not in _MATHIEU:
        raise ValueError(f"no Mathieu group M{n}; choose from {sorted(_MATHIEU)}")
    degree, gens, _ = _MATHIEU[n]
    # no order hint: the chain is built deterministically and checked
    G = PermGroup(degree, [parse_cycles(g, degree) for g in gens], name=f"M{n}")
    return G


def mathieu_order(n):
    return _MATHIEU[n][2]


def order_factorization(G):
    return factorize(G.order)
