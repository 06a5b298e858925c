"""Subgroup search through a stabilizer chain.

Finds generators of ``{g in G : test(g)}`` when that set is a subgroup
(normalizers, centralizers).  The chain of ``G`` is walked level by level;
each node fixes the images of the first few base points.  A refiner prunes
partial images that cannot extend to an element of the target subgroup, and
the usual coset argument skips base images already reached by the part of the
result found so far.
"""

from .config import BudgetExceeded, budgets
from .groups import StabChain, Subgroup, _Level, random_schreier_sims
from .perm import inv, mul

__all__ = ["CommutingRefiner", "OrbitalRefiner", "subgroup_search", "orbitals"]


class CommutingRefiner:
    """Partial maps that commute with a fixed set of permutations.

    If ``g`` commutes with ``h`` then ``g(h(x)) = h(g(x))``, so fixing one
    image on an orbit of ``<gens>`` forces the whole orbit.
    """

    def __init__(self, gens, degree):
        self.gens = [tuple(h) for h in gens]
        self.f = [-1] * degree
        self.finv = [-1] * degree
        self.frames = []

    def forced(self, x):
        y = self.f[x]
        return None if y < 0 else y

    def push(self, x, y):
        f, finv = self.f, self.finv
        assigned = []
        queue = [(x, y)]
        ok = True
        while queue:
            a, b = queue.pop()
            if f[a] < 0:
                if finv[b] >= 0:
                    ok = False
                    break
                f[a] = b
                finv[b] = a
                assigned.append(a)
                for h in self.gens:
                    queue.append((h[a], h[b]))
            elif f[a] != b:
                ok = False
                break
        if not ok:
            for a in assigned:
                finv[f[a]] = -1
                f[a] = -1
            return False
        self.frames.append(assigned)
        return True

    def pop(self):
        f, finv = self.f, self.finv
        for a in self.frames.pop():
            finv[f[a]] = -1
            f[a] = -1


def orbitals(gens, degree):
    """Colour every ordered pair by its orbit under ``<gens>``.

    Returns ``(colour, sizes)`` where ``colour[x][y]`` is an int and
    ``sizes[c]`` is the number of pairs of colour ``c``.
    """
    colour = [[-1] * degree for _ in range(degree)]
    sizes = []
    for x in range(degree):
        for y in range(degree):
            if colour[x][y] >= 0:
                continue
            c = len(sizes)
            colour[x][y] = c
            queue = [(x, y)]
            for a, b in queue:
                for h in gens:
                    p, q = h[a], h[b]
                    if colour[p][q] < 0:
                        colour[p][q] = c
                        queue.append((p, q))
            sizes.append(len(queue))
    return colour, sizes


class OrbitalRefiner:
    """Partial maps that permute the orbitals of a group ``H``.

    Anything normalizing ``H`` sends each orbit of ``H`` on ordered pairs to
    another such orbit of the same size, so the induced map on colours must be
    a well-defined, injective, size-preserving function.
    """

    def __init__(self, gens, degree):
        self.colour, self.sizes = orbitals([tuple(h) for h in gens], degree)
        self.pairs = []
        self.used = [False] * degree
        self.cmap = {}
        self.cinv = {}
        self.frames = []

    def forced(self, x):
        return None

    def _bind(self, c, d, bound):
        cm = self.cmap
        if c in cm:
            return cm[c] == d
        if d in self.cinv or self.sizes[c] != self.sizes[d]:
            return False
        cm[c] = d
        self.cinv[d] = c
        bound.append(c)
        return True

    def push(self, x, y):
        if self.used[y]:
            return False
        col = self.colour
        bound = []
        ok = self._bind(col[x][x], col[y][y], bound)
        if ok:
            cx, cy = col[x], col[y]
            for a, b in self.pairs:
                if not (self._bind(cx[a], cy[b], bound) and self._bind(col[a][x], col[b][y], bound)):
                    ok = False
                    break
        if not ok:
            self._unbind(bound)
            return False
        self.pairs.append((x, y))
        self.used[y] = True
        self.frames.append(bound)
        return True

    def _unbind(self, bound):
        for c in bound:
            del self.cinv[self.cmap.pop(c)]

    def pop(self):
        x, y = self.pairs.pop()
        self.used[y] = False
        self._unbind(self.frames.pop())


def _orbit(point, gens):
    seen = {point}
    queue = [point]
    for a in queue:
        for g in gens:
            b = g[a]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def subgroup_search(G, test, refiner, prefix=(), known=None, name=None):
    """Return the subgroup ``{g in G : test(g)}`` as a :class:`Subgroup`.

    ``test`` must define a subgroup.  ``known`` is an optional subgroup
    already known to lie inside the result; it seeds the search.
    """
    chain = G.chain_with_base(prefix)
    levels = chain.levels
    base = chain.base
    m = len(base)
    n = G.degree
    ident = chain.identity
    budget = budgets.max_search_nodes
    nodes = 0

    found = [[] for _ in range(m)]  # strong generators first found at level i
    if known is not None and not known.is_trivial():
        kc = random_schreier_sims(n, known.generators, known.order, base)
        for i, lv in enumerate(kc.levels[:m]):
            for g in lv.gens:
                if all(g[b] == b for b in base[:i]):
                    found[i].append(g)

    def gens_at(i):
        out = []
        for k in range(i, m):
            out.extend(found[k])
        return out

    def find(i, delta, skip_top):
        nonlocal nodes
        refiner_ok = []
        for k in range(i):
            if not refiner.push(base[k], base[k]):
                for _ in refiner_ok:
                    refiner.pop()
                return None
            refiner_ok.append(k)
        if not refiner.push(base[i], delta):
            for _ in refiner_ok:
                refiner.pop()
            return None

        def dfs(j, c):
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"subgroup search exceeded {budget} nodes")
            if j == m:
                return c if test(c) else None
            lv = levels[j]
            bj = lv.base
            forced = refiner.forced(bj)
            if forced is not None:
                d = inv(c)[forced]
                opts = [(forced, d)] if d in lv.trans else []
                if opts and j == i + 1 and skip_top:
                    above = sum(1 for e in lv.trans if c[e] > forced)
                    if above < skip_top:
                        opts = []
            else:
                opts = sorted((c[d], d) for d in lv.trans)
                if j == i + 1 and skip_top:
                    opts = opts[:len(opts) - skip_top]
            for gamma, d in opts:
                if not refiner.push(bj, gamma):
                    continue
                r = dfs(j + 1, mul(lv.trans[d], c))
                refiner.pop()
                if r is not None:
                    return r
            return None

        try:
            return dfs(i + 1, levels[i].trans[delta])
        finally:
            refiner.pop()
            for _ in refiner_ok:
                refiner.pop()

    for i in range(m - 1, -1, -1):
        b = base[i]
        gi = gens_at(i)
        orbit = _orbit(b, gi)
        # Left-multiplying by R^(i+1) (the part of the result fixing
        # base[:i+1]) keeps base[i] -> delta and moves the image of
        # base[i+1] around a set of size |O|, O its R^(i+1)-orbit.  Some
        # element of that coset puts the minimum there, so the image of
        # base[i+1] needs at least |O| - 1 larger candidates.
        skip_top = len(_orbit(base[i + 1], gens_at(i + 1))) - 1 if i + 1 < m else 0
        dead = set()
        for delta in sorted(levels[i].trans):
            if delta in orbit or delta in dead:
                continue
            g = find(i, delta, skip_top)
            if g is None:
                dead |= _orbit(delta, gi)
            else:
                found[i].append(g)
                gi = gens_at(i)
                orbit = _orbit(b, gi)

    out_levels = [_Level(base[i], gens_at(i), ident) for i in range(m)]
    while out_levels and len(out_levels[-1].trans) == 1:
        out_levels.pop()
    result_chain = StabChain(n, out_levels)
    gens = []
    for i in range(m):
        gens.extend(found[i])
    sub = Subgroup(G, gens, name=name, _chain=result_chain)
    sub.search_nodes = nodes
    return sub

