"""Acceptance criteria 1-12.

Every criterion is one test that records an exact pass/fail line together
with its runtime; the lines are printed in the terminal summary (see
conftest.py) and also when this file is run directly with ``python``.
"""

import math
import random
import time
import zlib

import pytest

from sylowgraph import catalog
from sylowgraph.arith import is_prime, is_zsigmondy_exception, p_part, prime_set, zsigmondy
from sylowgraph.corpus import catalog_corpus, random_subgroups
from sylowgraph.graph import automiser_order, diameter, is_connected, sylow_graph
from sylowgraph.lie import LieTypeSpec, order_E6, predicted_edges
from sylowgraph.oracles import (bf_centralizer, bf_normalizer, bf_sylow_subgroups, closure)
from sylowgraph.subgroups import (as_subgroup, centralizer, frattini_product_order, normal_closure, normalizer,
                                  sylow)
from sylowgraph.verify import exceptional_degree, suite_formations, suite_lemmas

RESULTS = {}


def record(num, title, limit, fn):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    in_time = dt < limit
    RESULTS[num] = (ok and in_time, f"criterion {num:>2}: {title} -- {detail}; {dt:.2f}s (limit {limit:g}s)")
    assert ok, detail
    assert in_time, f"took {dt:.2f}s, limit {limit}s"


def arrows(g):
    return {(a.source, a.target) for a in g.arrows}


def test_c01_a8():
    def run():
        g = sylow_graph(catalog.alternating(8))
        return arrows(g) == {(7, 3), (3, 2), (5, 2)} and diameter(g) == 3, \
            f"arrows {sorted(arrows(g))}, diameter {diameter(g)}"
    record(1, "Gamma(A8) arrows {7->3, 3->2, 5->2}, diameter 3", 1, run)


def test_c02_symmetric():
    def run():
        diams = {n: diameter(sylow_graph(catalog.symmetric(n))) for n in range(3, 13)}
        ok = all(d is not None and d <= 2 for d in diams.values())
        return ok, f"diameters {diams}"
    record(2, "Gamma(S_n) connected, diameter <= 2, 3 <= n <= 12", 30, run)


def test_c03_alternating():
    def run():
        diams = {n: diameter(sylow_graph(catalog.alternating(n))) for n in range(5, 13)}
        ok = all(d is not None and d <= 3 for d in diams.values())
        ok = ok and all(d == 2 for n, d in diams.items() if not exceptional_degree(n))
        return ok, f"diameters {diams}"
    record(3, "Gamma(A_n) diameter <= 3, = 2 off n = p, p+1 (p = 3 mod 4)", 60, run)


def test_c04_psl2_normalizers():
    def run():
        got = {}
        for q in (7, 11, 19, 23, 27):
            G = catalog.psl2(q)
            r = min(prime_set(q))
            got[q] = normalizer(G, sylow(G, r)).order
        return all(got[q] == q * (q - 1) // 2 for q in got), f"|N| {got}"
    record(4, "|N_PSL(2,q)(Syl_r)| = q(q-1)/2", 30, run)


def test_c05_psl2_27_3():
    def run():
        G = catalog.psl2_field_extension(27, 3)
        P = sylow(G, 3)
        N = normalizer(G, P)
        g = sylow_graph(G)
        ok = N.order == P.order and automiser_order(G, 3) == 1 and (2, 3) in arrows(g) and diameter(g) == 2
        return ok, f"|P| = |N| = {N.order}, arrows {sorted(arrows(g))}, diameter {diameter(g)}"
    record(5, "PSL(2,27):3 self-normalizing Sylow 3, 2->3, diameter 2", 60, run)


def test_c06_mathieu():
    def run():
        diams = {n: diameter(sylow_graph(catalog.mathieu(n))) for n in (11, 12, 22)}
        return all(d is not None and d <= 5 for d in diams.values()), f"diameters {diams}"
    record(6, "Gamma(M11), Gamma(M12), Gamma(M22) diameter <= 5", 300, run)


def test_c07_m23():
    # opt-in in the CLI; it runs here by default because it takes well under a second
    def run():
        g = sylow_graph(catalog.mathieu(23))
        return diameter(g) == 5, f"arrows {sorted(arrows(g))}, diameter {diameter(g)}"
    record(7, "Gamma(M23) diameter exactly 5", 900, run)


def _has_primitive(a, n):
    # strip every prime that already divides some a^e - 1, e < n
    m = a ** n - 1
    for e in range(1, n):
        g = math.gcd(m, a ** e - 1)
        while g > 1:
            m //= g
            g = math.gcd(m, g)
    return m > 1


def test_c08_zsigmondy():
    pairs = [(a, n) for a in range(2, 51) for n in range(2, 31)]
    t = time.perf_counter()
    found = {pn: zsigmondy(*pn) for pn in pairs}
    spent = time.perf_counter() - t

    def run():
        bad = []
        for (a, n), r in found.items():
            exists = _has_primitive(a, n)
            if (r is not None) != exists or exists == is_zsigmondy_exception(a, n):
                bad.append((a, n, r))
            elif r is not None and not (is_prime(r) and r % n == 1 and pow(a, n, r) == 1
                                        and all(pow(a, e, r) != 1 for e in range(1, n))):
                bad.append((a, n, r))
        return not bad, f"{len(pairs)} pairs, zsigmondy time {spent:.2f}s" + (f", bad {bad[:5]}" if bad else "")

    # the limit applies to the library calls; the oracle runs afterwards
    t0 = time.perf_counter()
    ok, detail = run()
    RESULTS[8] = (ok and spent < 10, f"criterion  8: Zsigmondy existence exactly off the exceptions, "
                                     f"r = 1 mod n -- {detail}; {spent:.2f}s (limit 10s)")
    assert ok, detail
    assert spent < 10, f"took {spent:.2f}s"
    assert time.perf_counter() - t0 < 60


def _classical_E6(q, eps):
    n = q ** 36
    for d in (2, 5, 6, 8, 9, 12):
        n *= q ** d - eps ** d
    return n // math.gcd(3, q - eps)


def test_c09_e6_orders():
    def run():
        bad = [(q, e) for q in (2, 3, 4, 5, 7, 8, 9) for e in (1, -1) if order_E6(q, e) != _classical_E6(q, e)]
        ds = {math.gcd(3, q - e) for q in (2, 3, 4, 5, 7, 8, 9) for e in (1, -1)}
        return not bad and ds == {1, 3}, f"14 cases, d values {sorted(ds)}" + (f", bad {bad}" if bad else "")
    record(9, "order_E6 = degree-product oracle, q in {2,3,4,5,7,8,9}, both eps", 1, run)


def test_c10_predictor():
    def run():
        p4 = {(a.source, a.target) for a in predicted_edges(LieTypeSpec.from_q("A", 3, 2))}
        p3 = {(a.source, a.target) for a in predicted_edges(LieTypeSpec.from_q("A", 2, 2))}
        g8 = arrows(sylow_graph(catalog.alternating(8)))
        g7 = arrows(sylow_graph(catalog.psl2(7)))
        return p4 <= g8 and p3 <= g7, f"L4(2) {sorted(p4)} in {sorted(g8)}; L3(2) {sorted(p3)} in {sorted(g7)}"
    record(10, "predicted arrows of L4(2), L3(2) inside Gamma(A8), Gamma(PSL(2,7))", 10, run)


def _elements(G):
    return {tuple(g) for g in closure(G.generators, G.degree)}


def test_c11_property_suites():
    def run():
        failures = [c.name for c in suite_lemmas() if not c.passed]
        corpus = catalog_corpus()
        checked = 0
        # random subgroups: Frattini against their normal closures, automiser p'-property
        for name, G in corpus:
            for H in random_subgroups(G, 3, seed=zlib.crc32(name.encode()), gens=2):
                N = normal_closure(G, as_subgroup(G, H))
                for p in sorted(prime_set(N.order)) if N.order > 1 else []:
                    if frattini_product_order(G, N, p) != G.order:
                        failures.append(f"Frattini {name} / random N, p={p}")
                if H.order > 1:
                    for p, a in sylow_graph(H).automisers:
                        if a % p == 0:
                            failures.append(f"automiser {name} / random H, p={p}")
                checked += 1
        # oracle equivalence on |G| <= 2000
        small = [(n, G) for n, G in corpus if G.order <= 2000]
        for name, G in small:
            E = _elements(G)
            for p in sorted(prime_set(G.order)):
                P = sylow(G, p)
                PE = _elements(P)
                if len(PE) != p_part(G.order, p) or frozenset(PE) not in bf_sylow_subgroups(E, p, G.degree):
                    failures.append(f"Sylow {name} p={p}")
                if _elements(normalizer(G, P)) != bf_normalizer(E, PE):
                    failures.append(f"normalizer {name} p={p}")
                if _elements(centralizer(G, P)) != bf_centralizer(E, PE):
                    failures.append(f"centralizer {name} p={p}")
            rng = random.Random(zlib.crc32(name.encode()))
            for H in random_subgroups(G, 2, seed=rng.randrange(10 ** 6), gens=2):
                HE = _elements(H)
                Hs = as_subgroup(G, H)
                if _elements(normalizer(G, Hs)) != bf_normalizer(E, HE):
                    failures.append(f"normalizer {name} random H")
                if _elements(centralizer(G, Hs)) != bf_centralizer(E, HE):
                    failures.append(f"centralizer {name} random H")
        return not failures, (f"{len(corpus)} catalog groups, {checked} random subgroups, "
                              f"{len(small)} groups vs brute force, violations {failures[:5] or 0}")
    record(11, "property suites and brute-force oracle equivalence", 300, run)


def test_c12_formations():
    def run():
        checks = suite_formations()
        bad = [c.name for c in checks if not c.passed]
        parts = len(checks) // 2
        return not bad and parts >= 5, f"{parts} partitions x 50 soluble groups, violations {bad or 0}"
    record(12, "product class = covering membership; N-closure equivalence", 300, run)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
