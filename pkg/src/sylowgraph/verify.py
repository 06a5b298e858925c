"""Verification suites: instance checks and property checks over the catalog.

Each suite returns a list of :class:`Check` records.  A suite never stops at
the first failure; every check runs and reports separately.
"""

import json
import time
from dataclasses import asdict, dataclass

from .arith import is_prime, prime_set
from .catalog import alternating, cyclic, direct_product, mathieu, pgl2, psl2, psl2_field_extension, symmetric
from .config import budgets
from .corpus import PARTITIONS, catalog_corpus, soluble_corpus
from .formation import FormationSpec, in_product_class, n_closure_check, soluble_covering_membership
from .graph import diameter, is_connected, real_central_edge_certificate, sylow_graph
from .groupspec import build_group
from .subgroups import (extended_centralizer, centralizer_element, frattini_product_order,
                        is_real, normalizer, sylow)

__all__ = ["Check", "Report", "SUITES", "run_suites", "exceptional_degree"]


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class Report:
    checks: list
    seed: int

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return json.dumps({"seed": self.seed, "passed": self.passed,
                           "checks": [asdict(c) for c in self.checks]}, indent=2)

    def to_text(self):
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark}  [{c.suite}] {c.name}  ({c.seconds:.2f}s)  {c.detail}".rstrip())
        n_fail = sum(not c.passed for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed (seed {self.seed})")
        return "\n".join(lines)


class _Recorder:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []

    def check(self, name, fn):
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an aborted suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.checks.append(Check(self.suite, name, bool(ok), detail, time.perf_counter() - t))


def _arrows(graph):
    return sorted((a.source, a.target) for a in graph.arrows)


def _fmt_arrows(pairs):
    return "{" + ", ".join(f"{p}->{q}" for p, q in sorted(pairs)) + "}"


def exceptional_degree(n):
    """``n`` is ``p`` or ``p + 1`` for a prime ``p = 3 (mod 4)``."""
    return any(is_prime(p) and p % 4 == 3 for p in (n, n - 1))


# -- suites ---------------------------------------------------------------

def suite_symmetric(max_degree=12, **_):
    rec = _Recorder("symmetric")
    for n in range(3, max_degree + 1):
        def run(n=n):
            g = sylow_graph(symmetric(n))
            d = diameter(g)
            return is_connected(g) and d is not None and d <= 2, f"diameter {d}, arrows {_fmt_arrows(_arrows(g))}"
        rec.check(f"S{n} connected, diameter <= 2", run)
    return rec.checks


def suite_alternating(max_degree=12, **_):
    rec = _Recorder("alternating")

    def a8():
        g = sylow_graph(alternating(8))
        want = [(3, 2), (5, 2), (7, 3)]
        return _arrows(g) == want and diameter(g) == 3, f"arrows {_fmt_arrows(_arrows(g))}, diameter {diameter(g)}"

    rec.check("A8 arrows {3->2, 5->2, 7->3}, diameter 3", a8)
    for n in range(5, max_degree + 1):
        def run(n=n):
            g = sylow_graph(alternating(n))
            d = diameter(g)
            ok = is_connected(g) and d is not None and d <= 3
            if not exceptional_degree(n):
                ok = ok and d == 2
            return ok, f"diameter {d}{' (n = p or p+1, p = 3 mod 4)' if exceptional_degree(n) else ''}"
        rec.check(f"A{n} connected, diameter <= 3" + ("" if exceptional_degree(n) else " and = 2"), run)
    return rec.checks


def suite_psl2(qs=(7, 11, 19, 23, 27), **_):
    rec = _Recorder("psl2")
    for q in qs:
        def run(q=q):
            G = psl2(q)
            r = min(prime_set(q))
            N = normalizer(G, sylow(G, r))
            want = q * (q - 1) // 2
            return N.order == want, f"|N| = {N.order}, q(q-1)/2 = {want}"
        rec.check(f"PSL2({q}): |N(Syl_r)| = q(q-1)/2", run)

    state = {}

    def ext():
        G = psl2_field_extension(27, 3)
        state["G"] = G
        P = sylow(G, 3)
        N = normalizer(G, P)
        return N.order == P.order, f"|P| = {P.order}, |N_G(P)| = {N.order}"

    rec.check("PSL2(27):3 Sylow 3-subgroup self-normalizing", ext)

    def ext_graph():
        g = sylow_graph(state.get("G") or psl2_field_extension(27, 3))
        state["graph"] = g
        return (2, 3) in g.arrow_pairs(), f"arrows {_fmt_arrows(_arrows(g))}"

    rec.check("PSL2(27):3 has arrow 2->3", ext_graph)

    def ext_diam():
        g = state.get("graph") or sylow_graph(psl2_field_extension(27, 3))
        return diameter(g) == 2, f"diameter {diameter(g)}"

    rec.check("PSL2(27):3 diameter exactly 2", ext_diam)
    return rec.checks


def suite_sporadic(include_m23=False, **_):
    rec = _Recorder("sporadic")
    for n in (11, 12, 22):
        def run(n=n):
            g = sylow_graph(mathieu(n))
            d = diameter(g)
            return is_connected(g) and d is not None and d <= 5, f"diameter {d}, arrows {_fmt_arrows(_arrows(g))}"
        rec.check(f"M{n} connected, diameter <= 5", run)
    if include_m23:
        def m23():
            g = sylow_graph(mathieu(23))
            return diameter(g) == 5, f"diameter {diameter(g)}, arrows {_fmt_arrows(_arrows(g))}"
        rec.check("M23 diameter exactly 5", m23)
    return rec.checks


def _normal_pairs():
    """(label, G, N) with N normal in G, including N = G."""
    out = []
    for n in range(4, 8):
        out.append((f"A{n} in S{n}", symmetric(n), alternating(n)))
    for q in (5, 7, 9, 11):
        out.append((f"PSL2({q}) in PGL2({q})", pgl2(q), psl2(q)))
    for q, k in ((8, 3), (9, 2), (27, 3)):
        out.append((f"PSL2({q}) in PSL2({q}):{k}", psl2_field_extension(q, k), psl2(q)))
    for name in ("S4", "M11", "PSL3(3)", "F21", "S3 x C5"):
        G = build_group(name)
        out.append((f"{name} in {name}", G, G))
    for b in (3, 5):
        # A4 x Cb sits inside S4 x Cb on the same points
        G = direct_product(symmetric(4), cyclic(b))
        out.append((f"A4 x C{b} in S4 x C{b}", G, direct_product(alternating(4), cyclic(b))))
    return out


def suite_lemmas(**_):
    rec = _Recorder("lemmas")

    # Frattini: |N N_G(S)| = |G|
    for label, G, N in _normal_pairs():
        def run(G=G, N=N):
            bad = []
            for p in sorted(prime_set(N.order)):
                got = frattini_product_order(G, N, p)
                if got != G.order:
                    bad.append((p, got))
            return not bad, f"|G| = {G.order}" + (f", violations {bad}" if bad else "")
        rec.check(f"Frattini {label}", run)

    corpus = catalog_corpus()
    graphs = {}

    def graph_of(name, G):
        if name not in graphs:
            graphs[name] = sylow_graph(G, name)
        return graphs[name]

    def coprime():
        bad = []
        for name, G in corpus:
            for p, a in graph_of(name, G).automisers:
                if a % p == 0:
                    bad.append((name, p, a))
        return not bad, f"{len(corpus)} groups" + (f", violations {bad}" if bad else "")

    rec.check("automiser orders are p'-numbers", coprime)

    for n in range(5, 11):
        def inherit(n=n):
            ga = sylow_graph(alternating(n))
            gs = sylow_graph(symmetric(n))
            missing = [(r, s) for r, s in ga.arrow_pairs() if r != 2 and (r, s) not in gs.arrow_pairs()]
            return not missing, f"A{n} arrows {_fmt_arrows(ga.arrow_pairs())}" + (
                f", missing in S{n}: {missing}" if missing else "")
        rec.check(f"index-2 inheritance A{n} -> S{n}", inherit)

    def real_central():
        bad, certs = [], 0
        for name, G in corpus:
            g = graph_of(name, G)
            for p in g.vertices:
                if p == 2:
                    continue
                c = real_central_edge_certificate(G, p)
                if c is None:
                    continue
                z, w = c
                certs += 1
                if z.conjugate(w) != z.inverse() or (p, 2) not in g.arrow_pairs():
                    bad.append((name, p))
        return not bad, f"{certs} certificates" + (f", violations {bad}" if bad else "")

    rec.check("real central element forces p->2", real_central)

    def ext_centralizer():
        bad, tried = [], 0
        for name, G in corpus:
            if G.order > 2000:
                continue
            for p in sorted(prime_set(G.order)):
                P = sylow(G, p)
                z = next((g for g in P.generators if not g.is_identity()), None)
                if z is None:
                    continue
                H = extended_centralizer(G, z)
                C = centralizer_element(G, z)
                idx = H.order // C.order
                want = 2 if z.order() > 2 and is_real(G, z) else 1
                tried += 1
                if H.order % C.order or idx != want:
                    bad.append((name, p, idx, want))
        return not bad, f"{tried} elements" + (f", violations {bad}" if bad else "")

    rec.check("extended centralizer index is 1 or 2 as predicted", ext_centralizer)

    def coprime_ext():
        G = psl2_field_extension(32, 5)
        N = psl2(32)
        gG, gN = sylow_graph(G), sylow_graph(N)
        extra = prime_set(G.order) - prime_set(N.order)
        hit = all(any((p, r) in gG.arrow_pairs() for p in gN.vertices) for r in extra)
        dG, dN = diameter(gG), diameter(gN)
        ok = dG is not None and dN is not None and dG <= dN + 2 and hit
        return ok, f"diam G = {dG}, diam N = {dN}, new primes {sorted(extra)} reached: {hit}"

    rec.check("coprime extension PSL2(32):5 over PSL2(32)", coprime_ext)
    return rec.checks


def suite_formations(**_):
    rec = _Recorder("formations")
    corpus = soluble_corpus()
    for part in PARTITIONS:
        spec = FormationSpec.from_partition(part)
        label = " | ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in part)

        def product_vs_covering(part=part, spec=spec):
            bad = [name for name, G in corpus
                   if in_product_class(G, part) != soluble_covering_membership(G, spec)]
            return not bad, f"{len(corpus)} groups" + (f", mismatches {bad}" if bad else "")

        def n_closure(part=part):
            bad = []
            for name, G in corpus:
                r = n_closure_check(G, lambda H: in_product_class(H, part))
                if not r.holds:
                    bad.append(name)
            return not bad, f"{len(corpus)} groups" + (f", violations {bad}" if bad else "")

        rec.check(f"product class = soluble covering membership, {label}", product_vs_covering)
        rec.check(f"N-closure equivalence, {label}", n_closure)
    return rec.checks


SUITES = {
    "symmetric": suite_symmetric,
    "alternating": suite_alternating,
    "psl2": suite_psl2,
    "sporadic": suite_sporadic,
    "lemmas": suite_lemmas,
    "formations": suite_formations,
}


def run_suites(names, **options):
    if "all" in names:
        names = list(SUITES)
    checks = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        checks.extend(SUITES[name](**options))
    return Report(checks, budgets.seed)
