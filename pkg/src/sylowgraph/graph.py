"""Automisers and the Sylow graph.

The automiser of a Sylow p-subgroup ``P`` is ``N_G(P) / P C_G(P)``.  Only its
order is needed, and ``|P C_G(P)| = |P| |C_G(P)| / |Z(P)|`` because
``P`` meets ``C_G(P)`` in ``Z(P)``.  An arrow ``p -> q`` is drawn for every
prime ``q`` dividing that order.  Distances and the diameter ignore arrow
direction.
"""

import json
import re
from collections import deque
from dataclasses import dataclass

from .arith import factorize, prime_set
from .config import BudgetExceeded
from .subgroups import center, centralizer, normalizer, real_witness, sylow

__all__ = [
    "Arrow",
    "SylowGraph",
    "automiser_order",
    "sylow_graph",
    "distance",
    "diameter",
    "is_connected",
    "real_central_edge_certificate",
    "to_json",
    "from_json",
    "to_dot",
    "from_dot",
    "to_table",
]


@dataclass(frozen=True, order=True)
class Arrow:
    source: int
    target: int
    automiser_order: int


@dataclass(frozen=True)
class SylowGraph:
    group: str
    order: int
    vertices: tuple
    arrows: tuple
    automisers: tuple  # ((p, |A_p(G)|), ...) sorted by p

    def __post_init__(self):
        if set(self.vertices) != set(factorize(self.order).factors):
            raise ValueError("vertices must be the prime divisors of the order")
        for a in self.arrows:
            if a.source == a.target:
                raise ValueError(f"loop at {a.source}")
            if a.automiser_order % a.target:
                raise ValueError(f"{a.target} does not divide |A_{a.source}|")

    @property
    def automiser_orders(self):
        return dict(self.automisers)

    def arrow_pairs(self):
        return {(a.source, a.target) for a in self.arrows}

    def neighbours(self, p):
        out = set()
        for a in self.arrows:
            if a.source == p:
                out.add(a.target)
            elif a.target == p:
                out.add(a.source)
        return out


def automiser_order(G, p):
    """``|N_G(P) : P C_G(P)|`` for a Sylow p-subgroup ``P``."""
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    P = sylow(G, p)
    N = normalizer(G, P)
    C = centralizer(G, P)
    Z = center(P)
    num = N.order * Z.order
    den = P.order * C.order
    if num % den:
        raise ArithmeticError("automiser order is not an integer")
    return num // den


def sylow_graph(G, label=None):
    primes = sorted(factorize(G.order).factors)
    autos = []
    arrows = []
    for p in primes:
        try:
            a = automiser_order(G, p)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"prime {p}: {exc}") from exc
        autos.append((p, a))
        for q in sorted(prime_set(a)):
            arrows.append(Arrow(p, q, a))
    return SylowGraph(label or G.name or "G", G.order, tuple(primes), tuple(sorted(arrows)),
                      tuple(autos))


def _bfs(graph, p):
    dist = {p: 0}
    queue = deque([p])
    adj = {v: graph.neighbours(v) for v in graph.vertices}
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(graph, p, q):
    """Length of a shortest chain from ``p`` to ``q``; ``None`` if there is none."""
    for v in (p, q):
        if v not in graph.vertices:
            raise ValueError(f"{v} is not a vertex")
    return _bfs(graph, p).get(q)


def is_connected(graph):
    if len(graph.vertices) <= 1:
        return True
    return len(_bfs(graph, graph.vertices[0])) == len(graph.vertices)


def diameter(graph):
    """Largest distance between vertices; ``None`` when disconnected.

    A graph with at most one vertex has diameter 0.
    """
    if not is_connected(graph):
        return None
    best = 0
    for v in graph.vertices:
        best = max(best, max(_bfs(graph, v).values()))
    return best


def real_central_edge_certificate(G, p):
    """A pair ``(z, g)`` with ``1 != z`` in ``Z(P)`` and ``z^g = z^-1``, or ``None``.

    Such a pair forces the arrow ``p -> 2``.  Returns ``None`` when ``|G|`` is
    odd, since the certificate only speaks about the prime 2.
    """
    if p == 2:
        raise ValueError("p must be odd")
    if G.order % p:
        raise ValueError(f"{p} does not divide |G|")
    if G.order % 2:
        return None
    Z = center(sylow(G, p))
    for z in Z.elements():
        if z.is_identity():
            continue
        g = real_witness(G, z)
        if g is not None:
            return z, g
    return None


# -- serialization -------------------------------------------------------------

def to_json(graph, indent=None):
    data = {
        "group": graph.group,
        "order": str(graph.order),
        "vertices": list(graph.vertices),
        "arrows": [{"from": a.source, "to": a.target, "automiser_order": str(a.automiser_order)}
                   for a in graph.arrows],
        "connected": is_connected(graph),
        "diameter": diameter(graph),
    }
    return json.dumps(data, indent=indent)


def from_json(text):
    data = json.loads(text)
    arrows = tuple(sorted(Arrow(int(a["from"]), int(a["to"]), int(a["automiser_order"]))
                          for a in data["arrows"]))
    autos = {p: 1 for p in data["vertices"]}
    for a in arrows:
        autos[a.source] = a.automiser_order
    return SylowGraph(data["group"], int(data["order"]), tuple(sorted(data["vertices"])),
                      arrows, tuple(sorted(autos.items())))


def _dot_id(text):
    esc = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r")
    return '"' + esc + '"'


def _dot_unescape(text):
    return re.sub(r"\\(.)", lambda m: {"n": "\n", "r": "\r"}.get(m.group(1), m.group(1)), text)


def to_dot(graph):
    lines = [f"digraph {_dot_id(graph.group)} {{",
             f"  // order {graph.order}"]
    for v in graph.vertices:
        lines.append(f'  {v} [label="{v}"];')
    for a in graph.arrows:
        lines.append(f'  {a.source} -> {a.target} [label="{a.automiser_order}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEAD = re.compile(r'^digraph\s+"((?:[^"\\]|\\.)*)"\s*\{$')
_DOT_ORDER = re.compile(r"^//\s*order\s+(\d+)$")
_DOT_NODE = re.compile(r'^(\d+)\s*\[label="(\d+)"\];$')
_DOT_EDGE = re.compile(r'^(\d+)\s*->\s*(\d+)\s*\[label="(\d+)"\];$')


def from_dot(text):
    """Parse the output of :func:`to_dot` (not general DOT)."""
    # only "\n" separates lines; other Unicode breaks may sit inside the name
    lines = [ln.strip() for ln in text.strip().split("\n")]
    m = _DOT_HEAD.match(lines[0])
    if not m or lines[-1] != "}":
        raise ValueError("not a sylow graph DOT document")
    name = _dot_unescape(m.group(1))
    order = None
    vertices, arrows = [], []
    for ln in lines[1:-1]:
        if (mo := _DOT_ORDER.match(ln)):
            order = int(mo.group(1))
        elif (mn := _DOT_NODE.match(ln)):
            vertices.append(int(mn.group(1)))
        elif (me := _DOT_EDGE.match(ln)):
            arrows.append(Arrow(int(me.group(1)), int(me.group(2)), int(me.group(3))))
        elif ln:
            raise ValueError(f"unexpected DOT line: {ln!r}")
    if order is None:
        raise ValueError("missing order comment")
    autos = {p: 1 for p in vertices}
    for a in arrows:
        autos[a.source] = a.automiser_order
    return SylowGraph(name, order, tuple(sorted(vertices)), tuple(sorted(arrows)),
                      tuple(sorted(autos.items())))


def to_table(graph):
    diam = diameter(graph)
    lines = [f"group     {graph.group}",
             f"order     {graph.order} = {factorize(graph.order)}",
             f"vertices  {' '.join(map(str, graph.vertices))}",
             "",
             f"{'p':>5}  {'|A_p(G)|':>12}  arrows"]
    for p, a in graph.automisers:
        out = " ".join(f"{p}->{q}" for q in sorted(prime_set(a))) or "-"
        lines.append(f"{p:>5}  {a:>12}  {out}")
    lines += ["",
              f"connected {'yes' if is_connected(graph) else 'no'}",
              f"diameter  {'none (disconnected)' if diam is None else diam}"]
    return "\n".join(lines) + "\n"
