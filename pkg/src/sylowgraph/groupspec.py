"""A tiny language for naming catalog groups.

Grammar (whitespace is free around tokens)::

    product := term ( ("x" | "×") term )*
    term    := "S" n | "A" n | "C" n | "D" n | "M" n | "F" n
             | "PSL2(" q ")" [ ":" k ]
             | "PGL2(" q ")"
             | "PSL" m "(" q ")" | "PSL(" m "," q ")"
             | "PSp4(" q ")"

``D n`` is the dihedral group of order ``n``, ``F n`` the Frobenius group
``C_p : C_k`` of order ``n = p k`` (``p`` the largest prime factor) and
``PSL2(q):k`` the extension of ``PSL2(q)`` by field automorphisms of order
``k``.  Examples: ``"A8"``, ``"PSL2(27):3"``, ``"S3 x C5"``.
"""

import re
from dataclasses import dataclass

from . import catalog
from .arith import factorize

__all__ = ["GroupSpecError", "GroupSpec", "Term", "parse_group", "build_group"]


class GroupSpecError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(message)
        self.text = text
        self.pos = pos
        self.message = message

    def __str__(self):
        return f"{self.message} at position {self.pos} in {self.text!r}"


@dataclass(frozen=True)
class Term:
    kind: str
    args: tuple
    pos: int = 0

    def __str__(self):
        a = self.args
        if self.kind in ("S", "A", "C", "D", "M", "F"):
            return f"{self.kind}{a[0]}"
        if self.kind == "PSL2":
            return f"PSL2({a[0]})" + (f":{a[1]}" if len(a) > 1 else "")
        if self.kind == "PGL2":
            return f"PGL2({a[0]})"
        if self.kind == "PSL":
            return f"PSL{a[0]}({a[1]})"
        if self.kind == "PSp4":
            return f"PSp4({a[0]})"
        raise AssertionError(self.kind)


@dataclass(frozen=True)
class GroupSpec:
    terms: tuple

    def __str__(self):
        return " x ".join(map(str, self.terms))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise GroupSpecError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.skip()
        return self.text[self.pos:self.pos + len(s)].lower() == s.lower()

    def expect(self, s):
        if not self.peek(s):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self):
        self.skip()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            self.error("expected an integer")
        self.pos += m.end()
        return int(m.group())

    def term(self):
        self.skip()
        start = self.pos
        t = self.text[self.pos:]
        low = t.lower()
        if low.startswith("psp4"):
            self.pos += 4
            self.expect("(")
            q = self.integer()
            self.expect(")")
            return Term("PSp4", (q,), start)
        if low.startswith("pgl2"):
            self.pos += 4
            self.expect("(")
            q = self.integer()
            self.expect(")")
            return Term("PGL2", (q,), start)
        if low.startswith("psl"):
            self.pos += 3
            if self.peek("("):
                self.expect("(")
                m = self.integer()
                self.expect(",")
                q = self.integer()
                self.expect(")")
            else:
                m = self.integer()
                self.expect("(")
                q = self.integer()
                self.expect(")")
            if m == 2:
                if self.peek(":"):
                    self.expect(":")
                    k = self.integer()
                    return Term("PSL2", (q, k), start)
                return Term("PSL2", (q,), start)
            if self.peek(":"):
                self.error("field extensions are only supported for PSL2")
            return Term("PSL", (m, q), start)
        if t[:1].upper() in ("S", "A", "C", "D", "M", "F"):
            kind = t[0].upper()
            self.pos += 1
            n = self.integer()
            return Term(kind, (n,), start)
        self.error("expected a group name")

    def parse(self):
        terms = [self.term()]
        while True:
            self.skip()
            if self.pos >= len(self.text):
                break
            if self.text[self.pos] in "x×X":
                self.pos += 1
                terms.append(self.term())
            else:
                self.error("expected 'x' or end of input")
        return GroupSpec(tuple(terms))


def parse_group(text):
    """Parse a group name; raises :class:`GroupSpecError` with a position."""
    if not text or not text.strip():
        raise GroupSpecError("empty group specification", text or "", 0)
    return _Parser(text).parse()


def _frobenius_from_order(n, term, text):
    f = factorize(n).factors if n > 1 else {}
    if not f:
        raise GroupSpecError("F needs an order p*k with k | p-1", text, term.pos)
    p = max(f)
    k = n // p
    if k < 2 or (p - 1) % k:
        raise GroupSpecError(f"no Frobenius group C_p:C_k of order {n}", text, term.pos)
    return catalog.frobenius(p, k)


def _build_term(term, text):
    a = term.args
    try:
        if term.kind == "S":
            return catalog.symmetric(a[0])
        if term.kind == "A":
            return catalog.alternating(a[0])
        if term.kind == "C":
            return catalog.cyclic(a[0])
        if term.kind == "D":
            return catalog.dihedral(a[0])
        if term.kind == "M":
            return catalog.mathieu(a[0])
        if term.kind == "F":
            return _frobenius_from_order(a[0], term, text)
        if term.kind == "PSL2":
            if len(a) == 2:
                return catalog.psl2_field_extension(a[0], a[1])
            return catalog.psl2(a[0])
        if term.kind == "PGL2":
            return catalog.pgl2(a[0])
        if term.kind == "PSL":
            return catalog.psl(a[0], a[1])
        if term.kind == "PSp4":
            return catalog.psp4(a[0])
    except GroupSpecError:
        raise
    except ValueError as exc:
        raise GroupSpecError(str(exc), text, term.pos) from None
    raise AssertionError(term.kind)


def build_group(spec):
    """Construct the group named by ``spec`` (a string or :class:`GroupSpec`)."""
    text = spec if isinstance(spec, str) else str(spec)
    tree = parse_group(spec) if isinstance(spec, str) else spec
    G = _build_term(tree.terms[0], text)
    for t in tree.terms[1:]:
        G = catalog.direct_product(G, _build_term(t, text))
    G.name = str(tree)
    return G
