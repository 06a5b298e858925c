"""Permutations of {0, ..., n-1}.

A :class:`Permutation` is a tuple of images: ``p[i]`` is the image of point
``i``.  Products are read left to right, so ``a * b`` applies ``a`` first and
then ``b``.  Conjugation follows the same convention: ``z ** g`` would be
ambiguous, so use :meth:`Permutation.conjugate`, which returns ``g^-1 z g``.

Internally the group algorithms work on plain tuples for speed; every
:class:`Permutation` is a tuple, so the helpers :func:`mul` and :func:`inv`
accept either.
"""

import math
import re

__all__ = [
    "Permutation",
    "compose",
    "mul",
    "inv",
    "identity",
    "parse_cycles",
]


def mul(a, b):
    """Product on raw tuples: apply ``a`` first, then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity(n):
    return Permutation(range(n))


class Permutation(tuple):
    """An immutable permutation stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images=(), check=True):
        self = tuple.__new__(cls, images)
        if check and sorted(self) != list(range(len(self))):
            raise ValueError(f"not a bijection of 0..{len(self) - 1}: {tuple(self)}")
        return self

    @classmethod
    def _raw(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 0-indexed cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + tuple(cyc[:1])):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, degree=None):
        """Parse 1-indexed cycle notation such as ``"(1,2,3)(4,5)"``.

        The identity is written ``"()"``.  When ``degree`` is omitted it is
        the largest point mentioned.
        """
        return parse_cycles(text, degree)

    @property
    def degree(self):
        return len(self)

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(len(self)))
        base = tuple(self)
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def inverse(self):
        return Permutation._raw(inv(self))

    def conjugate(self, g):
        """Return ``g^-1 * self * g``."""
        if len(g) != len(self):
            raise ValueError("degree mismatch")
        out = [0] * len(self)
        for i, x in enumerate(self):
            out[g[i]] = g[x]
        return Permutation._raw(out)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self))

    def support(self):
        return [i for i, x in enumerate(self) if i != x]

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point (0-indexed)."""
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={len(self)})"


def compose(a, b):
    """Apply ``a`` first, then ``b``."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    return Permutation._raw(mul(a, b))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree=None):
    text = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected {text[pos:m.start()]!r} at position {pos}")
        body = m.group(1).strip()
        if body:
            try:
                cycles.append(tuple(int(x) - 1 for x in body.split(",")))
            except ValueError:
                raise ValueError(f"bad cycle {m.group(0)!r} at position {m.start()}") from None
        pos = m.end()
    if text[pos:].strip() or (not cycles and text != "()" and pos == 0):
        raise ValueError(f"cannot parse {text[pos:]!r} at position {pos}")
    top = max((a + 1 for c in cycles for a in c), default=0)
    if degree is None:
        degree = top
    elif top > degree:
        raise ValueError(f"point {top} exceeds degree {degree}")
    return Permutation.from_cycles(degree, cycles)
