"""Named group collections used by the verification suites and tests."""

import random

from .groups import PermGroup
from .groupspec import build_group
from .subgroups import is_soluble

__all__ = [
    "SOLUBLE_NAMES",
    "CATALOG_NAMES",
    "PARTITIONS",
    "soluble_corpus",
    "catalog_corpus",
    "random_subgroups",
]

# soluble groups of order at most 2000, all assembled from catalog pieces
SOLUBLE_NAMES = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C10", "C12", "C15", "C30",
    "D6", "D8", "D10", "D12", "D14", "D18", "D20", "D30",
    "A4", "S4", "F20", "F21", "F42", "F55", "F110", "PSL2(2)", "PSL2(3)", "PGL2(3)",
    "S3 x C3", "S3 x C5", "S3 x S3", "D10 x C3", "D8 x C3", "A4 x C5", "S4 x C3",
    "F20 x C3", "F21 x C2", "C5 x F21", "S4 x C5", "S4 x S3", "A4 x A4", "F21 x S3",
    "D8 x D8", "C2 x C2 x C2", "S4 x F20", "S4 x S4", "A4 x F21", "F20 x F21",
    "S4 x F42", "D10 x D6 x C7",
]

# every catalog group of order at most 10^4 used by the property suites
CATALOG_NAMES = [
    "S3", "S4", "S5", "S6", "S7", "A4", "A5", "A6", "A7",
    "C6", "C12", "C30", "D8", "D10", "D14", "F20", "F21",
    "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)", "PSL2(11)", "PSL2(13)",
    "PSL2(16)", "PSL2(17)", "PSL2(19)", "PSL2(23)", "PSL2(25)", "PSL2(27)",
    "PGL2(5)", "PGL2(7)", "PGL2(9)", "PGL2(11)", "PGL2(13)",
    "PSL2(8):3", "PSL2(9):2", "PSL2(16):2",
    "PSL3(2)", "PSL3(3)", "M11",
    "S3 x C5", "A5 x C3", "S4 x S3", "A4 x F21", "A5 x S3",
]

# prime partitions covering every prime of the soluble corpus
PARTITIONS = [
    [{2, 3}, {5}, {7}, {11}],
    [{2}, {3}, {5}, {7}, {11}],
    [{2, 3, 5, 7, 11}],
    [{2, 5}, {3, 7}, {11}],
    [{2, 7}, {3, 5}, {11}],
    [{2}, {3, 5, 7, 11}],
    [{3}, {2, 5, 7, 11}],
    [{2, 3, 7}, {5, 11}],
]


def soluble_corpus():
    out = []
    for name in SOLUBLE_NAMES:
        G = build_group(name)
        if G.order > 2000 or not is_soluble(G):
            raise AssertionError(f"{name} does not belong in the soluble corpus")
        out.append((name, G))
    return out


def catalog_corpus(max_order=10 ** 4):
    out = []
    for name in CATALOG_NAMES:
        G = build_group(name)
        if G.order <= max_order:
            out.append((name, G))
    return out


def random_subgroups(G, count, seed, gens=2):
    """``count`` subgroups of ``G`` generated by seeded random elements."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(1, gens)
        els = [G.random_element(rng) for _ in range(k)]
        out.append(PermGroup(G.degree, els))
    return out
