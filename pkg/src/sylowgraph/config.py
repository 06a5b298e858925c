"""Global work budgets.

Every expensive operation checks one of these limits and raises
:class:`BudgetExceeded` instead of running unbounded.
"""

from contextlib import contextmanager
from dataclasses import dataclass, fields

__all__ = ["Budgets", "BudgetExceeded", "budgets", "override"]


class BudgetExceeded(RuntimeError):
    """A configured work limit was hit."""


@dataclass
class Budgets:
    # elements() streaming limit
    max_order: int = 30_000_000
    # conjugacy-orbit size limit for reality tests
    max_class_size: int = 2_000_000
    # nodes visited by a single subgroup search
    max_search_nodes: int = 50_000_000
    # seed for every randomized routine (random Schreier-Sims, Sylow ascent)
    seed: int = 20240601


budgets = Budgets()


@contextmanager
def override(**changes):
    """Temporarily change budget values::

        with override(max_order=5000):
            ...
    """
    names = {f.name for f in fields(Budgets)}
    unknown = set(changes) - names
    if unknown:
        raise TypeError(f"unknown budget(s): {sorted(unknown)}")
    saved = {k: getattr(budgets, k) for k in changes}
    for k, v in changes.items():
        setattr(budgets, k, v)
    try:
        yield budgets
    finally:
        for k, v in saved.items():
            setattr(budgets, k, v)
