"""
Perfect atom orders: orders whose NBB bases of every x all have the same
parity, so that |μ(0̂, x)| equals the number of bases.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from engines.mobius_engine.atom_sets import atom_subset_tables, superset_closure
from engines.mobius_engine.mobius import bounded_below_flags, mobius_recursive, nbb_flags
from shared.constants import Enumeration
from shared.exceptions import PerfectOrderBudgetExhaustedError, validate_numeric_range
from shared.utils import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class PerfectionEntry:
    element: int
    mu: int
    even_bases: int
    odd_bases: int

    @property
    def bases(self) -> int:
        return self.even_bases + self.odd_bases

    @property
    def consistent(self) -> bool:
        return self.bases == abs(self.mu)


@dataclass(frozen=True)
class PerfectionReport:
    perfect: bool
    entries: Tuple[PerfectionEntry, ...]

    @property
    def failures(self) -> Tuple[PerfectionEntry, ...]:
        return tuple(e for e in self.entries if not e.consistent)


def is_perfect_order(lattice: FiniteLattice, order: AtomOrder) -> PerfectionReport:
    tables = atom_subset_tables(lattice)
    even, odd = tables.parity_counts(nbb_flags(lattice, order))
    mu = mobius_recursive(lattice)
    entries = tuple(
        PerfectionEntry(element=x, mu=mu[x], even_bases=int(even[x]), odd_bases=int(odd[x]))
        for x in range(lattice.size)
    )
    return PerfectionReport(perfect=all(e.consistent for e in entries), entries=entries)


def _covers(relation: np.ndarray) -> np.ndarray:
    through = (relation.astype(np.int64) @ relation.astype(np.int64)) > 0
    return relation & ~through


def _extensions(relation: np.ndarray) -> Iterator[np.ndarray]:
    """Orders with one more relation whose largest cover is the added pair"""
    k = relation.shape[0]
    free = ~(relation | relation.T | np.eye(k, dtype=bool))
    for a, b in zip(*np.nonzero(free)):
        if (relation[:, a] & ~relation[:, b]).any() or (relation[b, :] & ~relation[a, :]).any():
            continue
        if (relation[a, :] & relation[:, b]).any():
            continue
        extended = relation.copy()
        extended[a, b] = True
        covers = np.argwhere(_covers(extended))
        if tuple(covers[-1]) == (a, b):
            yield extended


def _orders_with_relations(relation: np.ndarray, remaining: int) -> Iterator[np.ndarray]:
    if remaining == 0:
        yield relation
        return
    for extended in _extensions(relation):
        yield from _orders_with_relations(extended, remaining - 1)


def iter_atom_relations(k: int) -> Iterator[np.ndarray]:
    """
    Every strict partial order on k atom positions, once each.

    Orders come by increasing number of relations. Each order is reached
    from the one obtained by deleting its largest cover pair, so no
    visited set is kept.
    """
    empty = np.zeros((k, k), dtype=bool)
    for count in range(k * (k - 1) // 2 + 1):
        found = False
        for relation in _orders_with_relations(empty, count):
            found = True
            yield relation
        if not found:
            return


def search_perfect_order(
    lattice: FiniteLattice, budget: int = Enumeration.DEFAULT_PERFECT_ORDER_BUDGET
) -> Optional[AtomOrder]:
    """
    Search atom orders by increasing number of relations.

    Returns the first perfect order found, or None once every order has been
    tried. Raises PerfectOrderBudgetExhaustedError after ``budget`` orders
    without a result.
    """
    validate_numeric_range(budget, min_value=1, field_name="budget")
    tables = atom_subset_tables(lattice)
    k = tables.atom_count
    absolute_mu = np.abs(mobius_recursive(lattice).as_array())

    for tried, relation in enumerate(iter_atom_relations(k), start=1):
        if tried > budget:
            raise PerfectOrderBudgetExhaustedError(
                f"no perfect order among the first {budget} atom orders", budget=budget, tried=budget
            )
        if tried % Enumeration.PERFECT_ORDER_LOG_INTERVAL == 0:
            logger.info("perfect_order_search_progress", tried=tried, relations=int(relation.sum()))

        order = AtomOrder(lattice, relation)
        flags = ~superset_closure(bounded_below_flags(tables, order), k)
        even, odd = tables.parity_counts(flags)
        if np.array_equal(even + odd, absolute_mu):
            logger.info("perfect_order_found", tried=tried, relations=order.relation_count)
            return order

    logger.info("perfect_order_search_exhausted")
    return None
