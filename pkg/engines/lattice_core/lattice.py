"""
Finite lattices over dense element indices.

A FiniteLattice stores its order relation and its join and meet tables as
read-only numpy arrays, computed eagerly when the lattice is built:

- ``leq[x, y]`` is true iff x ≤ y
- ``join_table[x, y]`` / ``meet_table[x, y]`` hold element indices
- ``bottom``, ``top`` and the sorted ``atoms`` tuple are derived once

Elements are the integers ``0..size-1``. Labels are display strings and
optional keys are the domain objects (partitions, words, vectors) a family
constructor built the lattice from.
"""

from functools import cached_property
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from shared.constants import Capacity
from shared.exceptions import (
    CycleDetectedError,
    LatticeStructureError,
    NoBoundedExtremesError,
    NotALatticeError,
    NotComparableError,
    ValidationError,
    check_capacity,
)
from shared.shared_types import CoverList
from shared.utils import setup_logger

logger = setup_logger(__name__)

TABLE_DTYPE = np.int32


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.flags.writeable = False
    return array


def _cover_matrix(leq: np.ndarray) -> np.ndarray:
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    weights = strict.astype(np.float32)
    through_third = (weights @ weights) > 0
    return strict & ~through_third


def _least_bounds(order: np.ndarray, covers: Sequence[Sequence[int]], bound: str) -> np.ndarray:
    """
    Least upper bounds for the order ``order`` (``order[x, y]`` iff x ≤ y).

    Columns are filled from the top down. For x ≰ y the least upper bound of
    {x, y} is the least of the bounds of {x, y'} over the upper covers y' of
    y, so each column only reads columns already filled.
    """
    n = order.shape[0]
    height = order.sum(axis=0)
    table = np.full((n, n), -1, dtype=TABLE_DTYPE)
    for y in np.argsort(-height, kind="stable"):
        column = np.full(n, -1, dtype=TABLE_DTYPE)
        below = order[:, y]
        column[below] = y
        rest = np.flatnonzero(~below)
        if rest.size:
            above = np.asarray(covers[y], dtype=np.intp)
            if above.size == 0:
                raise NotALatticeError(
                    f"elements {int(rest[0])} and {int(y)} have no common {bound} bound",
                    pair=(int(rest[0]), int(y)),
                    bound=bound,
                )
            candidates = table[np.ix_(rest, above)]
            least = candidates[np.arange(rest.size), height[candidates].argmin(axis=1)]
            ok = order[least[:, None], candidates].all(axis=1)
            if not ok.all():
                x = int(rest[np.flatnonzero(~ok)[0]])
                raise NotALatticeError(
                    f"elements {x} and {int(y)} have no unique {'join' if bound == 'upper' else 'meet'}",
                    pair=(x, int(y)),
                    bound=bound,
                )
            column[rest] = least
        table[:, y] = column
    return table


def _extremes(leq: np.ndarray) -> Tuple[int, int]:
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if bottoms.size != 1 or tops.size != 1:
        minimal = np.flatnonzero(leq.sum(axis=0) == 1)
        maximal = np.flatnonzero(leq.sum(axis=1) == 1)
        witness = minimal if minimal.size > 1 else maximal
        pair = (int(witness[0]), int(witness[1])) if witness.size > 1 else None
        raise NoBoundedExtremesError(
            f"poset has {minimal.size} minimal and {maximal.size} maximal elements",
            pair=pair,
            details={"minimal": minimal.tolist(), "maximal": maximal.tolist()},
        )
    return int(bottoms[0]), int(tops[0])


class FiniteLattice:
    """Immutable finite lattice with precomputed order, join and meet tables"""

    def __init__(
        self,
        leq: np.ndarray,
        join_table: np.ndarray,
        meet_table: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        keys: Optional[Sequence[Hashable]] = None,
        parent_index: Optional[Sequence[int]] = None,
        covers: Optional[np.ndarray] = None,
    ):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] == 0:
            raise ValidationError("order relation must be a nonempty square matrix", field="leq", value=leq.shape)
        n = leq.shape[0]
        check_capacity(n, Capacity.MAX_LATTICE_ELEMENTS, "lattice size")
        for name, table in (("join_table", join_table), ("meet_table", meet_table)):
            if np.shape(table) != (n, n):
                raise ValidationError(f"{name} must be {n}x{n}", field=name, value=np.shape(table))

        self.size = n
        self._leq = _frozen(leq)
        self._join = _frozen(np.asarray(join_table, dtype=TABLE_DTYPE))
        self._meet = _frozen(np.asarray(meet_table, dtype=TABLE_DTYPE))
        self.bottom, self.top = _extremes(self._leq)

        down_counts = self._leq.sum(axis=0)
        self.atoms: Tuple[int, ...] = tuple(int(x) for x in np.flatnonzero(down_counts == 2) if self._leq[self.bottom, x])

        if keys is not None:
            keys = tuple(keys)
            if len(keys) != n:
                raise ValidationError(f"expected {n} keys, got {len(keys)}", field="keys")
        self.keys: Optional[Tuple[Hashable, ...]] = keys
        if labels is None:
            labels = [str(k) for k in keys] if keys is not None else [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValidationError(f"expected {n} labels, got {len(labels)}", field="labels")
        self.labels: Tuple[str, ...] = tuple(labels)
        self.parent_index: Optional[Tuple[int, ...]] = tuple(int(i) for i in parent_index) if parent_index is not None else None
        self._covers = _frozen(np.asarray(covers, dtype=bool)) if covers is not None else None

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_order(
        cls,
        leq: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        keys: Optional[Sequence[Hashable]] = None,
        covers: Optional[np.ndarray] = None,
    ) -> "FiniteLattice":
        """
        Build a lattice from a full order relation.

        Args:
            leq: Boolean matrix with ``leq[x, y]`` iff x ≤ y
            labels: Optional display strings
            keys: Optional domain objects, one per element
            covers: Optional precomputed cover matrix

        Raises:
            CycleDetectedError: If the relation is not antisymmetric
            LatticeStructureError: If the relation is not reflexive and transitive
            NotALatticeError: If some pair lacks a unique join or meet
        """
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        check_capacity(n, Capacity.MAX_LATTICE_ELEMENTS, "lattice size")
        if not leq.diagonal().all():
            raise LatticeStructureError("order relation is not reflexive")
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            x, y = (int(v) for v in np.argwhere(both)[0])
            raise CycleDetectedError(f"elements {x} and {y} lie below each other", cycle=[x, y, x])
        if covers is None:
            weights = leq.astype(np.float32)
            if (((weights @ weights) > 0) & ~leq).any():
                raise LatticeStructureError("order relation is not transitive")
            covers = _cover_matrix(leq)
        upper = [np.flatnonzero(row).tolist() for row in covers]
        lower = [np.flatnonzero(col).tolist() for col in covers.T]

        _extremes(leq)
        join_table = _least_bounds(leq, upper, "upper")
        meet_table = _least_bounds(leq.T, lower, "lower")
        lattice = cls(leq, join_table, meet_table, labels=labels, keys=keys, covers=covers)
        logger.debug("lattice built", elements=n, atoms=len(lattice.atoms))
        return lattice

    @classmethod
    def from_cover_relations(cls, cover_list: CoverList) -> "FiniteLattice":
        """Build a lattice from a Hasse diagram; transitively implied pairs are dropped"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(cover_list.size))
        graph.add_edges_from(cover_list.covers)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [int(edge[0]) for edge in nx.find_cycle(graph)]
            raise CycleDetectedError(f"cover relation contains the cycle {cycle}", cycle=cycle)
        reduced = nx.transitive_reduction(graph)

        n = cover_list.size
        check_capacity(n, Capacity.MAX_LATTICE_ELEMENTS, "lattice size")
        covers = np.zeros((n, n), dtype=bool)
        for lo, up in reduced.edges():
            covers[lo, up] = True
        leq = np.eye(n, dtype=bool)
        for x in reversed(list(nx.topological_sort(reduced))):
            for up in reduced.successors(x):
                leq[x] |= leq[up]
        return cls.from_order(leq, labels=cover_list.labels, covers=covers)

    # ------------------------------------------------------------------
    # Tables
    # ------------------------------------------------------------------

    @property
    def leq(self) -> np.ndarray:
        return self._leq

    @property
    def join_table(self) -> np.ndarray:
        return self._join

    @property
    def meet_table(self) -> np.ndarray:
        return self._meet

    @property
    def cover_matrix(self) -> np.ndarray:
        if self._covers is None:
            self._covers = _frozen(_cover_matrix(self._leq))
        return self._covers

    @cached_property
    def _upper_covers(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(y) for y in np.flatnonzero(row)) for row in self.cover_matrix)

    @cached_property
    def _lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(y) for y in np.flatnonzero(col)) for col in self.cover_matrix.T)

    @cached_property
    def heights(self) -> np.ndarray:
        """Number of elements below each element (a linear-extension key)"""
        return _frozen(self._leq.sum(axis=0))

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in np.argsort(self.heights, kind="stable"))

    @cached_property
    def _index(self) -> Dict[Any, int]:
        index: Dict[Any, int] = {label: i for i, label in enumerate(self.labels)}
        if self.keys is not None:
            index.update({key: i for i, key in enumerate(self.keys)})
        return index

    # ------------------------------------------------------------------
    # Element queries
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, atoms={len(self.atoms)})"

    def le(self, x: int, y: int) -> bool:
        return bool(self._leq[x, y])

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self._leq[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self._join[x, y])

    def meet(self, x: int, y: int) -> int:
        return int(self._meet[x, y])

    def covers(self, x: int, y: int) -> bool:
        """True iff y covers x"""
        return bool(self.cover_matrix[x, y])

    def upper_covers(self, x: int) -> Tuple[int, ...]:
        return self._upper_covers[x]

    def lower_covers(self, x: int) -> Tuple[int, ...]:
        return self._lower_covers[x]

    def atoms_below(self, x: int) -> Tuple[int, ...]:
        return tuple(a for a in self.atoms if self._leq[a, x])

    def label(self, x: int) -> str:
        return self.labels[x]

    def key(self, x: int) -> Hashable:
        return self.keys[x] if self.keys is not None else x

    def index_of(self, key_or_label: Any) -> int:
        """Element index for a key or a label"""
        try:
            return self._index[key_or_label]
        except KeyError:
            raise ValidationError(f"no element {key_or_label!r} in lattice", field="element", value=key_or_label) from None

    def join_set(self, elements: Iterable[int]) -> int:
        result = self.bottom
        for x in elements:
            result = int(self._join[result, x])
        return result

    def meet_set(self, elements: Iterable[int]) -> int:
        result = self.top
        for x in elements:
            result = int(self._meet[result, x])
        return result

    def cover_pairs(self) -> List[Tuple[int, int]]:
        """Hasse-diagram edges (lower, upper), sorted"""
        return [(int(lo), int(up)) for lo, up in np.argwhere(self.cover_matrix)]

    def same_structure(self, other: "FiniteLattice") -> bool:
        """True when both lattices have identical tables on identical indices"""
        return (
            self.size == other.size
            and np.array_equal(self._leq, other._leq)
            and np.array_equal(self._join, other._join)
            and np.array_equal(self._meet, other._meet)
        )

    # ------------------------------------------------------------------
    # Derived lattices
    # ------------------------------------------------------------------

    def interval(self, lo: int, hi: int) -> "FiniteLattice":
        """The interval [lo, hi]; ``parent_index`` maps its elements back here"""
        if not self._leq[lo, hi]:
            raise NotComparableError(
                f"{self.labels[lo]} is not below {self.labels[hi]}", lo=self.labels[lo], hi=self.labels[hi]
            )
        members = np.flatnonzero(self._leq[lo] & self._leq[:, hi])
        position = np.full(self.size, -1, dtype=TABLE_DTYPE)
        position[members] = np.arange(members.size, dtype=TABLE_DTYPE)
        grid = np.ix_(members, members)
        return FiniteLattice(
            self._leq[grid],
            position[self._join[grid]],
            position[self._meet[grid]],
            labels=[self.labels[i] for i in members],
            keys=[self.keys[i] for i in members] if self.keys is not None else None,
            parent_index=members.tolist(),
            covers=self.cover_matrix[grid],
        )

    def iter_maximal_chains(self) -> Iterator[Tuple[int, ...]]:
        """Maximal chains, depth-first from the bottom, lower indices first"""
        stack: List[Tuple[int, ...]] = [(self.bottom,)]
        while stack:
            chain = stack.pop()
            last = chain[-1]
            if last == self.top:
                yield chain
                continue
            for y in reversed(self.upper_covers(last)):
                stack.append(chain + (y,))


def from_cover_relations(cover_list: CoverList) -> FiniteLattice:
    return FiniteLattice.from_cover_relations(cover_list)


def join_set(lattice: FiniteLattice, elements: Iterable[int]) -> int:
    return lattice.join_set(elements)


def interval(lattice: FiniteLattice, lo: int, hi: int) -> FiniteLattice:
    return lattice.interval(lo, hi)


def maximal_chains(lattice: FiniteLattice) -> Iterator[Tuple[int, ...]]:
    return lattice.iter_maximal_chains()


def direct_product(first: FiniteLattice, second: FiniteLattice) -> FiniteLattice:
    """Component-wise product; element (i, j) has index ``i * len(second) + j``"""
    n1, n2 = first.size, second.size
    check_capacity(n1 * n2, Capacity.MAX_LATTICE_ELEMENTS, "lattice size")
    block = np.ones((n2, n2), dtype=TABLE_DTYPE)

    def combine(table1: np.ndarray, table2: np.ndarray) -> np.ndarray:
        return np.kron(table1.astype(TABLE_DTYPE), block) * n2 + np.tile(table2, (n1, n1))

    leq = np.kron(first.leq.astype(np.uint8), second.leq.astype(np.uint8)).astype(bool)
    covers = (
        np.kron(first.cover_matrix.astype(np.uint8), np.eye(n2, dtype=np.uint8))
        | np.kron(np.eye(n1, dtype=np.uint8), second.cover_matrix.astype(np.uint8))
    ).astype(bool)
    keys = None
    if first.keys is not None and second.keys is not None:
        keys = [(k1, k2) for k1 in first.keys for k2 in second.keys]
    labels = [f"({l1},{l2})" for l1 in first.labels for l2 in second.labels]
    return FiniteLattice(
        leq,
        combine(first.join_table, second.join_table),
        combine(first.meet_table, second.meet_table),
        labels=labels,
        keys=keys,
        covers=covers,
    )
