"""
Set partitions: the partition lattice Π_n, the non-crossing partition
lattice NC_n and the two atom orders on A(NC_n).

Partitions of [n] are generated as restricted growth strings. Refinement is
containment of the sets of same-block pairs, encoded as bit masks.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from shared.constants import Capacity, Labels
from shared.exceptions import ValidationError, check_capacity
from shared.utils import catalan, setup_logger

logger = setup_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty blocks covering a ground set, in canonical order"""

    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], key: Callable[[int], int] = lambda i: i) -> "SetPartition":
        normalized = [tuple(sorted(block, key=key)) for block in blocks]
        if any(not block for block in normalized):
            raise ValidationError("partition blocks must be nonempty", field="blocks")
        members = [i for block in normalized for i in block]
        if len(members) != len(set(members)):
            raise ValidationError("partition blocks must be disjoint", field="blocks")
        return cls(tuple(sorted(normalized, key=lambda block: key(block[0]))))

    @property
    def ground(self) -> FrozenSet[int]:
        return frozenset(i for block in self.blocks for i in block)

    def block_of(self, i: int) -> Tuple[int, ...]:
        for block in self.blocks:
            if i in block:
                return block
        raise ValidationError(f"{i} is not in the ground set", field="element", value=i)

    def nontrivial_blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(block for block in self.blocks if len(block) > 1)

    def refines(self, other: "SetPartition") -> bool:
        return all(any(set(block) <= set(big) for big in other.blocks) for block in self.blocks)

    def label(self, separator: str = "") -> str:
        return Labels.BLOCK_SEPARATOR.join(separator.join(str(i) for i in block) for block in self.blocks)

    def __str__(self) -> str:
        return self.label()


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """a_0 = 0 and a_i ≤ 1 + max(a_0..a_{i-1}), in lexicographic order"""
    if n == 0:
        yield ()
        return

    def extend(prefix: List[int], top: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(top + 2):
            prefix.append(value)
            yield from extend(prefix, max(top, value))
            prefix.pop()

    yield from extend([0], 0)


def set_partitions(ground: Sequence[int]) -> Iterator[List[List[int]]]:
    for growth in restricted_growth_strings(len(ground)):
        blocks: List[List[int]] = [[] for _ in range(max(growth, default=-1) + 1)]
        for member, block in zip(ground, growth):
            blocks[block].append(member)
        yield blocks


def crosses(block_ids: Sequence[int]) -> bool:
    """True when positions a<b<c<d exist with ids[a]=ids[c] ≠ ids[b]=ids[d]"""
    for a, b, c, d in itertools.combinations(range(len(block_ids)), 4):
        if block_ids[a] == block_ids[c] != block_ids[b] == block_ids[d]:
            return True
    return False


def is_noncrossing(partition: SetPartition, position: Callable[[int], int] = lambda i: i) -> bool:
    ordered = sorted(partition.ground, key=position)
    block_index = {i: b for b, block in enumerate(partition.blocks) for i in block}
    return not crosses([block_index[i] for i in ordered])


def refinement_lattice(
    partitions: Sequence[SetPartition], ground: Sequence[int], labels: Sequence[str]
) -> FiniteLattice:
    """Refinement order on a family of partitions; joins are computed within the family"""
    slot = {member: i for i, member in enumerate(ground)}
    pair_bit: Dict[Edge, int] = {}
    for i, j in itertools.combinations(range(len(ground)), 2):
        pair_bit[(i, j)] = len(pair_bit)
    masks = np.zeros(len(partitions), dtype=np.int64)
    for index, partition in enumerate(partitions):
        mask = 0
        for block in partition.blocks:
            for a, b in itertools.combinations(sorted(slot[i] for i in block), 2):
                mask |= 1 << pair_bit[(a, b)]
        masks[index] = mask
    leq = (masks[:, None] & ~masks[None, :]) == 0
    return FiniteLattice.from_order(leq, labels=labels, keys=partitions)


# =============================================================================
# Π_n and NC_n
# =============================================================================


def _check_n(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise ValidationError(f"{what} needs n ≥ 1", field="n", value=n)
    check_capacity(n, limit, what)


@lru_cache(maxsize=None)
def partition_lattice(n: int) -> FiniteLattice:
    """Π_n under refinement"""
    _check_n(n, Capacity.PARTITION_MAX_N, "partition lattice order")
    ground = list(range(1, n + 1))
    partitions = [SetPartition.from_blocks(blocks) for blocks in set_partitions(ground)]
    lattice = refinement_lattice(partitions, ground, [p.label() for p in partitions])
    logger.debug("partition_lattice_built", n=n, elements=lattice.size, atoms=len(lattice.atoms))
    return lattice


@lru_cache(maxsize=None)
def noncrossing_lattice(n: int) -> FiniteLattice:
    """NC_n under refinement, with joins taken inside NC_n"""
    _check_n(n, Capacity.NONCROSSING_MAX_N, "non-crossing lattice order")
    ground = list(range(1, n + 1))
    partitions = [
        p for p in (SetPartition.from_blocks(blocks) for blocks in set_partitions(ground)) if is_noncrossing(p)
    ]
    lattice = refinement_lattice(partitions, ground, [p.label() for p in partitions])
    logger.debug("noncrossing_lattice_built", n=n, elements=lattice.size, atoms=len(lattice.atoms))
    return lattice


def atom_edge(lattice: FiniteLattice, atom: int) -> Edge:
    """The pair ij merged by an atom of Π_n or NC_n"""
    (block,) = lattice.key(atom).nontrivial_blocks()
    return block[0], block[1]


def nc_atom_order(n: int, variant: str = "rank") -> AtomOrder:
    """
    Atom orders on NC_n.

    rank: ij ⊲ i'j' iff j < j'.
    interval: ij ⊲ i'j' iff [i, j] properly contains [i', j'].
    """
    lattice = noncrossing_lattice(n)
    edges = {atom: atom_edge(lattice, atom) for atom in lattice.atoms}
    if variant == "rank":
        below = lambda e, f: e[1] < f[1]  # noqa: E731
    elif variant == "interval":
        below = lambda e, f: e != f and e[0] <= f[0] and f[1] <= e[1]  # noqa: E731
    else:
        raise ValidationError(f"unknown NC atom order {variant!r}", field="variant", value=variant)
    pairs = [(a, b) for a in lattice.atoms for b in lattice.atoms if below(edges[a], edges[b])]
    return AtomOrder.from_element_relations(lattice, pairs)


def noncrossing_tree_of(lattice: FiniteLattice, atoms: Iterable[int]) -> FrozenSet[Edge]:
    """Graph G_B with one edge ij per atom ij of B"""
    return frozenset(atom_edge(lattice, atom) for atom in atoms)


def is_noncrossing_graph(edges: Iterable[Edge]) -> bool:
    ordered = [tuple(sorted(edge)) for edge in edges]
    for (i, j), (k, l) in itertools.combinations(ordered, 2):
        if i < k < j < l or k < i < l < j:
            return False
    return True


def partition_mobius_top(n: int) -> int:
    """μ(Π_n) = (-1)^(n-1) (n-1)!"""
    return (-1) ** (n - 1) * math.factorial(n - 1)


def noncrossing_mobius_top(n: int) -> int:
    """μ(NC_n) = (-1)^(n-1) C_(n-1)"""
    return (-1) ** (n - 1) * catalan(n - 1)
