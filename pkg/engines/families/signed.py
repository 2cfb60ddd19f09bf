"""
Non-crossing type B and D partition lattices NCBD_n(S).

Ground set ±[n] in the circular order 1 < 2 < ... < n < -1 < ... < -n.
Elements are partitions invariant under k ↦ -k with at most one fixed
(zero) block, non-crossing in that order; a zero block {k, -k} is allowed
only for k ∉ S. NCB_n is S = ∅ and NCD_n is S = [n].
"""

import math
from functools import lru_cache
from typing import Iterable, Tuple

from engines.families.partitions import SetPartition, is_noncrossing, refinement_lattice, set_partitions
from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from shared.constants import Capacity, Labels
from shared.exceptions import ValidationError, check_capacity
from shared.utils import catalan, setup_logger

logger = setup_logger(__name__)


def signed_ground(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1)) + tuple(-k for k in range(1, n + 1))


def signed_position(n: int, k: int) -> int:
    return k - 1 if k > 0 else n - k - 1


def _normalize_s(n: int, s: Iterable[int]) -> Tuple[int, ...]:
    members = tuple(sorted(set(s)))
    if any(not 1 <= k <= n for k in members):
        raise ValidationError(f"S must be a subset of [1, {n}]", field="S", value=members)
    return members


def _admissible(partition: SetPartition, excluded: Tuple[int, ...]) -> bool:
    blocks = {frozenset(block) for block in partition.blocks}
    if any(frozenset(-i for i in block) not in blocks for block in blocks):
        return False
    zero_blocks = [block for block in blocks if block == frozenset(-i for i in block)]
    if len(zero_blocks) > 1:
        return False
    if zero_blocks and len(zero_blocks[0]) == 2:
        (k,) = {abs(i) for i in zero_blocks[0]}
        if k in excluded:
            return False
    return True


@lru_cache(maxsize=None)
def _ncbd_lattice(n: int, excluded: Tuple[int, ...]) -> FiniteLattice:
    ground = signed_ground(n)
    position = lambda k: signed_position(n, k)  # noqa: E731
    partitions = []
    for blocks in set_partitions(ground):
        partition = SetPartition.from_blocks(blocks, key=position)
        if _admissible(partition, excluded) and is_noncrossing(partition, position):
            partitions.append(partition)
    labels = [p.label(Labels.SIGNED_MEMBER_SEPARATOR) for p in partitions]
    lattice = refinement_lattice(partitions, ground, labels)
    logger.debug("ncbd_lattice_built", n=n, S=list(excluded), elements=lattice.size, atoms=len(lattice.atoms))
    return lattice


def ncbd_lattice(n: int, s: Iterable[int] = ()) -> FiniteLattice:
    if n < 1:
        raise ValidationError("NCBD needs n ≥ 1", field="n", value=n)
    check_capacity(n, Capacity.NCBD_MAX_N, "signed partition order")
    return _ncbd_lattice(n, _normalize_s(n, s))


def ncb_lattice(n: int) -> FiniteLattice:
    return ncbd_lattice(n, ())


def ncd_lattice(n: int) -> FiniteLattice:
    return ncbd_lattice(n, range(1, n + 1))


# =============================================================================
# Signed atoms
# =============================================================================

HALF_EDGE = "half"
POSITIVE_EDGE = "positive"
NEGATIVE_EDGE = "negative"


def signed_atom_kind(lattice: FiniteLattice, atom: int) -> Tuple[str, Tuple[int, int]]:
    """Sort of an atom and its interval [i, j] on [n]"""
    blocks = lattice.key(atom).nontrivial_blocks()
    if len(blocks) == 1:
        k = abs(blocks[0][0])
        return HALF_EDGE, (k, k)
    block = next(b for b in blocks if max(b) > 0)
    a, b = block
    interval = (min(abs(a), abs(b)), max(abs(a), abs(b)))
    return (POSITIVE_EDGE if (a > 0) == (b > 0) else NEGATIVE_EDGE), interval


def _signed_below(first: Tuple[str, Tuple[int, int]], second: Tuple[str, Tuple[int, int]]) -> bool:
    (kind_a, (i, j)), (kind_b, (k, l)) = first, second
    if (i, j) == (k, l):
        return kind_a == NEGATIVE_EDGE and kind_b == POSITIVE_EDGE
    return i <= k and l <= j


def ncbd_atom_order(n: int, s: Iterable[int] = ()) -> AtomOrder:
    """
    a ⊲ b iff the interval of a properly contains that of b, or the
    intervals are equal with a negative and b positive.
    """
    lattice = ncbd_lattice(n, s)
    kinds = {atom: signed_atom_kind(lattice, atom) for atom in lattice.atoms}
    pairs = [(a, b) for a in lattice.atoms for b in lattice.atoms if a != b and _signed_below(kinds[a], kinds[b])]
    return AtomOrder.from_element_relations(lattice, pairs)


def ncb_atom_order(n: int) -> AtomOrder:
    return ncbd_atom_order(n, ())


def ncbd_mobius_top(n: int, s: Iterable[int] = ()) -> int:
    """μ(NCBD_n(S)) = (-1)^n C_(n-1) (2n - 1 - |S|)"""
    size = len(set(s))
    return (-1) ** n * catalan(n - 1) * (2 * n - 1 - size)


def ncb_nbb_base_count(n: int) -> int:
    return catalan(n - 1) * (2 * n - 1)


def ncb_mobius_top(n: int) -> int:
    """μ(NCB_n) = (-1)^n binom(2n - 1, n)"""
    return (-1) ** n * math.comb(2 * n - 1, n)
