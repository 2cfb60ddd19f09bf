"""
Boolean lattices and chains.
"""

from functools import lru_cache

import numpy as np

from engines.lattice_core.lattice import TABLE_DTYPE, FiniteLattice
from shared.constants import Capacity, Labels
from shared.exceptions import ValidationError, check_capacity
from shared.utils import bits_of


def _subset_label(mask: int) -> str:
    return "".join(str(p + 1) for p in bits_of(mask)) or Labels.EMPTY_WORD


@lru_cache(maxsize=None)
def boolean_lattice(n: int) -> FiniteLattice:
    """B_n on subsets of [n]; element index = subset bit mask"""
    if n < 0:
        raise ValidationError("Boolean lattice needs n ≥ 0", field="n", value=n)
    check_capacity(n, Capacity.BOOLEAN_MAX_N, "Boolean lattice rank")
    check_capacity(1 << n, Capacity.MAX_LATTICE_ELEMENTS, "lattice size")
    masks = np.arange(1 << n, dtype=TABLE_DTYPE)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    return FiniteLattice(
        leq,
        np.bitwise_or.outer(masks, masks),
        np.bitwise_and.outer(masks, masks),
        labels=[_subset_label(int(m)) for m in masks],
    )


@lru_cache(maxsize=None)
def chain(n: int) -> FiniteLattice:
    """0 < 1 < ... < n, a chain of length n"""
    if n < 0:
        raise ValidationError("chain length must be ≥ 0", field="n", value=n)
    check_capacity(n, Capacity.CHAIN_MAX_LENGTH, "chain length")
    points = np.arange(n + 1, dtype=TABLE_DTYPE)
    return FiniteLattice(
        points[:, None] <= points[None, :],
        np.maximum.outer(points, points),
        np.minimum.outer(points, points),
    )
