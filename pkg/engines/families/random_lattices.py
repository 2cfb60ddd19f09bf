"""
Deterministic random lattices for property tests.

Each lattice is an intersection-closed family of subsets of a small ground
set together with the full set, ordered by inclusion.
"""

from typing import Set

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from shared.exceptions import ValidationError
from shared.utils import bits_of, setup_logger

logger = setup_logger(__name__)

_ATTEMPTS = 60


def _closure(family: Set[int], extra: int) -> Set[int]:
    closed = set(family)
    frontier = [extra]
    while frontier:
        new = frontier.pop()
        if new in closed:
            continue
        frontier.extend(new & old for old in closed)
        closed.add(new)
    return closed


def _atom_count(family: Set[int]) -> int:
    bottom = min(family, key=lambda m: (bin(m).count("1"), m))
    above = [m for m in family if m != bottom]
    return sum(1 for m in above if not any(o != m and (o & ~m) == 0 for o in above))


def random_closure_lattice(seed: int, max_elements: int = 30, max_atoms: int = 10) -> FiniteLattice:
    if max_elements < 1 or max_atoms < 0:
        raise ValidationError("random lattice bounds must be positive", field="max_elements", value=max_elements)
    rng = np.random.default_rng(seed)
    ground = int(rng.integers(2, 8))
    full = (1 << ground) - 1
    family = {full}
    for _ in range(_ATTEMPTS):
        candidate = _closure(family, int(rng.integers(0, full + 1)))
        if len(candidate) <= max_elements and _atom_count(candidate) <= max_atoms:
            family = candidate

    members = sorted(family, key=lambda m: (bin(m).count("1"), m))
    masks = np.array(members, dtype=np.int64)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    labels = ["{" + ",".join(str(p + 1) for p in bits_of(m)) + "}" for m in members]
    lattice = FiniteLattice.from_order(leq, labels=labels)
    logger.debug("random_lattice_built", seed=seed, elements=lattice.size, atoms=len(lattice.atoms))
    return lattice
