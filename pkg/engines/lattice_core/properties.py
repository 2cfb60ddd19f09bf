"""
Order-theoretic predicates on finite lattices: ranked, semimodular, atomic,
geometric and distributive, plus chain-length profiles.
"""

from typing import Iterable, Optional, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice


def chain_length_profile(lattice: FiniteLattice) -> Tuple[np.ndarray, np.ndarray]:
    """Shortest and longest 0̂-to-x maximal chain lengths for every x"""
    shortest = np.zeros(lattice.size, dtype=np.int64)
    longest = np.zeros(lattice.size, dtype=np.int64)
    for x in lattice.linear_extension:
        below = lattice.lower_covers(x)
        if below:
            shortest[x] = min(shortest[c] for c in below) + 1
            longest[x] = max(longest[c] for c in below) + 1
    return shortest, longest


def longest_chain_lengths(lattice: FiniteLattice) -> Tuple[int, ...]:
    """Length of the longest chain from 0̂ to each element"""
    return tuple(int(v) for v in chain_length_profile(lattice)[1])


def is_ranked(lattice: FiniteLattice) -> Optional[Tuple[int, ...]]:
    """Per-element rank when every maximal chain of every [0̂, x] has the same length, else None"""
    shortest, longest = chain_length_profile(lattice)
    if not np.array_equal(shortest, longest):
        return None
    return tuple(int(v) for v in longest)


def is_semimodular(lattice: FiniteLattice) -> bool:
    """Covering property: if x and y both cover x∧y then x∨y covers both"""
    for m in range(lattice.size):
        above = lattice.upper_covers(m)
        for i, x in enumerate(above):
            for y in above[i + 1:]:
                top = lattice.join(x, y)
                if not (lattice.covers(x, top) and lattice.covers(y, top)):
                    return False
    return True


def is_atomic(lattice: FiniteLattice) -> bool:
    """Every element above 0̂ is the join of the atoms below it"""
    return all(
        lattice.join_set(lattice.atoms_below(x)) == x for x in range(lattice.size) if x != lattice.bottom
    )


def is_geometric(lattice: FiniteLattice) -> bool:
    return is_ranked(lattice) is not None and is_atomic(lattice) and is_semimodular(lattice)


def is_distributive(lattice: FiniteLattice, elements: Optional[Iterable[int]] = None) -> bool:
    """
    Check x∧(y∨z) = (x∧y)∨(x∧z) over ``elements`` (default: the whole lattice).

    ``elements`` must be closed under join and meet.
    """
    members = np.arange(lattice.size) if elements is None else np.asarray(sorted(set(elements)), dtype=np.intp)
    join, meet = lattice.join_table, lattice.meet_table
    joins = join[np.ix_(members, members)]
    for x in members:
        lhs = meet[x, joins]
        with_x = meet[x, members]
        rhs = join[with_x[:, None], with_x[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True
