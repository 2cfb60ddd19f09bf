"""
Left-modular chains, levels and the LL factorization of χ.

A maximal chain Δ: 0̂ = x_0 < ... < x_n = 1̂ splits the atoms into levels
A_i = {a : a ≤ x_i, a ≰ x_{i-1}}. The induced atom order puts earlier
levels below later ones. When every x_i is left-modular and the level
condition holds, χ(L, t) = ∏ (t - |A_i|).
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.lattice_core.properties import longest_chain_lengths
from engines.mobius_engine.atom_order import AtomOrder
from engines.mobius_engine.atom_sets import atom_subset_tables
from engines.mobius_engine.mobius import MobiusVector, mobius_recursive, nbb_flags
from engines.structure_analysis.polynomial import IntegerPolynomial, format_factored
from shared.exceptions import PreconditionNotVerifiedError, ValidationError
from shared.utils import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class MaximalChain:
    elements: Tuple[int, ...]

    @classmethod
    def validated(cls, lattice: FiniteLattice, elements: Sequence[int]) -> "MaximalChain":
        elements = tuple(int(x) for x in elements)
        if not elements or elements[0] != lattice.bottom or elements[-1] != lattice.top:
            raise ValidationError("a maximal chain runs from 0̂ to 1̂", field="chain", value=elements)
        for lo, up in zip(elements, elements[1:]):
            if not lattice.covers(lo, up):
                raise ValidationError(
                    f"{lattice.label(up)} does not cover {lattice.label(lo)}", field="chain", value=elements
                )
        return cls(elements)

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def labels(self, lattice: FiniteLattice) -> List[str]:
        return [lattice.label(x) for x in self.elements]


@dataclass(frozen=True)
class LevelPartition:
    """Levels A_1..A_n of a chain, atom element indices per level"""

    lattice: FiniteLattice
    chain: MaximalChain
    levels: Tuple[Tuple[int, ...], ...]

    def level_of(self, atom: int) -> int:
        """1-based level index"""
        for i, level in enumerate(self.levels, start=1):
            if atom in level:
                return i
        raise ValidationError(f"{atom} is not an atom", field="atom", value=atom)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.levels)


@dataclass(frozen=True)
class LevelConditionResult:
    holds: bool
    witness: Optional[Tuple[int, Tuple[int, ...]]] = None


@dataclass(frozen=True)
class LLWitness:
    """A left-modular chain whose levels satisfy the level condition"""

    lattice: FiniteLattice
    chain: MaximalChain
    levels: LevelPartition


@dataclass(frozen=True)
class FactorizationResult:
    polynomial: IntegerPolynomial
    roots: Tuple[int, ...]
    equal: bool

    def formatted(self) -> str:
        return format_factored(self.roots) if self.equal else self.polynomial.format_expanded()


def as_maximal_chain(lattice: FiniteLattice, chain) -> MaximalChain:
    if isinstance(chain, MaximalChain):
        return chain
    return MaximalChain.validated(lattice, chain)


# =============================================================================
# Left-modularity
# =============================================================================


def is_left_modular_element(lattice: FiniteLattice, x: int) -> bool:
    """y ∨ (x ∧ z) = (y ∨ x) ∧ z for every y ≤ z"""
    join, meet = lattice.join_table, lattice.meet_table
    ys, zs = np.nonzero(lattice.leq)
    return bool(np.array_equal(join[ys, meet[x, zs]], meet[join[ys, x], zs]))


def left_modular_elements(lattice: FiniteLattice) -> np.ndarray:
    flags = np.array([is_left_modular_element(lattice, x) for x in range(lattice.size)], dtype=bool)
    flags.flags.writeable = False
    return flags


def iter_left_modular_chains(lattice: FiniteLattice) -> Iterator[MaximalChain]:
    """Maximal chains of left-modular elements, depth-first, lower indices first"""
    modular = left_modular_elements(lattice)
    stack: List[Tuple[int, ...]] = [(lattice.bottom,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last == lattice.top:
            yield MaximalChain(path)
            continue
        for y in reversed(lattice.upper_covers(last)):
            if modular[y]:
                stack.append(path + (y,))


def find_left_modular_chain(lattice: FiniteLattice) -> Optional[MaximalChain]:
    return next(iter_left_modular_chains(lattice), None)


def is_left_modular_chain(lattice: FiniteLattice, chain) -> bool:
    return all(is_left_modular_element(lattice, x) for x in as_maximal_chain(lattice, chain).elements)


# =============================================================================
# Levels
# =============================================================================


def levels_from_chain(lattice: FiniteLattice, chain) -> LevelPartition:
    chain = as_maximal_chain(lattice, chain)
    leq = lattice.leq
    levels = []
    for lo, up in zip(chain.elements, chain.elements[1:]):
        levels.append(tuple(a for a in lattice.atoms if leq[a, up] and not leq[a, lo]))
    return LevelPartition(lattice, chain, tuple(levels))


def induced_atom_order(levels: LevelPartition) -> AtomOrder:
    """a ⊲ b iff a lies in an earlier level than b"""
    pairs = [
        (a, b)
        for i, lower in enumerate(levels.levels)
        for upper in levels.levels[i + 1:]
        for a in lower
        for b in upper
    ]
    return AtomOrder.from_element_relations(levels.lattice, pairs)


def level_condition_holds(lattice: FiniteLattice, chain) -> LevelConditionResult:
    """
    a ≰ b_1 ∨ ... ∨ b_k whenever the b_i come from distinct levels above a.

    Joins only grow when more atoms are added, so one atom from every
    nonempty later level is the only case to test.
    """
    levels = levels_from_chain(lattice, chain)
    for i, level in enumerate(levels.levels):
        later = [upper for upper in levels.levels[i + 1:] if upper]
        if not later or not level:
            continue
        for selection in itertools.product(*later):
            top = lattice.join_set(selection)
            for a in level:
                if lattice.le(a, top):
                    logger.debug("level_condition_violated", atom=lattice.label(a), level=i + 1)
                    return LevelConditionResult(False, (a, tuple(selection)))
    return LevelConditionResult(True)


def is_ll(lattice: FiniteLattice) -> Optional[LLWitness]:
    """First left-modular chain that also satisfies the level condition"""
    tried = 0
    for chain in iter_left_modular_chains(lattice):
        tried += 1
        if level_condition_holds(lattice, chain).holds:
            logger.info("ll_chain_found", chains_tried=tried, length=chain.length)
            return LLWitness(lattice, chain, levels_from_chain(lattice, chain))
    logger.info("no_ll_chain", chains_tried=tried)
    return None


def ll_witness_for(lattice: FiniteLattice, chain) -> Optional[LLWitness]:
    """An LL witness for a given chain, or None when the chain is not LL"""
    chain = as_maximal_chain(lattice, chain)
    if not is_left_modular_chain(lattice, chain) or not level_condition_holds(lattice, chain).holds:
        return None
    return LLWitness(lattice, chain, levels_from_chain(lattice, chain))


# =============================================================================
# Rank and characteristic polynomial
# =============================================================================


def generalized_rank(lattice: FiniteLattice, chain) -> Tuple[int, ...]:
    """ρ(x) = number of levels holding an atom ≤ x"""
    levels = levels_from_chain(lattice, chain)
    rank = np.zeros(lattice.size, dtype=np.int64)
    for level in levels.levels:
        if level:
            rank += lattice.leq[list(level), :].any(axis=0)
    return tuple(int(r) for r in rank)


def characteristic_polynomial(
    lattice: FiniteLattice, chain, mobius: Optional[MobiusVector] = None
) -> IntegerPolynomial:
    """Σ μ(x) t^(n - ρ(x)) with n the length of the chain"""
    chain = as_maximal_chain(lattice, chain)
    mu = mobius if mobius is not None else mobius_recursive(lattice)
    rank = generalized_rank(lattice, chain)
    coefficients = [0] * (chain.length + 1)
    for x in range(lattice.size):
        coefficients[chain.length - rank[x]] += mu[x]
    return IntegerPolynomial(tuple(coefficients))


def ll_factorization_check(lattice: FiniteLattice, witness: LLWitness) -> FactorizationResult:
    """Compare χ(L, t) with ∏ (t - |A_i|)"""
    if not isinstance(witness, LLWitness) or witness.lattice is not lattice:
        raise PreconditionNotVerifiedError("the factorization needs an LL witness from is_ll for this lattice")
    polynomial = characteristic_polynomial(lattice, witness.chain)
    roots = tuple(sorted(witness.levels.sizes))
    return FactorizationResult(polynomial, roots, polynomial == IntegerPolynomial.from_roots(roots))


def nbb_level_characterization(lattice: FiniteLattice, chain) -> bool:
    """NBB sets of the induced order are exactly the sets with at most one atom per level"""
    levels = levels_from_chain(lattice, chain)
    tables = atom_subset_tables(lattice)
    masks = tables.masks
    position = {atom: p for p, atom in enumerate(lattice.atoms)}
    spread = np.ones(masks.size, dtype=bool)
    for level in levels.levels:
        count = np.zeros(masks.size, dtype=np.int64)
        for atom in level:
            count += (masks >> position[atom]) & 1
        spread &= count <= 1
    return bool(np.array_equal(nbb_flags(lattice, induced_atom_order(levels)), spread))


def same_level_join_witness(lattice: FiniteLattice, chain, a: int, b: int) -> Optional[int]:
    """An atom c from a level before that of a and b with c ≤ a ∨ b"""
    levels = levels_from_chain(lattice, chain)
    level = levels.level_of(a)
    if levels.level_of(b) != level:
        raise ValidationError("atoms must share a level", field="atoms", value=(a, b))
    top = lattice.join(a, b)
    for earlier in levels.levels[: level - 1]:
        for c in earlier:
            if lattice.le(c, top):
                return c
    return None


def longest_chain_rank_check(lattice: FiniteLattice, chain) -> bool:
    """Generalized rank equals the longest 0̂-to-x chain length everywhere"""
    return generalized_rank(lattice, chain) == longest_chain_lengths(lattice)
