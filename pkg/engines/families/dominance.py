"""
Integer partitions under dominance, P_n.

λ ≥ ν when every prefix sum of λ is at least the matching prefix sum of
ν. Joins are taken on compositions (prefix-wise maximum) and then lifted to
the smallest partition above. Atoms of an upper interval [β, 1̂], their
critical intervals and special runs give μ(β, λ) in closed form.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from shared.constants import Capacity
from shared.exceptions import LatticeSystemError, NotComparableError, NotSameNError, ValidationError, check_capacity
from shared.utils import setup_logger

logger = setup_logger(__name__)

MOVE = "move"
WALL = "wall"


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValidationError(f"composition parts must be positive: {self.parts}", field="parts", value=self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def prefix_sums(self, length: Optional[int] = None) -> Tuple[int, ...]:
        """|γ|_k for k = 1..length, padding with n past the last part"""
        length = len(self.parts) if length is None else length
        sums, total = [], 0
        for k in range(length):
            total += self.parts[k] if k < len(self.parts) else 0
            sums.append(total)
        return tuple(sums)

    @classmethod
    def from_prefix_sums(cls, sums: Sequence[int]) -> "Composition":
        parts = [b - a for a, b in zip((0,) + tuple(sums), sums)]
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    def label(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class IntegerPartition(Composition):
    """Weakly decreasing composition"""

    def __post_init__(self):
        super().__post_init__()
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValidationError(f"partition parts must be weakly decreasing: {self.parts}", field="parts")

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        try:
            return cls(tuple(int(p) for p in text.strip("() ").split(",") if p.strip()))
        except ValueError:
            raise ValidationError(f"cannot read partition {text!r}", field="partition", value=text) from None

    def part(self, k: int) -> float:
        """β_k with β_0 = ∞ and β_k = 0 past the last part (1-based)"""
        if k == 0:
            return math.inf
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def dominates(self, other: "IntegerPartition") -> bool:
        _same_n(self, other)
        length = max(len(self.parts), len(other.parts))
        return all(a >= b for a, b in zip(self.prefix_sums(length), other.prefix_sums(length)))


def _same_n(first: Composition, second: Composition) -> None:
    if first.n != second.n:
        raise NotSameNError(f"{first} and {second} are compositions of different integers", field="n")


def integer_partitions(n: int) -> List[IntegerPartition]:
    """Partitions of n in reverse lexicographic order"""
    result: List[IntegerPartition] = []

    def extend(prefix: List[int], remaining: int, largest: int) -> None:
        if remaining == 0:
            result.append(IntegerPartition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], n, n)
    return result


@lru_cache(maxsize=None)
def dominance_lattice(n: int) -> FiniteLattice:
    if n < 1:
        raise ValidationError("dominance lattice needs n ≥ 1", field="n", value=n)
    check_capacity(n, Capacity.DOMINANCE_MAX_N, "dominance lattice order")
    partitions = integer_partitions(n)
    sums = np.array([p.prefix_sums(n) for p in partitions], dtype=np.int64)
    leq = (sums[:, None, :] <= sums[None, :, :]).all(axis=2)
    lattice = FiniteLattice.from_order(leq, labels=[p.label() for p in partitions], keys=partitions)
    logger.debug("dominance_lattice_built", n=n, elements=lattice.size)
    return lattice


def composition_join(first: Composition, second: Composition) -> Composition:
    """|λ ∨ ν|_k = max(|λ|_k, |ν|_k)"""
    _same_n(first, second)
    length = max(len(first.parts), len(second.parts))
    sums = np.maximum(first.prefix_sums(length), second.prefix_sums(length))
    return Composition.from_prefix_sums(sums.tolist())


def partition_reflection(composition: Composition) -> IntegerPartition:
    """The smallest partition dominating ``composition``"""
    sums = [0] + list(composition.prefix_sums())
    changed = True
    while changed:
        changed = False
        for k in range(1, len(sums) - 1):
            floor = -(-(sums[k - 1] + sums[k + 1]) // 2)
            if sums[k] < floor:
                sums[k] = floor
                changed = True
    return IntegerPartition(Composition.from_prefix_sums(sums[1:]).parts)


def partition_join(first: IntegerPartition, second: IntegerPartition) -> IntegerPartition:
    return partition_reflection(composition_join(first, second))


# =============================================================================
# Atoms of [β, 1̂]
# =============================================================================


@dataclass(frozen=True)
class DominanceAtomInfo:
    """Atom j→i of [β, 1̂]: one square moved from row j up to row i"""

    kind: str
    source: int
    target: int
    critical_interval: Tuple[int, int]
    partition: IntegerPartition
    special: bool = False

    def label(self) -> str:
        return f"{self.source}->{self.target}"


def walls(beta: IntegerPartition) -> List[Tuple[int, int]]:
    """Maximal runs [i, j], i < j, of equal parts (1-based)"""
    found, r, i = [], len(beta.parts), 1
    while i <= r:
        j = i
        while j < r and beta.part(j + 1) == beta.part(i):
            j += 1
        if j > i:
            found.append((i, j))
        i = j + 1
    return found


def _moved(beta: IntegerPartition, target: int, source: int) -> IntegerPartition:
    parts = list(beta.parts)
    parts[target - 1] += 1
    parts[source - 1] -= 1
    while parts and parts[-1] == 0:
        parts.pop()
    return IntegerPartition(tuple(parts))


def dominance_atoms(beta: IntegerPartition, lam: Optional[IntegerPartition] = None) -> List[DominanceAtomInfo]:
    """
    Atoms of [β, 1̂], or of [β, λ] when λ is given, by critical interval.

    With λ given the ``special`` flags are set relative to that atom set.
    """
    r = len(beta.parts)
    wall_list = walls(beta)
    in_wall = {k for i, j in wall_list for k in range(i, j + 1)}
    atoms = [
        DominanceAtomInfo(MOVE, i + 1, i, (i, i), _moved(beta, i, i + 1))
        for i in range(1, r)
        if i not in in_wall and i + 1 not in in_wall
    ]
    atoms += [DominanceAtomInfo(WALL, j, i, (i, j - 1), _moved(beta, i, j)) for i, j in wall_list]
    atoms.sort(key=lambda a: a.critical_interval)

    covered = {k for a in atoms for k in range(a.critical_interval[0], a.critical_interval[1] + 1)}
    excluded = {j for _, j in wall_list} | {i - 1 for i, _ in wall_list}
    if covered != set(range(1, r)) - excluded:
        raise LatticeSystemError(f"critical intervals of {beta} do not tile the expected set")

    if lam is None:
        return atoms
    if not lam.dominates(beta):
        raise NotComparableError(f"{beta} is not below {lam}", lo=beta.label(), hi=lam.label())
    chosen = [a for a in atoms if lam.dominates(a.partition)]
    singles = {a.critical_interval[0] for a in chosen if a.kind == MOVE}
    return [
        DominanceAtomInfo(
            a.kind,
            a.source,
            a.target,
            a.critical_interval,
            a.partition,
            special=(
                a.kind == MOVE
                and beta.part(a.target) == beta.part(a.source) + 1
                and a.target - 1 in singles
                and a.target + 1 in singles
            ),
        )
        for a in chosen
    ]


@dataclass(frozen=True)
class DominanceInterval:
    """Closed-form data for μ(β, λ)"""

    beta: IntegerPartition
    lam: IntegerPartition
    atoms: Tuple[DominanceAtomInfo, ...]
    join_is_top: bool
    runs: Tuple[Tuple[int, int], ...]
    run_length_counts: Tuple[int, int, int]
    layers: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def special(self) -> Tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.atoms) if a.special)

    @property
    def mu(self) -> int:
        if not self.join_is_top or self.run_length_counts[1] >= 1:
            return 0
        non_special = len(self.atoms) - len(self.special)
        return (-1) ** (non_special + self.run_length_counts[2])

    @property
    def nbb_base(self) -> Optional[Tuple[DominanceAtomInfo, ...]]:
        """A minus S_2 when a base exists"""
        if not self.join_is_top or self.run_length_counts[1] >= 1:
            return None
        dropped = set(self.layers.get(2, ()))
        return tuple(a for k, a in enumerate(self.atoms) if k not in dropped)

    def relations(self) -> List[Tuple[int, int]]:
        """σ_{3i+1} ⊲ σ_{3i}, σ_{3i+2} on every extended run, by list position"""
        pairs = []
        for start, end in self.runs:
            extended = list(range(start - 1, end + 2))
            q = end - start + 1
            for low in range(1, q + 1, 3):
                pairs.append((extended[low], extended[low - 1]))
                pairs.append((extended[low], extended[low + 1]))
        return pairs


def analyze_dominance_interval(beta: IntegerPartition, lam: IntegerPartition) -> DominanceInterval:
    _same_n(beta, lam)
    atoms = dominance_atoms(beta, lam)
    top = beta
    for atom in atoms:
        top = partition_join(top, atom.partition)

    runs, k = [], 0
    while k < len(atoms):
        if atoms[k].special:
            start = k
            while k + 1 < len(atoms) and atoms[k + 1].special:
                k += 1
            runs.append((start, k))
        k += 1
    counts = [0, 0, 0]
    layers: Dict[int, List[int]] = {0: [], 1: [], 2: []}
    for start, end in runs:
        counts[(end - start + 1) % 3] += 1
        for offset, position in enumerate(range(start, end + 1), start=1):
            layers[offset % 3].append(position)
    return DominanceInterval(
        beta=beta,
        lam=lam,
        atoms=tuple(atoms),
        join_is_top=top == lam,
        runs=tuple(runs),
        run_length_counts=(counts[0], counts[1], counts[2]),
        layers={j: tuple(v) for j, v in layers.items()},
    )


def dominance_mobius(beta: IntegerPartition, lam: IntegerPartition) -> int:
    """μ(β, λ) from special runs"""
    return analyze_dominance_interval(beta, lam).mu


@lru_cache(maxsize=256)
def dominance_interval(beta: IntegerPartition, lam: IntegerPartition) -> FiniteLattice:
    """[β, λ] inside P_n, cached so atom orders can be hosted on it"""
    _same_n(beta, lam)
    lattice = dominance_lattice(beta.n)
    return lattice.interval(lattice.index_of(beta), lattice.index_of(lam))


def _run_order(analysis: DominanceInterval, host: FiniteLattice) -> AtomOrder:
    index = [host.index_of(a.partition) for a in analysis.atoms]
    return AtomOrder.from_element_relations(host, [(index[a], index[b]) for a, b in analysis.relations()])


def dominance_atom_order(beta: IntegerPartition, lam: IntegerPartition) -> AtomOrder:
    return _run_order(analyze_dominance_interval(beta, lam), dominance_interval(beta, lam))


def dominance_run_order(n: int) -> AtomOrder:
    """Run order on the atoms of P_n itself, hosted on ``dominance_lattice(n)``"""
    lattice = dominance_lattice(n)
    bottom, top = IntegerPartition((1,) * n), IntegerPartition((n,))
    return _run_order(analyze_dominance_interval(bottom, top), lattice)
