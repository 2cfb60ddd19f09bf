"""
Strict partial orders ⊲ on the atom set of a lattice.

The relation is stored as a boolean matrix over atom *positions* (indices
into ``host.atoms``). It is independent of the lattice order.

Atom-order text format: one ``rel <a> <b>`` line per relation a ⊲ b, with
positions into the atom list. The transitive closure is taken on load.
"""

import random
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from shared.constants import FileFormats
from shared.exceptions import CycleDetectedError, LatticeFormatError, ValidationError


class AtomOrder:
    """Strict partial order on the atoms of ``host``"""

    def __init__(self, host: FiniteLattice, strictly_below: np.ndarray):
        k = len(host.atoms)
        relation = np.asarray(strictly_below, dtype=bool)
        if relation.shape != (k, k):
            raise ValidationError(f"atom order must be {k}x{k}", field="strictly_below", value=relation.shape)
        if relation.diagonal().any():
            p = int(np.flatnonzero(relation.diagonal())[0])
            raise CycleDetectedError(f"atom position {p} lies strictly below itself", cycle=[p, p])
        if k:
            weights = relation.astype(np.float32)
            if (((weights @ weights) > 0) & ~relation).any():
                raise ValidationError("atom order is not transitive", field="strictly_below")
        relation = np.ascontiguousarray(relation)
        relation.flags.writeable = False
        self.host = host
        self._relation = relation
        self._position = {atom: p for p, atom in enumerate(host.atoms)}

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_relations(cls, host: FiniteLattice, pairs: Iterable[Tuple[int, int]]) -> "AtomOrder":
        """Transitive closure of the given (position, position) relations"""
        k = len(host.atoms)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(k))
        for a, b in pairs:
            if not (0 <= a < k and 0 <= b < k):
                raise ValidationError(f"atom position out of range in relation ({a}, {b})", field="rel", value=(a, b))
            graph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [int(edge[0]) for edge in nx.find_cycle(graph)]
            raise CycleDetectedError(f"atom order contains the cycle {cycle}", cycle=cycle)
        relation = np.zeros((k, k), dtype=bool)
        for a, b in nx.transitive_closure_dag(graph).edges():
            relation[a, b] = True
        return cls(host, relation)

    @classmethod
    def from_element_relations(cls, host: FiniteLattice, pairs: Iterable[Tuple[int, int]]) -> "AtomOrder":
        """Like ``from_relations`` but with element indices of atoms"""
        position = {atom: p for p, atom in enumerate(host.atoms)}
        mapped = []
        for a, b in pairs:
            if a not in position or b not in position:
                raise ValidationError(f"relation ({a}, {b}) names a non-atom", field="rel", value=(a, b))
            mapped.append((position[a], position[b]))
        return cls.from_relations(host, mapped)

    @classmethod
    def total(cls, host: FiniteLattice, sequence: Sequence[int]) -> "AtomOrder":
        """Linear order listing the atoms (element indices) first to last"""
        if sorted(sequence) != list(host.atoms):
            raise ValidationError("a total order must list every atom exactly once", field="sequence", value=sequence)
        position = {atom: p for p, atom in enumerate(host.atoms)}
        k = len(sequence)
        relation = np.zeros((k, k), dtype=bool)
        for i, a in enumerate(sequence):
            for b in sequence[i + 1:]:
                relation[position[a], position[b]] = True
        return cls(host, relation)

    @classmethod
    def empty(cls, host: FiniteLattice) -> "AtomOrder":
        k = len(host.atoms)
        return cls(host, np.zeros((k, k), dtype=bool))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def atom_ids(self) -> Tuple[int, ...]:
        return self.host.atoms

    @property
    def strictly_below(self) -> np.ndarray:
        return self._relation

    def __len__(self) -> int:
        return len(self.host.atoms)

    def __repr__(self) -> str:
        return f"AtomOrder(atoms={len(self)}, relations={self.relation_count})"

    def position(self, atom: int) -> int:
        try:
            return self._position[atom]
        except KeyError:
            raise ValidationError(f"element {atom} is not an atom", field="atom", value=atom) from None

    def below(self, a: int, b: int) -> bool:
        """a ⊲ b for atom element indices"""
        return bool(self._relation[self.position(a), self.position(b)])

    @property
    def relation_count(self) -> int:
        return int(self._relation.sum())

    def relations(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self._relation)]

    def cover_relations(self) -> List[Tuple[int, int]]:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from(self.relations())
        return sorted((int(a), int(b)) for a, b in nx.transitive_reduction(graph).edges())

    def predecessor_masks(self) -> np.ndarray:
        """For each position q, the bit mask of positions p with p ⊲ q"""
        weights = np.left_shift(np.int64(1), np.arange(len(self), dtype=np.int64))
        return (self._relation.astype(np.int64) * weights[:, None]).sum(axis=0).astype(np.int64)

    def successor_masks(self) -> np.ndarray:
        """For each position p, the bit mask of positions q with p ⊲ q"""
        weights = np.left_shift(np.int64(1), np.arange(len(self), dtype=np.int64))
        return (self._relation.astype(np.int64) * weights[None, :]).sum(axis=1).astype(np.int64)

    def is_total(self) -> bool:
        k = len(self)
        return bool((self._relation | self._relation.T | np.eye(k, dtype=bool)).all())

    def extends(self, other: "AtomOrder") -> bool:
        """True when every relation of ``other`` also holds here"""
        return bool((self._relation | ~other.strictly_below).all())

    def same_relation(self, other: "AtomOrder") -> bool:
        return self.host is other.host and np.array_equal(self._relation, other.strictly_below)

    def linear_extension(self, seed: Optional[int] = None) -> "AtomOrder":
        """A linear extension; with a seed, minimal atoms are drawn at random"""
        rng = random.Random(seed)
        remaining = set(range(len(self)))
        sequence = []
        while remaining:
            minimal = sorted(q for q in remaining if not any(self._relation[p, q] for p in remaining))
            choice = rng.choice(minimal) if seed is not None else minimal[0]
            sequence.append(self.host.atoms[choice])
            remaining.remove(choice)
        return AtomOrder.total(self.host, sequence)


def incomparability_order(lattice: FiniteLattice) -> AtomOrder:
    """The empty relation on the atoms"""
    return AtomOrder.empty(lattice)


def read_atom_order(text: str, host: FiniteLattice) -> AtomOrder:
    pairs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(FileFormats.COMMENT_PREFIX):
            continue
        words = line.split()
        if words[0] != FileFormats.ORDER_RELATION_KEYWORD or len(words) != 3:
            raise LatticeFormatError("expected 'rel <a> <b>'", line_number=number, line=raw)
        try:
            pairs.append((int(words[1]), int(words[2])))
        except ValueError:
            raise LatticeFormatError("atom positions must be integers", line_number=number, line=raw) from None
    return AtomOrder.from_relations(host, pairs)


def write_atom_order(order: AtomOrder) -> str:
    return "".join(f"{FileFormats.ORDER_RELATION_KEYWORD} {a} {b}\n" for a, b in order.cover_relations())
