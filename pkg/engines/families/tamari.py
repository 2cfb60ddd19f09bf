"""
Tamari lattices T_n on left bracket vectors and parenthesizations.

A left bracket vector (v_1..v_n) has 1 ≤ v_i ≤ i and the sets
S_i = {v_i..i} pairwise nested or disjoint. T_n orders them componentwise,
which matches rotation ((AB)C) → (A(BC)) on parenthesizations of
x_1..x_{n+1}.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Tuple, Union

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from shared.constants import Capacity
from shared.exceptions import InvalidBracketVectorError, NotSameNError, ValidationError, check_capacity
from shared.utils import setup_logger

logger = setup_logger(__name__)

Tree = Union[int, Tuple["Tree", "Tree"]]

_TOKEN = re.compile(r"\(|\)|x(\d+)")


@dataclass(frozen=True)
class BracketVector:
    v: Tuple[int, ...]

    def __post_init__(self):
        for i, value in enumerate(self.v, start=1):
            if not 1 <= value <= i:
                raise InvalidBracketVectorError(f"entry {i} of {self.v} must lie in [1, {i}]", field="v", value=self.v)
            for j in range(1, i):
                if not (value <= self.v[j - 1] or value > j):
                    raise InvalidBracketVectorError(
                        f"intervals {j} and {i} of {self.v} overlap without nesting", field="v", value=self.v
                    )

    @classmethod
    def parse(cls, text: str) -> "BracketVector":
        try:
            return cls(tuple(int(p) for p in text.strip("() ").split(",") if p.strip()))
        except ValueError:
            raise InvalidBracketVectorError(f"cannot read bracket vector {text!r}", field="v", value=text) from None

    def __len__(self) -> int:
        return len(self.v)

    def __le__(self, other: "BracketVector") -> bool:
        _same_length(self, other)
        return all(a <= b for a, b in zip(self.v, other.v))

    def label(self) -> str:
        return "(" + ",".join(str(i) for i in self.v) + ")"

    def __str__(self) -> str:
        return self.label()


def _same_length(first: BracketVector, second: BracketVector) -> None:
    if len(first) != len(second):
        raise NotSameNError(f"{first} and {second} have different lengths", field="v")


def bracket_vectors(n: int) -> List[BracketVector]:
    """All left bracket vectors of length n, lexicographically"""
    found: List[Tuple[int, ...]] = []

    def extend(prefix: List[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            found.append(tuple(prefix))
            return
        for value in range(1, i + 1):
            if all(value <= prefix[j - 1] or value > j for j in range(1, i)):
                prefix.append(value)
                extend(prefix)
                prefix.pop()

    extend([])
    return [BracketVector(v) for v in found]


@lru_cache(maxsize=None)
def tamari_lattice(n: int) -> FiniteLattice:
    if n < 0:
        raise ValidationError("Tamari lattice needs n ≥ 0", field="n", value=n)
    check_capacity(n, Capacity.TAMARI_MAX_N, "Tamari lattice order")
    vectors = bracket_vectors(n)
    table = np.array([b.v for b in vectors], dtype=np.int64).reshape(len(vectors), n)
    leq = np.empty((len(vectors), len(vectors)), dtype=bool)
    for row, values in enumerate(table):
        leq[row] = (values[None, :] <= table).all(axis=1)
    lattice = FiniteLattice.from_order(leq, labels=[b.label() for b in vectors], keys=vectors)
    logger.debug("tamari_lattice_built", n=n, elements=lattice.size, atoms=len(lattice.atoms))
    return lattice


def tamari_join(v: BracketVector, w: BracketVector) -> BracketVector:
    """Componentwise maximum"""
    _same_length(v, w)
    return BracketVector(tuple(max(a, b) for a, b in zip(v.v, w.v)))


def tamari_meet(v: BracketVector, w: BracketVector) -> BracketVector:
    """l_i = min(m_i, l_{m_i}, ..., l_{i-1}) with m_i = min(v_i, w_i)"""
    _same_length(v, w)
    low: List[int] = []
    for i, (a, b) in enumerate(zip(v.v, w.v), start=1):
        m = min(a, b)
        low.append(min([m] + low[m - 1:i - 1]))
    return BracketVector(tuple(low))


def tamari_delta_chain(n: int) -> Tuple[int, ...]:
    """(1,..,1) < (1,2,1,..,1) < (1,2,2,1,..) < (1,2,3,1,..) < ... < (1,2,..,n)"""
    lattice = tamari_lattice(n)
    current = [1] * n
    chain = [tuple(current)]
    for j in range(2, n + 1):
        for value in range(2, j + 1):
            current[j - 1] = value
            chain.append(tuple(current))
    return tuple(lattice.index_of(BracketVector(v)) for v in chain)


def tamari_tree_of(v: BracketVector) -> FrozenSet[Tuple[int, int]]:
    """Tree on [n+1] joining i+1 to v_i"""
    return frozenset((value, i + 1) for i, value in enumerate(v.v, start=1))


# =============================================================================
# Parenthesizations
# =============================================================================


@dataclass(frozen=True)
class Parenthesization:
    """Full binary tree over the leaves x_1..x_{n+1}, leaves as integers"""

    tree: Tree

    @classmethod
    def from_string(cls, text: str) -> "Parenthesization":
        stack: List[list] = [[]]
        for match in _TOKEN.finditer(text.replace(" ", "")):
            token = match.group(0)
            if token == "(":
                stack.append([])
            elif token == ")":
                group = stack.pop()
                if len(group) != 2 or not stack:
                    raise InvalidBracketVectorError(f"{text!r} is not a full binary parenthesization", field="tree")
                stack[-1].append((group[0], group[1]))
            else:
                stack[-1].append(int(match.group(1)))
        if len(stack) != 1 or len(stack[0]) != 1:
            raise InvalidBracketVectorError(f"{text!r} is not a full binary parenthesization", field="tree")
        tree = stack[0][0]
        parenthesization = cls(tree)
        if parenthesization.leaves() != list(range(1, len(parenthesization.leaves()) + 1)):
            raise InvalidBracketVectorError(f"leaves of {text!r} must be x1, x2, ... in order", field="tree")
        return parenthesization

    def leaves(self) -> List[int]:
        def walk(node: Tree) -> Iterator[int]:
            if isinstance(node, int):
                yield node
            else:
                yield from walk(node[0])
                yield from walk(node[1])

        return list(walk(self.tree))

    def tokens(self) -> List[Union[str, int]]:
        def walk(node: Tree) -> Iterator[Union[str, int]]:
            if isinstance(node, int):
                yield node
            else:
                yield "("
                yield from walk(node[0])
                yield from walk(node[1])
                yield ")"

        return list(walk(self.tree))

    def rotations(self) -> List["Parenthesization"]:
        """Trees reached by one rewrite ((AB)C) → (A(BC))"""

        def rotate(node: Tree) -> Iterator[Tree]:
            if isinstance(node, int):
                return
            left, right = node
            if not isinstance(left, int):
                yield (left[0], (left[1], right))
            for changed in rotate(left):
                yield (changed, right)
            for changed in rotate(right):
                yield (left, changed)

        return [Parenthesization(t) for t in rotate(self.tree)]

    def __str__(self) -> str:
        return "".join(t if isinstance(t, str) else f"x{t}" for t in self.tokens())


def bracket_vector_of(parenthesization: Parenthesization) -> BracketVector:
    """
    For each x_i, walk left counting x's (x_i included) and left
    parentheses until the counts match; v_i is the last x passed.
    """
    tokens = parenthesization.tokens()
    n = len(parenthesization.leaves()) - 1
    vector = []
    for i in range(1, n + 1):
        position = tokens.index(i)
        letters, opens, last = 1, 0, i
        while letters != opens:
            position -= 1
            token = tokens[position]
            if token == "(":
                opens += 1
            elif isinstance(token, int):
                letters += 1
                last = token
        vector.append(last)
    return BracketVector(tuple(vector))


def parenthesization_of(vector: BracketVector) -> Parenthesization:
    """Inverse of bracket_vector_of: the root of x_lo..x_hi splits after the largest i < hi with v_i = lo"""
    v = vector.v

    def build(lo: int, hi: int) -> Tree:
        if lo == hi:
            return lo
        split = max((i for i in range(lo, hi) if v[i - 1] == lo), default=None)
        if split is None:
            raise InvalidBracketVectorError(f"{vector} has no split for x{lo}..x{hi}", field="v", value=v)
        return (build(lo, split), build(split + 1, hi))

    return Parenthesization(build(1, len(v) + 1))
