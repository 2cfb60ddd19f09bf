"""
Shuffle posets W_{m,n}.

Words use x = d e f ... and y = D E F ... . An element is a shuffle of a
subword of x with a subword of y; v ≤ w when v keeps every x-letter of w,
w keeps every y-letter of v, and the two words list their common letters
in the same order. 0̂ is x and 1̂ is y.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from shared.constants import Capacity, Labels
from shared.exceptions import ValidationError, check_capacity
from shared.utils import setup_logger

logger = setup_logger(__name__)

X_LETTERS = Labels.SHUFFLE_X_LETTERS
Y_LETTERS = Labels.SHUFFLE_Y_LETTERS


@dataclass(frozen=True)
class ShuffleWord:
    """Word over the x and y alphabets; letters keep their alphabet order"""

    letters: str

    def __post_init__(self):
        for alphabet, part in ((X_LETTERS, self.x_part), (Y_LETTERS, self.y_part)):
            positions = [alphabet.find(c) for c in part]
            if any(p < 0 for p in positions) or positions != sorted(set(positions)):
                raise ValidationError(f"{self.letters!r} is not a shuffle word", field="letters", value=self.letters)
        if any(c not in X_LETTERS and c not in Y_LETTERS for c in self.letters):
            raise ValidationError(f"{self.letters!r} has letters outside both alphabets", field="letters")

    @classmethod
    def parse(cls, text: str) -> "ShuffleWord":
        return cls("" if text == Labels.EMPTY_WORD else text)

    @property
    def x_part(self) -> str:
        return "".join(c for c in self.letters if c in X_LETTERS)

    @property
    def y_part(self) -> str:
        return "".join(c for c in self.letters if c in Y_LETTERS)

    def restricted_to(self, letters: FrozenSet[str]) -> str:
        return "".join(c for c in self.letters if c in letters)

    def y_before(self, letter: str) -> List[int]:
        """1-based y-indices appearing before ``letter``"""
        cut = self.letters.index(letter)
        return [Y_LETTERS.index(c) + 1 for c in self.letters[:cut] if c in Y_LETTERS]

    def y_after(self, letter: str) -> List[int]:
        cut = self.letters.index(letter)
        return [Y_LETTERS.index(c) + 1 for c in self.letters[cut + 1:] if c in Y_LETTERS]

    def __le__(self, other: "ShuffleWord") -> bool:
        if not set(other.x_part) <= set(self.x_part) or not set(self.y_part) <= set(other.y_part):
            return False
        common = frozenset(self.letters) & frozenset(other.letters)
        return self.restricted_to(common) == other.restricted_to(common)

    def __str__(self) -> str:
        return self.letters or Labels.EMPTY_WORD


def shuffles(first: str, second: str) -> List[str]:
    """All shuffles of two words, x-positions chosen in lexicographic order"""
    total = len(first) + len(second)
    words = []
    for slots in itertools.combinations(range(total), len(first)):
        a, b = iter(first), iter(second)
        chosen = set(slots)
        words.append("".join(next(a) if i in chosen else next(b) for i in range(total)))
    return words


def _subwords(word: str) -> List[str]:
    return ["".join(c for i, c in enumerate(word) if mask >> i & 1) for mask in range(1 << len(word))]


def _check_mn(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValidationError("shuffle poset needs m, n ≥ 0", field="m,n", value=(m, n))
    check_capacity(m + n, Capacity.SHUFFLE_MAX_LETTERS, "shuffle letter count")


@lru_cache(maxsize=None)
def shuffle_poset(m: int, n: int) -> FiniteLattice:
    _check_mn(m, n)
    x, y = X_LETTERS[:m], Y_LETTERS[:n]
    words = [ShuffleWord(w) for u in _subwords(x) for v in _subwords(y) for w in shuffles(u, v)]
    size = len(words)
    leq = np.zeros((size, size), dtype=bool)
    for i, v in enumerate(words):
        for j, w in enumerate(words):
            leq[i, j] = v <= w
    lattice = FiniteLattice.from_order(leq, labels=[str(w) for w in words], keys=words)
    logger.debug("shuffle_poset_built", m=m, n=n, elements=size, atoms=len(lattice.atoms))
    return lattice


def crossed_letters(u: ShuffleWord, v: ShuffleWord) -> FrozenSet[str]:
    """x-letters in both words lying before y_i in one and after y_j in the other, i ≤ j"""
    crossed = set()
    for letter in set(u.x_part) & set(v.x_part):
        for first, second in ((u, v), (v, u)):
            later, earlier = first.y_after(letter), second.y_before(letter)
            if later and earlier and min(later) <= max(earlier):
                crossed.add(letter)
    return frozenset(crossed)


def shuffle_join(u: ShuffleWord, v: ShuffleWord) -> ShuffleWord:
    """
    Join in W_{m,n}: keep the uncrossed common x-letters and all y-letters.

    Each kept x-letter goes right after the latest y-letter that precedes it
    in either word.
    """
    crossed = crossed_letters(u, v)
    kept = sorted((set(u.x_part) & set(v.x_part)) - crossed, key=X_LETTERS.index)
    y_letters = sorted(set(u.y_part) | set(v.y_part), key=Y_LETTERS.index)
    gap = {c: max(u.y_before(c) + v.y_before(c), default=0) for c in kept}
    letters = [c for c in kept if gap[c] == 0]
    for letter in y_letters:
        index = Y_LETTERS.index(letter) + 1
        letters.append(letter)
        letters.extend(c for c in kept if gap[c] == index)
    return ShuffleWord("".join(letters))


def is_deletion_atom(word: ShuffleWord, m: int) -> bool:
    return not word.y_part and len(word.x_part) == m - 1


def shuffle_atom_order(m: int, n: int) -> AtomOrder:
    """Every deletion atom ⊲ every insertion atom"""
    lattice = shuffle_poset(m, n)
    deletions = [a for a in lattice.atoms if is_deletion_atom(lattice.key(a), m)]
    insertions = [a for a in lattice.atoms if a not in deletions]
    return AtomOrder.from_element_relations(lattice, [(a, b) for a in deletions for b in insertions])


def shuffle_ll_chain(m: int, n: int = 1) -> Tuple[int, ...]:
    """x, then x-letters deleted from the right, then y-letters inserted in order"""
    lattice = shuffle_poset(m, n)
    x, y = X_LETTERS[:m], Y_LETTERS[:n]
    words = [x[:k] for k in range(m, -1, -1)] + [y[:k] for k in range(1, n + 1)]
    return tuple(lattice.index_of(ShuffleWord(w)) for w in words)


def shuffle_rank(word: ShuffleWord, m: int) -> int:
    return (m - len(word.x_part)) + len(word.y_part)


def shuffle_mobius_top(m: int, n: int) -> int:
    """μ(W_{m,n}) = (-1)^(m+n) binom(m+n, m)"""
    return (-1) ** (m + n) * math.comb(m + n, m)
