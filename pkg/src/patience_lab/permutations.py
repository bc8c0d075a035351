"""Permutations in one-line notation, their lattice diagrams, and dashed
(generalized) pattern containment.

A permutation is a plain tuple of the integers 1..n.  Positions and values
are both 1-based throughout the public API, matching the usual one-line
notation sigma = sigma_1 sigma_2 ... sigma_n.  The lattice diagram of a
permutation is the point set {(i, sigma_i)} in the first quadrant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]
Point = tuple[int, int]


def is_permutation(seq: Sequence[int]) -> bool:
    """True if seq is a permutation of 1..n in one-line notation.

    >>> is_permutation((2, 3, 1))
    True
    >>> is_permutation((1, 1, 2))
    False
    >>> is_permutation(())
    True
    """
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_word(seq: Iterable[int]) -> Word:
    """Coerce to a validated permutation tuple."""
    word = tuple(seq)
    if not is_permutation(word):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def parse_permutation(text: str) -> Word:
    """Parse one-line notation from text.

    Accepts whitespace- or comma-separated values ("6 4 5 1 8 7 2 3",
    "6,4,5,1,8,7,2,3").  A bare digit string ("64518723") is read one card
    per digit; that form is unambiguous only for n <= 9.

    >>> parse_permutation("64518723")
    (6, 4, 5, 1, 8, 7, 2, 3)
    >>> parse_permutation("2, 3, 1")
    (2, 3, 1)
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    tokens = re.split(r"[\s,]+", stripped)
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        if len(tokens[0]) > 9:
            raise ValueError(
                f"digit-string form is ambiguous beyond n = 9: {text!r};"
                " separate the values with spaces or commas"
            )
        return as_word(int(c) for c in tokens[0])
    return as_word(int(t) for t in tokens)


def format_permutation(word: Sequence[int]) -> str:
    """Render in one-line notation, space separated."""
    return " ".join(str(v) for v in word)


def inverse(word: Sequence[int]) -> Word:
    """The inverse permutation: q with q[p[i]] = i.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    >>> inverse((6, 4, 5, 1, 8, 7, 2, 3))
    (4, 7, 8, 2, 3, 1, 6, 5)
    """
    word = as_word(word)
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)


def diagram(word: Sequence[int]) -> list[Point]:
    """The lattice diagram [(1, sigma_1), ..., (n, sigma_n)].

    >>> diagram((2, 3, 1))
    [(1, 2), (2, 3), (3, 1)]
    """
    word = as_word(word)
    return [(i, v) for i, v in enumerate(word, start=1)]


@dataclass(frozen=True)
class DashedPattern:
    """A permutation pattern with adjacency constraints, written "2-31".

    letters holds the pattern permutation; adjacent holds the 1-based
    positions j such that the letters at pattern positions j and j+1 must
    occupy adjacent positions in the text.  Dashes in the written form mark
    where a gap is allowed, so "2-31" constrains its last two letters to be
    adjacent while "2", "3" may sit anywhere earlier.
    """

    letters: Word
    adjacent: frozenset[int]

    def __post_init__(self) -> None:
        if not is_permutation(self.letters):
            raise ValueError(f"pattern letters must form a permutation: {self.letters!r}")
        k = len(self.letters)
        if any(not 1 <= j <= k - 1 for j in self.adjacent):
            raise ValueError(f"adjacency positions must lie in 1..{k - 1}: {self.adjacent!r}")

    @classmethod
    def parse(cls, text: str) -> "DashedPattern":
        """Parse dash notation.

        >>> DashedPattern.parse("2-31")
        DashedPattern(letters=(2, 3, 1), adjacent=frozenset({2}))
        """
        groups = text.split("-")
        letters = tuple(int(c) for g in groups for c in g)
        adjacent: set[int] = set()
        pos = 0
        for g in groups:
            adjacent.update(pos + i for i in range(1, len(g)))
            pos += len(g)
        return cls(letters, frozenset(adjacent))


PATTERN_2_31 = DashedPattern.parse("2-31")
PATTERN_3_1_42 = DashedPattern.parse("3-1-42")


def occurrences_dashed(word: Sequence[int], pattern: DashedPattern) -> list[tuple[int, ...]]:
    """All 1-based index tuples i_1 < ... < i_k where pattern occurs.

    An occurrence realizes the pattern letters' relative order and honours
    every adjacency constraint (i_{j+1} = i_j + 1 for each constrained j).
    Results come out in lexicographic order.

    >>> occurrences_dashed((2, 3, 1), PATTERN_2_31)
    [(1, 2, 3)]
    >>> occurrences_dashed((1, 2, 3), PATTERN_2_31)
    []
    """
    word = as_word(word)
    letters = pattern.letters
    k = len(letters)
    n = len(word)
    out: list[tuple[int, ...]] = []
    if k == 0:
        return [()]

    chosen: list[int] = []

    def extend() -> None:
        t = len(chosen)
        if t == k:
            out.append(tuple(p + 1 for p in chosen))
            return
        if t and t in pattern.adjacent:
            candidates: Iterable[int] = (
                [chosen[-1] + 1] if chosen[-1] + 1 < n else []
            )
        else:
            candidates = range(chosen[-1] + 1 if chosen else 0, n)
        for c in candidates:
            if all(
                (word[c] > word[p]) == (letters[t] > letters[s])
                for s, p in enumerate(chosen)
            ):
                chosen.append(c)
                extend()
                chosen.pop()

    extend()
    return out


def avoids_barred_3142(word: Sequence[int]) -> bool:
    """True iff every occurrence of 2-31 extends to an occurrence of 3-1-42.

    An occurrence of 2-31 at positions (i, j, j+1) extends when some
    position k with i < k < j carries a value smaller than the "1" role,
    i.e. word[k] < word[j+1]; the original letters then play the roles
    3, 4, 2 of 3-1-42.  Vacuously true when no 2-31 occurs.

    >>> avoids_barred_3142((2, 3, 1))
    False
    >>> avoids_barred_3142((1, 2, 3))
    True
    """
    word = as_word(word)
    for i, j, j1 in occurrences_dashed(word, PATTERN_2_31):
        smallest = word[j1 - 1]
        if not any(word[k - 1] < smallest for k in range(i + 1, j)):
            return False
    return True
