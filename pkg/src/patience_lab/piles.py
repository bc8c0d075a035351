"""Pile configurations and patience sorting.

Dealing a permutation into piles (each card goes atop the leftmost pile
whose top card is larger) produces a pile configuration: an ordered list of
columns, each strictly decreasing when read bottom to top.  Recording the
deal times in a parallel family of piles upgrades the deal to a bijection
between permutations and certain pairs of pile configurations; the pair can
be replayed backwards to recover the permutation.

Columns are stored bottom->top throughout, so ``(6, 4, 1)`` is the pile
with 6 at the bottom and 1 on top.  Rows use the French convention: row 1
is the bottom row.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import chain
from typing import Sequence

from .permutations import Word, as_word


class NoPreimageError(ValueError):
    """No permutation deals into the given pair of pile configurations."""


@dataclass(frozen=True)
class PileConfig:
    """An ordered list of piles; ``columns[j]`` lists pile j bottom->top."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))
        entries: list[int] = []
        for col in self.columns:
            if not col:
                raise ValueError("pile configuration columns must be nonempty")
            if any(a <= b for a, b in zip(col, col[1:])):
                raise ValueError(f"column must strictly decrease bottom->top: {col!r}")
            entries.extend(col)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be exactly 1..n: {self.columns!r}")

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.columns)

    @property
    def shape(self) -> tuple[int, ...]:
        """Column heights, left to right (a composition of n)."""
        return tuple(len(c) for c in self.columns)

    @property
    def tops(self) -> tuple[int, ...]:
        """The card atop each pile, left to right."""
        return tuple(c[-1] for c in self.columns)

    def row(self, r: int) -> tuple[int, ...]:
        """Entries at height r (row 1 = bottom), in column order.

        Columns shorter than r contribute nothing, so rows need not be
        contiguous across columns.
        """
        if r < 1:
            raise ValueError(f"rows are numbered from 1: {r}")
        return tuple(c[r - 1] for c in self.columns if len(c) >= r)

    def to_dict(self) -> dict:
        return {"columns": [list(c) for c in self.columns]}

    @classmethod
    def from_dict(cls, data: dict) -> "PileConfig":
        return cls(tuple(tuple(c) for c in data["columns"]))


def patience_piles(word: Sequence[int]) -> PileConfig:
    """Deal word into piles, leftmost larger top wins, else a new pile.

    >>> patience_piles((6, 4, 5, 1, 8, 7, 2, 3)).columns
    ((6, 4, 1), (5, 2), (8, 7, 3))
    >>> patience_piles((3, 2, 1)).columns
    ((3, 2, 1),)
    """
    word = as_word(word)
    cols: list[list[int]] = []
    tops: list[int] = []
    for card in word:
        # tops is increasing left to right, so the leftmost pile whose top
        # exceeds card sits at bisect_right(tops, card).
        j = bisect_right(tops, card)
        if j == len(cols):
            cols.append([card])
            tops.append(card)
        else:
            cols[j].append(card)
            tops[j] = card
    return PileConfig(tuple(tuple(c) for c in cols))


def extended_patience(word: Sequence[int]) -> tuple[PileConfig, PileConfig]:
    """Deal word into insertion piles while recording deal times.

    Returns (insertion, recording).  Whenever card number ``time`` lands on
    insertion pile j, ``time`` is slid under recording pile j, so recording
    pile j read bottom->top holds pile j's deal times latest-first and both
    configurations share one shape.

    >>> insertion, recording = extended_patience((6, 4, 5, 1, 8, 7, 2, 3))
    >>> insertion.columns
    ((6, 4, 1), (5, 2), (8, 7, 3))
    >>> recording.columns
    ((4, 2, 1), (7, 3), (8, 6, 5))
    """
    word = as_word(word)
    cols: list[list[int]] = []
    times: list[list[int]] = []
    tops: list[int] = []
    for time, card in enumerate(word, start=1):
        j = bisect_right(tops, card)
        if j == len(cols):
            cols.append([card])
            times.append([time])
            tops.append(card)
        else:
            cols[j].append(card)
            times[j].append(time)
            tops[j] = card
    insertion = PileConfig(tuple(tuple(c) for c in cols))
    recording = PileConfig(tuple(tuple(reversed(t)) for t in times))
    return insertion, recording


def extended_patience_inverse(insertion: PileConfig, recording: PileConfig) -> Word:
    """The unique permutation dealing into (insertion, recording).

    Card ``insertion.columns[j][k]`` was dealt at time
    ``recording.columns[j][height - 1 - k]``; undoing the deal in reverse
    time order rebuilds the word, and a forward replay confirms the pair is
    actually reachable.  Raises NoPreimageError otherwise.

    >>> extended_patience_inverse(PileConfig(((1,),)), PileConfig(((1,),)))
    (1,)
    """
    if insertion.shape != recording.shape:
        raise NoPreimageError(
            f"shapes differ: {insertion.shape} vs {recording.shape}"
        )
    word = [0] * insertion.n
    for cards, stamps in zip(insertion.columns, recording.columns):
        for card, time in zip(cards, reversed(stamps)):
            word[time - 1] = card
    candidate = tuple(word)
    if extended_patience(candidate) != (insertion, recording):
        raise NoPreimageError(
            f"no permutation deals into this pair: {insertion.columns!r},"
            f" {recording.columns!r}"
        )
    return candidate


def reverse_patience_word(piles: PileConfig) -> Word:
    """Read the piles column by column, each column bottom card first.

    >>> reverse_patience_word(PileConfig(((6, 4, 1), (5, 2), (8, 7, 3))))
    (6, 4, 1, 5, 2, 8, 7, 3)
    """
    return as_word(chain.from_iterable(piles.columns))


def is_legal(piles: PileConfig) -> bool:
    """True iff redealing the reverse patience word reproduces the piles.

    >>> is_legal(PileConfig(((2, 1), (3,))))
    True
    >>> is_legal(PileConfig(((2,), (3, 1))))
    False
    """
    return patience_piles(reverse_patience_word(piles)) == piles
