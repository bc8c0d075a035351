"""Standard Young tableaux and Schensted row insertion.

Rows are stored top row first with entries increasing along rows and down
columns.  Row insertion bumps: the new value replaces the leftmost larger
entry of row 1, the displaced value recurses into row 2, and so on until a
value lands at the end of a row.  Iterating the insertion over a
permutation while recording when each cell appears yields the classical
pair of same-shape standard tableaux.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .permutations import Word, as_word


@dataclass(frozen=True)
class StandardTableau:
    """Rows of distinct integers, top row first.

    Rows strictly increase left to right, columns strictly increase top to
    bottom, and row lengths weakly decrease, so the shape is a partition.
    Entries need not be 1..n: row insertion operates on any tableau of
    distinct values (use is_standard to test for entries exactly 1..n).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        seen: set[int] = set()
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError("tableau rows must be nonempty")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row must strictly increase: {row!r}")
            seen.update(row)
            if r > 0:
                above = self.rows[r - 1]
                if len(row) > len(above):
                    raise ValueError(f"row lengths must weakly decrease: {self.shape}")
                if any(row[c] <= above[c] for c in range(len(row))):
                    raise ValueError(f"columns must strictly increase: {self.rows!r}")
        if len(seen) != sum(len(r) for r in self.rows):
            raise ValueError(f"entries must be distinct: {self.rows!r}")

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        """Row lengths, top to bottom (a partition of n)."""
        return tuple(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        """True iff the entries are exactly 1..n."""
        return sorted(v for row in self.rows for v in row) == list(range(1, self.n + 1))

    def to_dict(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "StandardTableau":
        return cls(tuple(tuple(r) for r in data["rows"]))


def _bump(rows: list[list[int]], value: int) -> tuple[int, int]:
    """Insert value into mutable rows; return the 0-based cell created."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r, 0
        row = rows[r]
        j = bisect_right(row, value)
        if j == len(row):
            row.append(value)
            return r, j
        row[j], value = value, row[j]
        r += 1


def schensted_insert(tableau: StandardTableau, value: int) -> tuple[StandardTableau, tuple[int, int]]:
    """Row-insert value; return the new tableau and the 1-based cell created.

    >>> grown, cell = schensted_insert(StandardTableau(((2, 3),)), 1)
    >>> grown.rows, cell
    (((1, 3), (2,)), (2, 1))
    """
    if any(value in row for row in tableau.rows):
        raise ValueError(f"value already present: {value}")
    rows = [list(r) for r in tableau.rows]
    r, c = _bump(rows, value)
    return StandardTableau(tuple(tuple(r_) for r_ in rows)), (r + 1, c + 1)


def rsk(word: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """The insertion/recording tableau pair of a permutation.

    The insertion tableau accumulates the values by row insertion; the
    recording tableau writes i into the cell created at step i, so the two
    always share one shape.

    >>> p, q = rsk((6, 4, 5, 1, 8, 7, 2, 3))
    >>> p.rows
    ((1, 2, 3), (4, 5, 7), (6, 8))
    >>> q.rows
    ((1, 3, 5), (2, 6, 8), (4, 7))
    """
    word = as_word(word)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for time, card in enumerate(word, start=1):
        r, _ = _bump(p_rows, card)
        if r == len(q_rows):
            q_rows.append([time])
        else:
            q_rows[r].append(time)
    return (
        StandardTableau(tuple(tuple(r) for r in p_rows)),
        StandardTableau(tuple(tuple(r) for r in q_rows)),
    )
