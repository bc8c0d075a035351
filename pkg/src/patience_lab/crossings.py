"""Detection and classification of intersections between southwest
shadowlines of one iterate.

Within an iterate, the line formed later (larger index) is the upper line
of a pair and the earlier one the lower line.  An intersection is
classified by the upper line's segment involved: a crossing on one of its
horizontal segments is horizontal ("H"), on a vertical segment vertical
("V"); a pair showing both kinds in one iterate is a polygonal crossing.
All geometry is exact: the staircases are rectilinear with integer
vertices, and segments are closed, so a single shared point counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .permutations import Point, Word, as_word
from .piles import PileConfig
from .shadows import SW, ShadowDiagram, sw_iterates, sw_polyline

HORIZONTAL = "H"
VERTICAL = "V"

Segment = tuple[Point, Point]


@dataclass(frozen=True)
class Crossing:
    """A classified intersection between two lines of one iterate.

    location is the intersection point, or the overlapped segment's two
    endpoints when two collinear segments share more than a point; such
    overlaps cannot arise from a permutation (all coordinates are
    distinct) and are flagged so they never pass silently.
    """

    iterate: int
    lower_index: int
    upper_index: int
    kind: str
    location: Point | Segment
    overlap: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.lower_index < self.upper_index:
            raise ValueError(
                f"need 1 <= lower < upper: {self.lower_index}, {self.upper_index}"
            )
        if self.kind not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"kind must be H or V: {self.kind!r}")

    def to_dict(self) -> dict:
        entry = {
            "iterate": self.iterate,
            "pair": [self.lower_index, self.upper_index],
            "kind": self.kind,
            "at": [list(p) for p in self.location] if self.overlap else list(self.location),
        }
        if self.overlap:
            entry["overlap"] = True
        return entry


def _segments(vertices: Sequence[Point]) -> list[tuple[Segment, str]]:
    """Consecutive vertex pairs with their orientation, skipping degenerates."""
    out = []
    for a, b in zip(vertices, vertices[1:]):
        if a == b:
            continue
        out.append(((a, b), HORIZONTAL if a[1] == b[1] else VERTICAL))
    return out


def _span(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _intersect(seg_a: Segment, orient_a: str, seg_b: Segment, orient_b: str):
    """Intersection of two closed axis-parallel segments.

    Returns None, ("point", (x, y)) or ("overlap", ((x1, y1), (x2, y2))).
    """
    if orient_a != orient_b:
        (h, _), (v, _) = ((seg_a, orient_a), (seg_b, orient_b)) if orient_a == HORIZONTAL else (
            (seg_b, orient_b),
            (seg_a, orient_a),
        )
        y = h[0][1]
        x = v[0][0]
        x_lo, x_hi = _span(h[0][0], h[1][0])
        y_lo, y_hi = _span(v[0][1], v[1][1])
        if x_lo <= x <= x_hi and y_lo <= y <= y_hi:
            return ("point", (x, y))
        return None
    if orient_a == HORIZONTAL:
        if seg_a[0][1] != seg_b[0][1]:
            return None
        y = seg_a[0][1]
        lo = max(_span(seg_a[0][0], seg_a[1][0])[0], _span(seg_b[0][0], seg_b[1][0])[0])
        hi = min(_span(seg_a[0][0], seg_a[1][0])[1], _span(seg_b[0][0], seg_b[1][0])[1])
        if lo > hi:
            return None
        if lo == hi:
            return ("point", (lo, y))
        return ("overlap", ((lo, y), (hi, y)))
    if seg_a[0][0] != seg_b[0][0]:
        return None
    x = seg_a[0][0]
    lo = max(_span(seg_a[0][1], seg_a[1][1])[0], _span(seg_b[0][1], seg_b[1][1])[0])
    hi = min(_span(seg_a[0][1], seg_a[1][1])[1], _span(seg_b[0][1], seg_b[1][1])[1])
    if lo > hi:
        return None
    if lo == hi:
        return ("point", (x, lo))
    return ("overlap", ((x, lo), (x, hi)))


def polylines_intersect(vertices_a: Sequence[Point], vertices_b: Sequence[Point]) -> bool:
    """True if two rectilinear polylines share any point."""
    segs_b = _segments(vertices_b)
    for seg_a, orient_a in _segments(vertices_a):
        for seg_b, orient_b in segs_b:
            if _intersect(seg_a, orient_a, seg_b, orient_b) is not None:
                return True
    return False


def detect_crossings(d: ShadowDiagram) -> list[Crossing]:
    """All classified intersections between distinct lines of a southwest
    iterate.

    Every intersection locus of every pair is reported, classified by the
    orientation of the upper line's segment; an intersection sitting on a
    corner of the upper line, where both its segments touch the lower
    line, yields one H and one V crossing at the same point.  Output is
    sorted by pair, then location, then kind.
    """
    if any(line.orientation != SW for line in d.lines):
        raise ValueError("crossing detection applies to southwest diagrams")
    crossings: list[Crossing] = []
    polylines = [sw_polyline(line) for line in d.lines]
    for i in range(len(d.lines)):
        lower_segs = _segments(polylines[i])
        for j in range(i + 1, len(d.lines)):
            found: set[tuple[str, tuple, bool]] = set()
            for upper_seg, upper_orient in _segments(polylines[j]):
                for lower_seg, lower_orient in lower_segs:
                    hit = _intersect(upper_seg, upper_orient, lower_seg, lower_orient)
                    if hit is None:
                        continue
                    shape, where = hit
                    found.add((upper_orient, where, shape == "overlap"))
            for kind, where, overlap in sorted(
                found, key=lambda f: (f[1][0] if f[2] else f[1], f[0])
            ):
                crossings.append(Crossing(d.iterate, i + 1, j + 1, kind, where, overlap))
    crossings.sort(
        key=lambda c: (
            c.lower_index,
            c.upper_index,
            c.location[0] if c.overlap else c.location,
            c.kind,
        )
    )
    return crossings


def is_polygonal(crossings: Iterable[Crossing]) -> bool:
    """True iff one pair's crossings include both a horizontal and a
    vertical crossing.

    The crossings must all belong to a single (iterate, lower, upper)
    triple.
    """
    crossings = list(crossings)
    keys = {(c.iterate, c.lower_index, c.upper_index) for c in crossings}
    if len(keys) > 1:
        raise ValueError(f"crossings span several pairs: {sorted(keys)}")
    kinds = {c.kind for c in crossings}
    return HORIZONTAL in kinds and VERTICAL in kinds


def crossing_free_all_iterates(word: Sequence[int]) -> bool:
    """True iff no southwest iterate of the permutation has any crossing."""
    return all(not detect_crossings(d) for d in sw_iterates(as_word(word)))


def rows_monotone(insertion: PileConfig, recording: PileConfig, from_row: int = 1) -> bool:
    """True iff every row at height >= from_row strictly increases left to
    right in both pile configurations.

    Rows are read in column order at each height, skipping columns that
    are too short; heights beyond every column are vacuously monotone.
    """
    if insertion.shape != recording.shape:
        raise ValueError(
            f"shapes differ: {insertion.shape} vs {recording.shape}"
        )
    if from_row < 1:
        raise ValueError(f"rows are numbered from 1: {from_row}")
    top = max(insertion.shape, default=0)
    for r in range(from_row, top + 1):
        for config in (insertion, recording):
            row = config.row(r)
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
    return True
