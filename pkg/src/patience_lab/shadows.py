"""Shadow geometry: staircase lattice paths cast by permutation diagrams.

The northeast shadow of a point is the closed quarter-plane weakly above
and to its right; the southwest shadow is the one weakly below and to its
left.  The shadowline of a point set is the staircase boundary of the
union of its shadows.  Peeling a permutation diagram into successive
shadowlines, then re-running the construction on the staircase corners
(the salient points), drives two parallel constructions:

* northeast, corners re-peeled all together per iterate: successive
  iterates read off the rows of the row-insertion tableau pair;
* southwest, corners kept grouped by the line that produced them: the
  iterates read off the rows of the patience-sorting pile pair.

Defining points of any shadowline have strictly increasing x and strictly
decreasing y; both peelings remove exactly the points whose shadow in the
relevant direction contains no other remaining point, so the two diagrams
of an iterate-0 peel partition the point set identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .permutations import Point, Word, as_word, diagram
from .piles import PileConfig
from .tableaux import StandardTableau

NE = "NE"
SW = "SW"


@dataclass(frozen=True)
class Shadowline:
    """A staircase path given by its defining points.

    points are sorted by increasing x (hence strictly decreasing y).  group
    tracks, for lines in a southwest iterate beyond the zeroth, the index
    of the parent line in the previous iterate that produced these points.
    """

    orientation: str
    points: tuple[Point, ...]
    group: int | None = None

    def __post_init__(self) -> None:
        if self.orientation not in (NE, SW):
            raise ValueError(f"orientation must be NE or SW: {self.orientation!r}")
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        if not self.points:
            raise ValueError("a shadowline needs at least one defining point")
        for (x1, y1), (x2, y2) in zip(self.points, self.points[1:]):
            if not (x1 < x2 and y1 > y2):
                raise ValueError(
                    f"defining points must be an antichain (x up, y down): {self.points!r}"
                )


@dataclass(frozen=True)
class ShadowDiagram:
    """The ordered shadowlines of one iterate, in formation order."""

    iterate: int
    lines: tuple[Shadowline, ...]


def sw_shadowline(points: Iterable[Point], group: int | None = None) -> Shadowline:
    """The southwest shadowline of an antichain of points.

    Raises ValueError if any point lies in another's southwest shadow.

    >>> sw_shadowline([(2, 4), (1, 6), (4, 1)]).points
    ((1, 6), (2, 4), (4, 1))
    """
    return Shadowline(SW, tuple(sorted(points)), group=group)


def ne_shadowline(points: Iterable[Point]) -> Shadowline:
    """The northeast shadowline of an antichain of points."""
    return Shadowline(NE, tuple(sorted(points)))


def salient_points(line: Shadowline) -> list[Point]:
    """The staircase corners of a shadowline.

    Between consecutive defining points (x1, y1), (x2, y2) a northeast
    line turns at (x2, y1) and a southwest line at (x1, y2); a k-point
    line has k - 1 corners.

    >>> salient_points(ne_shadowline([(1, 6), (2, 4), (4, 1)]))
    [(2, 6), (4, 4)]
    >>> salient_points(sw_shadowline([(1, 6), (2, 4), (4, 1)]))
    [(1, 4), (2, 1)]
    """
    pts = line.points
    if line.orientation == NE:
        return [(x2, y1) for (x1, y1), (x2, y2) in zip(pts, pts[1:])]
    return [(x1, y2) for (x1, y1), (x2, y2) in zip(pts, pts[1:])]


def sw_polyline(line: Shadowline) -> list[Point]:
    """Vertices of the southwest staircase, clipped at the axes.

    Runs from (0, y_max) through the defining points down to (x_max, 0).

    >>> sw_polyline(sw_shadowline([(1, 6), (2, 4), (4, 1)]))
    [(0, 6), (1, 6), (1, 4), (2, 4), (2, 1), (4, 1), (4, 0)]
    """
    if line.orientation != SW:
        raise ValueError("southwest polyline of a non-southwest line")
    pts = line.points
    verts: list[Point] = [(0, pts[0][1])]
    for (x1, _y1), (_x2, y2) in zip(pts, pts[1:]):
        verts.extend([(x1, _y1), (x1, y2)])
    verts.extend([pts[-1], (pts[-1][0], 0)])
    return verts


def ne_polyline(line: Shadowline, bound: int) -> list[Point]:
    """Vertices of the northeast staircase with rays clipped to bound.

    Runs from (x_min, bound) through the defining points out to
    (bound, y_min).  Intersection tests use bound = n + 1, which loses
    nothing because every true intersection has both coordinates <= n.
    """
    if line.orientation != NE:
        raise ValueError("northeast polyline of a non-northeast line")
    pts = line.points
    verts: list[Point] = [(pts[0][0], bound)]
    for (x1, y1), (x2, _y2) in zip(pts, pts[1:]):
        verts.extend([(x1, y1), (x2, y1)])
    verts.extend([pts[-1], (bound, pts[-1][1])])
    return verts


def _require_generic(points: Sequence[Point]) -> None:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError(f"points must have distinct x and distinct y: {points!r}")


def sw_diagram(points: Iterable[Point], iterate: int = 0) -> ShadowDiagram:
    """Peel points into southwest shadowlines, formation order.

    Each line takes exactly the remaining points whose southwest shadow
    contains no other remaining point.

    >>> [l.points for l in sw_diagram([(1, 3), (2, 1), (3, 2)]).lines]
    [((1, 3), (2, 1)), ((3, 2),)]
    """
    remaining = sorted(points)
    _require_generic(remaining)
    lines: list[Shadowline] = []
    while remaining:
        layer = [
            p
            for p in remaining
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in remaining)
        ]
        lines.append(sw_shadowline(layer))
        layer_set = set(layer)
        remaining = [p for p in remaining if p not in layer_set]
    return ShadowDiagram(iterate, tuple(lines))


def ne_diagram(points: Iterable[Point], iterate: int = 0) -> ShadowDiagram:
    """Peel points into northeast shadowlines, formation order.

    Each line is the shadowline of all remaining points; its defining
    points are their left-to-right minima, which are then removed.

    >>> [l.points for l in ne_diagram([(1, 1), (2, 2), (3, 3)]).lines]
    [((1, 1), (2, 2), (3, 3))]
    """
    remaining = sorted(points)
    _require_generic(remaining)
    lines: list[Shadowline] = []
    while remaining:
        layer: list[Point] = []
        low = None
        rest: list[Point] = []
        for p in remaining:
            if low is None or p[1] < low:
                layer.append(p)
                low = p[1]
            else:
                rest.append(p)
        lines.append(ne_shadowline(layer))
        remaining = rest
    return ShadowDiagram(iterate, tuple(lines))


def ne_iterates(word: Sequence[int]) -> list[ShadowDiagram]:
    """Iterated northeast diagrams of a permutation.

    Iterate m+1 peels all salient points of iterate m together; the
    sequence ends at the first iterate with no salient points (empty for
    the empty permutation).
    """
    points = diagram(as_word(word))
    if not points:
        return []
    sequence = [ne_diagram(points, 0)]
    while True:
        corners = [p for line in sequence[-1].lines for p in salient_points(line)]
        if not corners:
            return sequence
        sequence.append(ne_diagram(corners, len(sequence)))


def sw_iterates(word: Sequence[int]) -> list[ShadowDiagram]:
    """Iterated southwest diagrams of a permutation.

    Unlike the northeast iteration, each new shadowline may only connect
    corners of a single line of the previous iterate: every line with two
    or more defining points contributes exactly one child line (its
    corners are automatically an antichain), tagged with the parent index
    via group.  Lines keep parent order.
    """
    points = diagram(as_word(word))
    if not points:
        return []
    sequence = [sw_diagram(points, 0)]
    while True:
        children = [
            sw_shadowline(corners, group=parent)
            for parent, line in enumerate(sequence[-1].lines)
            if (corners := salient_points(line))
        ]
        if not children:
            return sequence
        sequence.append(ShadowDiagram(len(sequence), tuple(children)))


def geometric_rsk(word: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Read the tableau pair off the northeast iterates.

    Row k+1 of the first tableau collects, sorted, the smallest ordinate
    of each line of iterate k; the second tableau likewise collects the
    smallest abscissae.

    >>> p, q = geometric_rsk((6, 4, 5, 1, 8, 7, 2, 3))
    >>> p.rows, q.rows
    (((1, 2, 3), (4, 5, 7), (6, 8)), ((1, 3, 5), (2, 6, 8), (4, 7)))
    """
    sequence = ne_iterates(word)
    p_rows = tuple(
        tuple(sorted(line.points[-1][1] for line in d.lines)) for d in sequence
    )
    q_rows = tuple(
        tuple(sorted(line.points[0][0] for line in d.lines)) for d in sequence
    )
    return StandardTableau(p_rows), StandardTableau(q_rows)


def geometric_patience(word: Sequence[int]) -> tuple[PileConfig, PileConfig]:
    """Read the pile pair off the southwest iterates.

    Each line of iterate m contributes its largest ordinate to row m+1 of
    the insertion piles and its largest abscissa to row m+1 of the
    recording piles, in formation order; rows stack into columns by
    following each line's group chain back to its iterate-0 root.

    >>> insertion, recording = geometric_patience((4, 5, 3, 1, 2))
    >>> insertion.columns, recording.columns
    (((4, 3, 1), (5, 2)), ((4, 3, 1), (5, 2)))
    """
    sequence = sw_iterates(word)
    if not sequence:
        return PileConfig(()), PileConfig(())
    value_cols: list[list[int]] = [[] for _ in sequence[0].lines]
    time_cols: list[list[int]] = [[] for _ in sequence[0].lines]
    roots: list[int] = []
    for d in sequence:
        next_roots = []
        for index, line in enumerate(d.lines):
            root = index if d.iterate == 0 else roots[line.group]
            next_roots.append(root)
            value_cols[root].append(line.points[0][1])
            time_cols[root].append(line.points[-1][0])
        roots = next_roots
    return (
        PileConfig(tuple(tuple(c) for c in value_cols)),
        PileConfig(tuple(tuple(c) for c in time_cols)),
    )


def diagram_to_dict(d: ShadowDiagram) -> dict:
    """JSON form: {"iterate": m, "lines": [{"points": [[x, y], ...], "group": g}]}."""
    return {
        "iterate": d.iterate,
        "lines": [
            {"points": [list(p) for p in line.points], "group": line.group}
            for line in d.lines
        ],
    }


def diagram_from_dict(data: dict, orientation: str = SW) -> ShadowDiagram:
    return ShadowDiagram(
        data["iterate"],
        tuple(
            Shadowline(
                orientation,
                tuple(tuple(p) for p in entry["points"]),
                group=entry.get("group"),
            )
            for entry in data["lines"]
        ),
    )
