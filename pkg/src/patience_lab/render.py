"""Terminal and SVG rendering of shadow diagrams and pile displays.

The ASCII format is frozen so golden tests can diff it: an (n+1) x (n+1)
character grid over coordinates 0..n with y increasing upward, '*' for
defining points, '+' where a path turns or two paths cross, '-' and '|'
for horizontal and vertical segments, and trailing blanks stripped from
every row.  Southwest staircases are clipped at the axes; northeast rays
stop at the grid edge.

SVG mirrors the figures' conventions: unit grid, origin bottom left, dots
for diagram points, circled dots for salient points, and one stroke shade
per iterate, with later iterates dashed when several are layered.
"""

from __future__ import annotations

from typing import Sequence

from .piles import PileConfig
from .shadows import (
    NE,
    ShadowDiagram,
    ne_polyline,
    salient_points,
    sw_polyline,
)
from .tableaux import StandardTableau


def _polyline(line, n: int, bound: int) -> list[tuple[int, int]]:
    if line.orientation == NE:
        return ne_polyline(line, bound)
    return sw_polyline(line)


def render_ascii(diagram: ShadowDiagram, n: int) -> str:
    """Draw one iterate on the frozen (n+1) x (n+1) grid."""
    marks: dict[tuple[int, int], set[str]] = {}

    def mark(x: int, y: int, what: str) -> None:
        if 0 <= x <= n and 0 <= y <= n:
            marks.setdefault((x, y), set()).add(what)

    for line in diagram.lines:
        verts = _polyline(line, n, bound=n)
        for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
            if y1 == y2:
                for x in range(min(x1, x2), max(x1, x2) + 1):
                    mark(x, y1, "-")
            else:
                for y in range(min(y1, y2), max(y1, y2) + 1):
                    mark(x1, y, "|")
        for x, y in line.points:
            mark(x, y, "*")

    rows = []
    for y in range(n, -1, -1):
        chars = []
        for x in range(n + 1):
            cell = marks.get((x, y), set())
            if "*" in cell:
                chars.append("*")
            elif {"-", "|"} <= cell:
                chars.append("+")
            elif "-" in cell:
                chars.append("-")
            elif "|" in cell:
                chars.append("|")
            else:
                chars.append(" ")
        rows.append("".join(chars).rstrip())
    return "\n".join(rows)


_STROKES = ["#1a1a1a", "#707070", "#ababab", "#d0d0d0"]


def render_svg(diagrams: Sequence[ShadowDiagram], n: int, unit: int = 40) -> str:
    """Draw one or more iterates into a standalone SVG document."""
    bound = n + 1
    margin = unit
    size = bound * unit + 2 * margin

    def sx(x: int) -> int:
        return margin + x * unit

    def sy(y: int) -> int:
        return margin + (bound - y) * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"'
        f' viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    grid = [
        f'<line x1="{sx(k)}" y1="{sy(0)}" x2="{sx(k)}" y2="{sy(bound)}"'
        f' stroke="#eeeeee"/>' f'<line x1="{sx(0)}" y1="{sy(k)}" x2="{sx(bound)}" y2="{sy(k)}"'
        f' stroke="#eeeeee"/>'
        for k in range(1, bound + 1)
    ]
    parts.extend(grid)
    parts.append(
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(bound)}" y2="{sy(0)}" stroke="#444444"/>'
    )
    parts.append(
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(bound)}" stroke="#444444"/>'
    )

    layered = len(diagrams) > 1
    for index, diagram in enumerate(diagrams):
        stroke = _STROKES[min(index, len(_STROKES) - 1)]
        dash = ' stroke-dasharray="7,5"' if layered and diagram.iterate > 0 else ""
        for line in diagram.lines:
            pts = " ".join(
                f"{sx(x)},{sy(y)}" for x, y in _polyline(line, n, bound=bound)
            )
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{stroke}"'
                f' stroke-width="2"{dash}/>'
            )
        for line in diagram.lines:
            for x, y in line.points:
                parts.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="4" fill="{stroke}"/>')
            for x, y in salient_points(line):
                parts.append(
                    f'<circle cx="{sx(x)}" cy="{sy(y)}" r="7" fill="none"'
                    f' stroke="{stroke}" stroke-width="1.5"/>'
                )
                parts.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="2.5" fill="{stroke}"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def format_piles(piles: PileConfig) -> str:
    """Lay the piles out as the usual card array, tallest rows on top."""
    if not piles.columns:
        return "(empty)"
    height = max(piles.shape)
    widths = [max(len(str(v)) for v in col) for col in piles.columns]
    lines = []
    for r in range(height, 0, -1):
        cells = []
        for col, width in zip(piles.columns, widths):
            cells.append((str(col[r - 1]) if len(col) >= r else "").rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def format_tableau(tableau: StandardTableau) -> str:
    """One line per row, top row first."""
    if not tableau.rows:
        return "(empty)"
    return "\n".join(" ".join(str(v) for v in row) for row in tableau.rows)
