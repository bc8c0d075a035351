"""Patience sorting, row insertion, and their geometric shadow-diagram
forms, verified exhaustively at small n."""

from .crossings import (
    Crossing,
    crossing_free_all_iterates,
    detect_crossings,
    is_polygonal,
    rows_monotone,
)
from .permutations import (
    DashedPattern,
    PATTERN_2_31,
    PATTERN_3_1_42,
    avoids_barred_3142,
    diagram,
    inverse,
    occurrences_dashed,
    parse_permutation,
)
from .piles import (
    NoPreimageError,
    PileConfig,
    extended_patience,
    extended_patience_inverse,
    is_legal,
    patience_piles,
    reverse_patience_word,
)
from .shadows import (
    ShadowDiagram,
    Shadowline,
    geometric_patience,
    geometric_rsk,
    ne_diagram,
    ne_iterates,
    ne_shadowline,
    salient_points,
    sw_diagram,
    sw_iterates,
    sw_shadowline,
)
from .tableaux import StandardTableau, rsk, schensted_insert
from .verify import run_checks

__version__ = "0.1.0"

__all__ = [
    "Crossing",
    "DashedPattern",
    "NoPreimageError",
    "PATTERN_2_31",
    "PATTERN_3_1_42",
    "PileConfig",
    "ShadowDiagram",
    "Shadowline",
    "StandardTableau",
    "avoids_barred_3142",
    "crossing_free_all_iterates",
    "detect_crossings",
    "diagram",
    "extended_patience",
    "extended_patience_inverse",
    "geometric_patience",
    "geometric_rsk",
    "inverse",
    "is_legal",
    "is_polygonal",
    "ne_diagram",
    "ne_iterates",
    "ne_shadowline",
    "occurrences_dashed",
    "parse_permutation",
    "patience_piles",
    "reverse_patience_word",
    "rows_monotone",
    "rsk",
    "run_checks",
    "salient_points",
    "schensted_insert",
    "sw_diagram",
    "sw_iterates",
    "sw_shadowline",
]
