"""Exhaustive verification of the library's structural claims over S_n.

Every check reduces to a predicate per permutation plus summable counters,
so the permutation stream (lexicographic order) can be sharded into
contiguous rank ranges and merged deterministically: the reported
counterexample is the lexicographically first failure regardless of how
many worker processes ran.  A few checks additionally compare an aggregate
counter against a frozen expected value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice, permutations
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence

from . import crossings as cr
from . import piles, shadows, tableaux
from .permutations import Word, avoids_barred_3142, inverse

MAX_N = 9

# Permutations of S_3 whose zeroth southwest iterate has a crossing.
S3_WITH_CROSSINGS = {(3, 1, 2), (2, 3, 1)}

# Permutations with a crossing somewhere in their zeroth southwest
# iterate, counted exhaustively and frozen as regression values.
CROSSING_COUNTS = {1: 0, 2: 0, 3: 2, 4: 12, 5: 74}

# Number of reverse patience words (equivalently, legal pile
# configurations) on n cards, frozen from an exhaustive run; the values
# coincide with the Bell numbers.
RPW_COUNTS = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203, 7: 877}


class _Ctx:
    """Lazy per-permutation artifacts shared between checks."""

    def __init__(self, perm: Word):
        self.perm = perm

    @cached_property
    def pile_pair(self):
        return piles.extended_patience(self.perm)

    @cached_property
    def tableau_pair(self):
        return tableaux.rsk(self.perm)

    @cached_property
    def sw_sequence(self):
        return shadows.sw_iterates(self.perm)

    @cached_property
    def sw_crossings(self):
        return [cr.detect_crossings(d) for d in self.sw_sequence]


CheckFn = Callable[[int, _Ctx], tuple[bool, dict[str, int]]]
FinalizeFn = Callable[[int, dict[str, int]], bool]


def _check_bijection(n: int, ctx: _Ctx):
    insertion, recording = ctx.pile_pair
    try:
        ok = piles.extended_patience_inverse(insertion, recording) == ctx.perm
    except piles.NoPreimageError:
        ok = False
    return ok, {}


def _check_symmetry_xps(n: int, ctx: _Ctx):
    insertion, recording = ctx.pile_pair
    return piles.extended_patience(inverse(ctx.perm)) == (recording, insertion), {}


def _check_symmetry_rsk(n: int, ctx: _Ctx):
    p, q = ctx.tableau_pair
    return tableaux.rsk(inverse(ctx.perm)) == (q, p), {}


def _check_geom_ps(n: int, ctx: _Ctx):
    return shadows.geometric_patience(ctx.perm) == ctx.pile_pair, {}


def _check_geom_rsk(n: int, ctx: _Ctx):
    return shadows.geometric_rsk(ctx.perm) == ctx.tableau_pair, {}


def _check_rpw_avoidance(n: int, ctx: _Ctx):
    fixed = piles.reverse_patience_word(ctx.pile_pair[0]) == ctx.perm
    ok = fixed == avoids_barred_3142(ctx.perm)
    return ok, {"rpw_words": int(fixed)}


def _check_theorem2(n: int, ctx: _Ctx):
    free = all(not c for c in ctx.sw_crossings)
    monotone = cr.rows_monotone(*ctx.pile_pair, from_row=1)
    return free == monotone, {"noncrossing": int(free)}


def _check_suffix_corollary(n: int, ctx: _Ctx):
    crossing_flags = [bool(c) for c in ctx.sw_crossings]
    depth = len(crossing_flags)
    pointwise_mismatch = 0
    ok = True
    for m in range(depth + 2):
        suffix_free = not any(crossing_flags[m:])
        if suffix_free != cr.rows_monotone(*ctx.pile_pair, from_row=m + 1):
            ok = False
        if m < depth:
            iterate_free = not crossing_flags[m]
            row_monotone = all(
                a < b
                for config in ctx.pile_pair
                for a, b in zip(config.row(m + 1), config.row(m + 1)[1:])
            )
            pointwise_mismatch += int(iterate_free != row_monotone)
    return ok, {"pointwise_mismatches": pointwise_mismatch}


def _check_ne_noncrossing(n: int, ctx: _Ctx):
    bound = n + 1
    for d in shadows.ne_iterates(ctx.perm):
        polylines = [shadows.ne_polyline(line, bound) for line in d.lines]
        for i in range(len(polylines)):
            for j in range(i + 1, len(polylines)):
                if cr.polylines_intersect(polylines[i], polylines[j]):
                    return False, {}
    return True, {}


def _check_toprow_bridge(n: int, ctx: _Ctx):
    insertion, recording = ctx.pile_pair
    p, q = ctx.tableau_pair
    first = lambda t: t.rows[0] if t.rows else ()
    ok = tuple(sorted(insertion.tops)) == first(p) and tuple(sorted(recording.tops)) == first(q)
    return ok, {}


def _check_crossings(n: int, ctx: _Ctx):
    has = bool(ctx.sw_crossings and ctx.sw_crossings[0])
    ok = True
    if n == 3:
        ok = has == (ctx.perm in S3_WITH_CROSSINGS)
    return ok, {"with_crossings": int(has)}


def _finalize_crossings(n: int, stats: dict[str, int]) -> bool:
    expected = CROSSING_COUNTS.get(n)
    return expected is None or stats.get("with_crossings", 0) == expected


def _finalize_rpw(n: int, stats: dict[str, int]) -> bool:
    expected = RPW_COUNTS.get(n)
    return expected is None or stats.get("rpw_words", 0) == expected


CHECKS: dict[str, tuple[CheckFn, FinalizeFn | None]] = {
    "bijection": (_check_bijection, None),
    "symmetry-xps": (_check_symmetry_xps, None),
    "symmetry-rsk": (_check_symmetry_rsk, None),
    "geom-ps-equality": (_check_geom_ps, None),
    "geom-rsk-equality": (_check_geom_rsk, None),
    "rpw-avoidance": (_check_rpw_avoidance, _finalize_rpw),
    "theorem2": (_check_theorem2, None),
    "suffix-corollary": (_check_suffix_corollary, None),
    "ne-noncrossing": (_check_ne_noncrossing, None),
    "toprow-bridge": (_check_toprow_bridge, None),
    "crossings": (_check_crossings, _finalize_crossings),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: Word | None
    stats: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "stats": dict(sorted(self.stats.items())),
        }


@dataclass
class VerificationReport:
    n: int
    checks: list[CheckResult]
    wall_time: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "wall_time": self.wall_time,
            "checks": [c.to_dict() for c in self.checks],
        }


def _iter_perms(n: int, lo: int, hi: int) -> Iterable[Word]:
    return islice(permutations(range(1, n + 1)), lo, hi)


def _run_shard(args) -> dict[str, tuple[int | None, Word | None, dict[str, int]]]:
    names, n, lo, hi = args
    firsts: dict[str, tuple[int | None, Word | None]] = {name: (None, None) for name in names}
    stats: dict[str, dict[str, int]] = {name: {} for name in names}
    for rank, perm in enumerate(_iter_perms(n, lo, hi), start=lo):
        ctx = _Ctx(perm)
        for name in names:
            ok, delta = CHECKS[name][0](n, ctx)
            for key, value in delta.items():
                stats[name][key] = stats[name].get(key, 0) + value
            if not ok and firsts[name][0] is None:
                firsts[name] = (rank, perm)
    return {name: (*firsts[name], stats[name]) for name in names}


def run_checks(n: int, names: Sequence[str] | None = None, jobs: int = 1) -> VerificationReport:
    """Run the named checks over all of S_n.

    Results are independent of jobs: shards cover contiguous rank ranges
    of the lexicographic permutation stream and merge in order, so a
    failing check always carries the lexicographically first
    counterexample.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}: {n}")
    if names is None:
        names = list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(
            f"unknown checks: {', '.join(unknown)}; valid: {', '.join(CHECKS)}"
        )
    start = time.perf_counter()
    total = 1
    for k in range(2, n + 1):
        total *= k
    jobs = max(1, min(jobs, total))
    if jobs == 1:
        shard_results = [_run_shard((list(names), n, 0, total))]
    else:
        step = -(-total // jobs)
        tasks = [
            (list(names), n, lo, min(lo + step, total)) for lo in range(0, total, step)
        ]
        with Pool(processes=jobs) as pool:
            shard_results = pool.map(_run_shard, tasks)

    results = []
    for name in names:
        counterexample = None
        merged: dict[str, int] = {}
        for shard in shard_results:
            rank, perm, stats = shard[name]
            if counterexample is None and perm is not None:
                counterexample = perm
            for key, value in stats.items():
                merged[key] = merged.get(key, 0) + value
        passed = counterexample is None
        finalize = CHECKS[name][1]
        if passed and finalize is not None:
            passed = finalize(n, merged)
        results.append(CheckResult(name, passed, counterexample, merged))
    return VerificationReport(n, results, time.perf_counter() - start)
