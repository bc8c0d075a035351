"""Command line surface: single-permutation pipelines, diagram rendering,
and the exhaustive verification harness.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors (bad permutation text, unknown check, out-of-range arguments).
The environment variable PATIENCE_LAB_SEEDLESS is reserved and unused:
the harness enumerates exhaustively and takes no random seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import render, verify
from .permutations import avoids_barred_3142, format_permutation, parse_permutation
from .piles import extended_patience, reverse_patience_word
from .shadows import diagram_to_dict, ne_iterates, sw_iterates
from .tableaux import rsk


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patience-lab",
        description="Patience sorting, row insertion, and their shadow-diagram forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser(
        "run", help="deal one permutation through every pipeline and print the results"
    )
    run.add_argument("perm", help='permutation, e.g. "64518723" or "6 4 5 1 8 7 2 3"')
    run.add_argument("--format", choices=["text", "json"], default="text")
    run.add_argument("--out", help="write output to FILE instead of stdout")

    geom = sub.add_parser("geom", help="render shadow diagram iterates")
    geom.add_argument("perm")
    orientation = geom.add_mutually_exclusive_group(required=True)
    orientation.add_argument("--sw", action="store_true", help="southwest iterates")
    orientation.add_argument("--ne", action="store_true", help="northeast iterates")
    which = geom.add_mutually_exclusive_group(required=True)
    which.add_argument("--iterate", type=int, metavar="K")
    which.add_argument("--all", action="store_true")
    geom.add_argument("--format", choices=["ascii", "svg", "json"], default="ascii")
    geom.add_argument("--out", help="write output to FILE instead of stdout")

    ver = sub.add_parser("verify", help="run exhaustive checks over S_n")
    ver.add_argument("--n", type=int, required=True, metavar="K")
    ver.add_argument(
        "--checks",
        help="comma-separated check names (default: all); valid names: "
        + ", ".join(verify.CHECKS),
    )
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.add_argument("--out", help="write output to FILE instead of stdout")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_run(args, parser) -> int:
    try:
        perm = parse_permutation(args.perm)
    except ValueError as exc:
        parser.error(str(exc))
    insertion, recording = extended_patience(perm)
    p, q = rsk(perm)
    rpw = reverse_patience_word(insertion)
    avoids = avoids_barred_3142(perm)
    if args.format == "json":
        payload = {
            "permutation": list(perm),
            "insertion_piles": insertion.to_dict(),
            "recording_piles": recording.to_dict(),
            "p_tableau": p.to_dict(),
            "q_tableau": q.to_dict(),
            "reverse_patience_word": list(rpw),
            "avoids_barred_3142": avoids,
        }
        _emit(json.dumps(payload, indent=2), args.out)
        return 0
    blocks = [
        f"permutation: {format_permutation(perm)}",
        "",
        "insertion piles:",
        render.format_piles(insertion),
        "",
        "recording piles:",
        render.format_piles(recording),
        "",
        "insertion tableau:",
        render.format_tableau(p),
        "",
        "recording tableau:",
        render.format_tableau(q),
        "",
        f"reverse patience word: {format_permutation(rpw)}",
        f"avoids 3-1̄42: {'yes' if avoids else 'no'}",
    ]
    _emit("\n".join(blocks), args.out)
    return 0


def _cmd_geom(args, parser) -> int:
    try:
        perm = parse_permutation(args.perm)
    except ValueError as exc:
        parser.error(str(exc))
    sequence = sw_iterates(perm) if args.sw else ne_iterates(perm)
    if args.all:
        wanted = sequence
    else:
        if not 0 <= args.iterate < len(sequence):
            parser.error(
                f"iterate {args.iterate} out of range; available iterates:"
                f" 0..{len(sequence) - 1}"
            )
        wanted = [sequence[args.iterate]]
    n = len(perm)
    if args.format == "json":
        dumps = [diagram_to_dict(d) for d in wanted]
        _emit(json.dumps(dumps if args.all else dumps[0], indent=2), args.out)
    elif args.format == "svg":
        _emit(render.render_svg(wanted, n), args.out)
    else:
        blocks = []
        for d in wanted:
            if args.all:
                blocks.append(f"iterate {d.iterate}:")
            blocks.append(render.render_ascii(d, n))
            if args.all:
                blocks.append("")
        _emit("\n".join(blocks).rstrip("\n"), args.out)
    return 0


def _format_report(report: verify.VerificationReport) -> str:
    lines = [
        f"S_{report.n}: {len(report.checks)} checks,"
        f" wall time {report.wall_time:.2f}s"
    ]
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        extras = " ".join(f"{k}={v}" for k, v in sorted(check.stats.items()))
        line = f"  {status} {check.name}"
        if extras:
            line += f"  [{extras}]"
        if check.counterexample is not None:
            line += f"  counterexample: {format_permutation(check.counterexample)}"
        lines.append(line)
    return "\n".join(lines)


def _cmd_verify(args, parser) -> int:
    names = None
    if args.checks:
        names = [name.strip() for name in args.checks.split(",") if name.strip()]
    try:
        report = verify.run_checks(args.n, names=names, jobs=args.jobs)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2), args.out)
    else:
        _emit(_format_report(report), args.out)
    return 0 if report.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return _cmd_run(args, parser)
    if args.command == "geom":
        return _cmd_geom(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
