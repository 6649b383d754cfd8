"""Command line interface: analyze, verify, catalog.

Exit codes: 0 success, 1 invalid algebra (axioms fail), 2 parse/usage error,
3 structure-law violation (which would mean a bug in this package).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog as _catalog
from .algfile import InvalidAlgebraError, ParseError, parse_algebra, render_algebra
from .core import LieAlgebra
from .oracle import TheoremReport, verify_theorems
from .series import ProfileReport, SeriesReport, profile
from .subspace import Subspace

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_VIOLATED = 3


# -- rendering helpers ---------------------------------------------------------


def format_vector(row: Sequence[Fraction], labels: Sequence[str]) -> str:
    pieces = []
    for c, label in zip(row, labels):
        if c == 0:
            continue
        if c == 1:
            pieces.append(label)
        elif c == -1:
            pieces.append(f"-{label}")
        else:
            pieces.append(f"{c}*{label}")
    if not pieces:
        return "0"
    return " + ".join(pieces).replace("+ -", "- ")


def _format_subspace(s: Subspace, labels: Sequence[str]) -> str:
    if s.is_zero():
        return "(zero)"
    return "; ".join(format_vector(row, labels) for row in s.rows())


def _subspace_json(s: Subspace) -> dict:
    return {
        "dim": s.dim,
        "basis": [[str(x) for x in row] for row in s.rows()],
    }


def _series_json(rep: SeriesReport) -> list[dict]:
    return [_subspace_json(t) for t in rep.chain]


def profile_json(L: LieAlgebra, prof: ProfileReport) -> dict:
    return {
        "dim": L.dim,
        "series": {
            "derived": _series_json(prof.derived),
            "lower_central": _series_json(prof.lower_central),
            "upper_central": _series_json(prof.upper_central),
        },
        "perfect_radical": _subspace_json(prof.perfect_radical),
        "near_perfect_radical": _subspace_json(prof.near_perfect_radical),
        "radical": _subspace_json(prof.radical),
        "center": _subspace_json(prof.center),
        "smallest_upper_bounded": _subspace_json(prof.smallest_upper_bounded),
        "flags": prof.flags(),
    }


def report_json(report: TheoremReport) -> dict:
    return {
        "dim": report.dim,
        "samples": report.samples,
        "seed": report.seed,
        "note": report.note,
        "results": [
            {
                "id": c.prop_id,
                "status": c.status,
                "detail": c.detail,
                "witness": c.witness_dict(),
            }
            for c in report.checks
        ],
        "violations": len(report.violated),
    }


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _print_series(name: str, rep: SeriesReport, labels: Sequence[str]) -> None:
    print(f"{name} (stabilizes at index {rep.stabilization_index}):")
    for k, term in enumerate(rep.chain):
        print(f"  term {k}  dim {term.dim}  basis: {_format_subspace(term, labels)}")


def _print_profile(L: LieAlgebra, prof: ProfileReport) -> None:
    labels = L.labels
    print(f"dim {L.dim}")
    print("basis " + " ".join(labels))
    flags = " ".join(f"{k}={str(v).lower()}" for k, v in prof.flags().items())
    print(f"flags: {flags}")
    _print_series("derived series", prof.derived, labels)
    _print_series("lower central series", prof.lower_central, labels)
    _print_series("upper central series", prof.upper_central, labels)
    for name, sub in (
        ("perfect_radical", prof.perfect_radical),
        ("near_perfect_radical", prof.near_perfect_radical),
        ("radical", prof.radical),
        ("center", prof.center),
        ("smallest_upper_bounded", prof.smallest_upper_bounded),
    ):
        print(f"{name:<24} dim {sub.dim}  basis: {_format_subspace(sub, labels)}")


# -- commands -------------------------------------------------------------------


def _load(path: str) -> LieAlgebra | int:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return parse_algebra(text)
    except InvalidAlgebraError as exc:
        print(f"error: invalid algebra: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def cmd_analyze(path: str, as_json: bool) -> int:
    loaded = _load(path)
    if isinstance(loaded, int):
        return loaded
    prof = profile(loaded)
    if as_json:
        sys.stdout.write(_dump_json(profile_json(loaded, prof)))
    else:
        _print_profile(loaded, prof)
    return EXIT_OK


def cmd_verify(path: str, samples: int, seed: int, as_json: bool) -> int:
    loaded = _load(path)
    if isinstance(loaded, int):
        return loaded
    report = verify_theorems(loaded, samples=samples, seed=seed)
    if as_json:
        sys.stdout.write(_dump_json(report_json(report)))
    else:
        print(f"dim {report.dim}, samples {report.samples}, seed {report.seed}")
        print(f"note: {report.note}")
        for c in report.checks:
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"{c.prop_id:<6} {c.status}{detail}")
        print(f"violations: {len(report.violated)}")
    return EXIT_OK if report.ok else EXIT_VIOLATED


def cmd_catalog(name: str | None) -> int:
    if name is None:
        for n in _catalog.names():
            print(n)
        return EXIT_OK
    try:
        entry = _catalog.get(name)
    except _catalog.UnknownAlgebraError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(render_algebra(entry.algebra, name=entry.name))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieradicals",
        description=(
            "Exact-arithmetic Lie algebra calculator: characteristic series, "
            "radicals, and structure-law verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="profile an algebra file")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--json", action="store_true", help="machine-readable output")

    p_verify = sub.add_parser("verify", help="run the structure-law checks on a file")
    p_verify.add_argument("path")
    p_verify.add_argument("--samples", type=int, default=50, metavar="N")
    p_verify.add_argument("--seed", type=int, default=0, metavar="S")
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")

    p_catalog = sub.add_parser("catalog", help="list entries or export one")
    p_catalog.add_argument("name", nargs="?")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep those codes.
        return int(exc.code or 0)
    if args.command == "analyze":
        return cmd_analyze(args.path, args.json)
    if args.command == "verify":
        return cmd_verify(args.path, args.samples, args.seed, args.json)
    return cmd_catalog(args.name)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
