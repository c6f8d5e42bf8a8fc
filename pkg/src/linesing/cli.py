"""Command line surface: count queries, table generation, self-verification.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Data goes to stdout, diagnostics to stderr.  Counts are rendered as decimal
strings in every format because they outgrow 64-bit integers quickly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .counting import QueryError, SurfaceQuery, count_via_pipeline
from .verify import SUITES, run_suites

FORMATS = ("md", "json", "csv")
CSV_COLUMNS = ("d", "k", "u", "rank", "delta", "n", "phi", "warnings")


@dataclass(frozen=True)
class OutputRecord:
    d: int
    k: int
    u: int
    rank: int
    delta: int
    n: str
    phi: str
    warnings: tuple

    @classmethod
    def for_query(cls, d: int, k: int) -> "OutputRecord":
        q = SurfaceQuery(d, k)
        res = count_via_pipeline(q)
        return cls(
            d=q.d,
            k=q.k,
            u=q.u,
            rank=res.rank,
            delta=res.delta,
            n=str(res.n),
            phi=str(res.phi),
            warnings=tuple(f"{w.name}: {w.message}" for w in res.warnings),
        )


def _render_md(records) -> str:
    lines = [
        "| " + " | ".join(CSV_COLUMNS) + " |",
        "|" + "|".join("---:" if c != "warnings" else ":---" for c in CSV_COLUMNS) + "|",
    ]
    for r in records:
        cells = (r.d, r.k, r.u, r.rank, r.delta, r.n, r.phi, "; ".join(r.warnings))
        lines.append("| " + " | ".join(str(c) for c in cells) + " |")
    return "\n".join(lines)


def _render_json(records) -> str:
    return "\n".join(
        json.dumps({
            "d": r.d, "k": r.k, "u": r.u, "rank": r.rank, "delta": r.delta,
            "n": r.n, "phi": r.phi, "warnings": list(r.warnings),
        })
        for r in records)


def _render_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            (r.d, r.k, r.u, r.rank, r.delta, r.n, r.phi, ";".join(r.warnings)))
    return buf.getvalue().rstrip("\n")


_RENDERERS = {"md": _render_md, "json": _render_json, "csv": _render_csv}


def _cmd_count(args) -> int:
    record = OutputRecord.for_query(args.d, args.k)
    print(_RENDERERS[args.format]([record]))
    return 0


def _cmd_table(args) -> int:
    if args.dmax < 2:
        raise QueryError(f"--dmax must be at least 2, got {args.dmax}")
    records = [
        OutputRecord.for_query(d, k)
        for d in range(1, args.dmax + 1)
        for k in range(1, d + 1)
    ]
    print(_RENDERERS[args.format](records))
    return 0


def _cmd_verify(args) -> int:
    names = [args.suite] if args.suite else None
    return 0 if run_suites(names) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linesing",
        description="Exact counts of degree-d surfaces in P^3 with an "
                    "order-k singular line through generic points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count for one (d, k) query")
    p_count.add_argument("--d", type=int, required=True, help="surface degree")
    p_count.add_argument("--k", type=int, required=True, help="singularity order")
    p_count.add_argument("--format", choices=FORMATS, default="md")
    p_count.set_defaults(func=_cmd_count)

    p_table = sub.add_parser("table", help="full triangular table 1 <= k <= d <= dmax")
    p_table.add_argument("--dmax", type=int, required=True, help="largest degree")
    p_table.add_argument("--format", choices=FORMATS, default="md")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run the self-verification suites")
    p_verify.add_argument("--suite", choices=sorted(SUITES), default=None,
                          help="run a single suite instead of all of them")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return exc.code or 0
    try:
        return args.func(args)
    except QueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
