"""Command-line entry point.

Exit codes: 0 success, 1 an identity failed to verify, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import genfun, identities
from .partitions import (
    STATISTICS,
    blo_modified_count,
    count_statistic,
    crank,
    crank1,
    crank2,
    gen_overpartitions,
    halve,
    kappa_stat,
    lambda_stat,
    to_triple,
)

EMPTY = "∅"
OVERLINE = "̅"


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def fmt_partition(p) -> str:
    return "+".join(map(str, p)) if p else EMPTY


def fmt_overpartition(op) -> str:
    over, plain = op
    parts = [(k, True) for k in over] + [(k, False) for k in plain]
    parts.sort(key=lambda t: (-t[0], not t[1]))
    return "+".join(
        "".join(ch + OVERLINE for ch in str(k)) if bar else str(k) for k, bar in parts
    )


def _cell(v) -> str:
    return "" if v is None else str(v)


def table_rows(which: int) -> list:
    """Header plus rows of the paper's Tables 1-3 as lists of strings."""
    if which == 1:
        rows = [["overpartition", "pi1", "lambda(pi1)", "pi2", "crank(pi2)", "crank1"]]
        for op in gen_overpartitions(3):
            over, plain = op
            lam = None if plain else lambda_stat(over)
            ck = crank(plain) if plain else None
            rows.append(
                [fmt_overpartition(op), fmt_partition(over), _cell(lam),
                 fmt_partition(plain), _cell(ck), str(crank1(op))]
            )
        return rows
    if which == 2:
        rows = [["overpartition", "crank(non-overlined parts)"]]
        for op in gen_overpartitions(3):
            if op.plain == (1,):
                continue
            rows.append([fmt_overpartition(op), str(crank(op.plain) if op.plain else 0)])
        return rows
    if which == 3:
        rows = [["overpartition", "pi1", "kappa(pi1)", "pi2", "crank(pi2/2)", "crank2"]]
        for op in gen_overpartitions(4):
            t = to_triple(op)
            kap = kappa_stat(t.overlined) if t.overlined else None
            ck = crank(halve(t.plain_even)) if t.plain_even else None
            rows.append(
                [fmt_overpartition(op), fmt_partition(t.overlined), _cell(kap),
                 fmt_partition(t.plain_even), _cell(ck), str(crank2(op))]
            )
        return rows
    raise ValueError(f"no table {which}")


def table_footer(which: int) -> list:
    if which != 2:
        return []
    adjusted = blo_modified_count(3).nonzero()
    return [
        "# 2̅+1 omitted: its non-overlined part is 1, contributing -1 at m=0 and +1 at m=-1 and m=+1",
        "# adjusted counts: " + _dump({str(m): c for m, c in adjusted.items()}),
    ]


def cmd_counts(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be nonnegative")
    table = blo_modified_count(args.n) if args.stat == "blo" else count_statistic(args.n, args.stat)
    items = table.sorted_items()
    if args.format == "json":
        print(_dump({str(m): c for m, c in items}))
    else:
        print("m\tcount")
        for m, c in items:
            print(f"{m}\t{c}")
    return 0


def cmd_table(args) -> int:
    for row in table_rows(args.paper):
        print("\t".join(row))
    for line in table_footer(args.paper):
        print(line)
    return 0


def cmd_series(args) -> int:
    if args.order < 0:
        raise ValueError("--order must be nonnegative")
    s = genfun.build(args.name, args.order)
    coeffs = [c.items() for c in s.coeffs]
    if args.format == "json":
        print(_dump({"name": args.name, "order": args.order,
                     "coeffs": [[list(t) for t in c] for c in coeffs]}))
    else:
        for n, c in enumerate(coeffs):
            print(f"q^{n}\t{c}")
    return 0


def cmd_verify(args) -> int:
    if args.all:
        ids = [spec.id for spec in identities.registry()]
    else:
        identities.get_spec(args.id)
        ids = [args.id]
    if args.order is not None and args.order < 0:
        raise ValueError("--order must be nonnegative")
    reports = identities.verify_many(ids, args.order, args.jobs)
    for r in reports:
        print(json.dumps(r.to_record(), sort_keys=True))
    return 0 if all(r.holds for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overcrank",
        description="Overpartition crank statistics and q-series identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("counts", help="distribution of a statistic at size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", required=True, choices=sorted(STATISTICS) + ["blo"])
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("table", help="reproduce one of the paper's example tables")
    p.add_argument("--paper", type=int, required=True, choices=(1, 2, 3))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="print a generating function's coefficients")
    p.add_argument("--name", required=True, choices=sorted(genfun.BUILDERS))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="check identities (JSON lines, registry order)")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--id")
    which.add_argument("--all", action="store_true")
    p.add_argument("--order", type=int, default=None,
                   help="order of the enumerated side (default: per identity)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"overcrank: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
