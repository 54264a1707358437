"""Command-line entry point: ``skhkit <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidParseError, exchange_move, family_menasco, family_morton, flype_pairs, parse_braid, render_braid
from .burau import burau, burau_trace, evaluate_integer, trace_at
from .homology import DEFAULT_MAX_CROSSINGS, ComplexTooLarge, euler_from_table, render_table, skh, table_to_json
from .laurent import render, render_matrix
from .report import format_report, run_report
from .rt import chi_skh_from_rt, dump_blocks, k_part, rt_matrix, theorem_trace_rhs

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _word(text: str):
    return parse_braid(text)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _format_int_matrix(rows: list[list[int]]) -> str:
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("[ " + "  ".join(str(x).rjust(width) for x in row) + " ]" for row in rows)


def cmd_burau(args) -> int:
    w = _word(args.word)
    if args.at is not None:
        try:
            values = evaluate_integer(burau(w), args.at)
            tr = trace_at(w, args.at)
        except ValueError as exc:
            return _usage_error(str(exc))
        if args.trace:
            print(tr)
        else:
            print(_format_int_matrix(values))
            print(f"trace: {tr}")
        return EXIT_OK
    if args.trace:
        print(render(burau_trace(w)))
        return EXIT_OK
    print(render_matrix(burau(w)))
    print(f"trace: {render(burau_trace(w))}")
    return EXIT_OK


def cmd_chi(args) -> int:
    w = _word(args.word)
    chi = chi_skh_from_rt(w)
    if args.k is None:
        print(render(chi))
        return EXIT_OK
    part = k_part(chi, args.k)
    print(render(part))
    if args.k == w.strands - 2:
        rhs = theorem_trace_rhs(w)
        print(f"burau: {render(rhs)}")
        if rhs != part:
            print("mismatch between the RT and Burau expressions", file=sys.stderr)
            return EXIT_FAIL
        print("match")
    return EXIT_OK


def cmd_skh(args) -> int:
    w = _word(args.word)
    try:
        table = skh(w, max_crossings=args.max_crossings)
    except ComplexTooLarge as exc:
        return _usage_error(str(exc))
    euler = euler_from_table(table)
    consistent = euler == chi_skh_from_rt(w)
    if args.json:
        print(json.dumps(table_to_json(w, table)))
    else:
        print(render_table(table))
        print(f"euler: {render(euler)}")
        print("rt-check: " + ("match" if consistent else "MISMATCH"))
    if not consistent:
        print("Euler characteristic disagrees with the RT computation", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_rt(args) -> int:
    print(dump_blocks(rt_matrix(_word(args.word))))
    return EXIT_OK


def cmd_exchange(args) -> int:
    w = _word(args.word)
    try:
        print(render_braid(exchange_move(w, args.offset)))
    except ValueError as exc:
        return _usage_error(str(exc))
    return EXIT_OK


def cmd_families(args) -> int:
    if args.k < 0:
        return _usage_error("k must be nonnegative")
    a, b = family_morton(args.k)
    print(f"morton k={args.k}: {render_braid(a)}")
    print(f"morton k={args.k}: {render_braid(b)}")
    y, z = family_menasco(args.k)
    print(f"menasco k={args.k}: {render_braid(y)}")
    print(f"menasco k={args.k}: {render_braid(z)}")
    for n, (p, r) in enumerate(flype_pairs(), 1):
        print(f"flype {n}: {render_braid(p)}")
        print(f"flype {n}: {render_braid(r)}")
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.max_k < 1:
        return _usage_error("--max-k must be at least 1")
    entries = run_report(args.max_k)
    if args.json:
        print(json.dumps([e.to_dict() for e in entries], indent=2))
    else:
        print(format_report(entries))
    return EXIT_OK if all(e.passed for e in entries) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skhkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("burau", help="Burau matrix and trace of a braid")
    p.add_argument("word", help='braid text, e.g. "3: 1 -2"')
    p.add_argument("--trace", action="store_true", help="print only the trace")
    p.add_argument("--at", type=int, help="evaluate at this integer value of t")
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("chi", help="graded Euler characteristic from the RT matrix")
    p.add_argument("word")
    p.add_argument("--k", type=int, help="restrict to one annular grading")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("skh", help="triply graded SKh table over GF(2)")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_skh)

    p = sub.add_parser("rt", help="dump the RT matrix block by block")
    p.add_argument("word")
    p.set_defaults(func=cmd_rt)

    p = sub.add_parser("exchange", help="apply an exchange move")
    p.add_argument("word")
    p.add_argument("--offset", type=int, default=0, help="left rotation applied before matching")
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("families", help="print the mutant braid families")
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("reproduce-paper", help="run every mutation experiment")
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BraidParseError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
