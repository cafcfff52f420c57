"""Command line interface: ``cellrook <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import algebra, convex, hilbert, rook, switch
from .enumeration import KINDS, count, enumerate_shapes
from .grid import key_text
from .verify import (
    DatasetError,
    read_dataset,
    test_conjecture,
    write_dataset,
    write_report,
)


def _shapes(path):
    return list(read_dataset(path))


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(count(args.kind, args.rank))
        return 0
    stream = enumerate_shapes(args.kind, args.rank)
    if args.out:
        n = write_dataset(stream, args.out)
        print(f"wrote {n} shapes to {args.out}", file=sys.stderr)
    else:
        for P in stream:
            print(key_text(P))
    return 0


def cmd_rook(args) -> int:
    want_poly = args.polynomial or not args.number
    for P in _shapes(args.input):
        fields = [key_text(P)]
        poly = rook.rook_polynomial(P)
        if want_poly:
            fields.append(poly.to_csv())
        if args.number:
            fields.append(str(poly.degree))
        print("\t".join(fields))
    return 0


def cmd_switch(args) -> int:
    for P in _shapes(args.input):
        report = switch.switching_rook_number_report(P)
        print(f"{key_text(P)}\t{report.polynomial.to_csv()}\t{report.rook_number}")
    return 0


def cmd_ideal(args) -> int:
    for P in _shapes(args.input):
        if args.sharp:
            check = algebra.satisfies_sharp if args.order == "rev" else algebra.satisfies_sharp_prime
            value = "true" if check(P) else "false"
        elif args.initial:
            ideal = algebra.initial_ideal(P, args.order)
            value = "; ".join(algebra.format_monomial(m) for m in ideal.generators)
        else:
            basis = algebra.groebner_basis(P, args.order)
            value = "; ".join(algebra.format_binomial(b) for b in basis)
        print(f"{key_text(P)}\t{value}")
    return 0


def cmd_hpoly(args) -> int:
    for P in _shapes(args.input):
        res = hilbert.h_polynomial(P, args.order)
        print(f"{key_text(P)}\t{res.h_poly.to_csv()}\t{res.krull_dim}\t{res.h_poly.degree}")
    return 0


def cmd_convex_h(args) -> int:
    for P in _shapes(args.input):
        res = convex.recursive_h(P)
        print(f"{key_text(P)}\t{res.h.to_csv()}\t{'certified' if res.certified else 'uncertified'}")
        if not res.certified and args.verbose:
            print(f"  {res.diagnostic}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    shapes = None
    if args.dataset:
        path = Path(args.dataset)
        if path.exists():
            shapes = _shapes(path)
        else:
            write_dataset(enumerate_shapes(args.kind, args.rank), path)
    summary = test_conjecture(
        args.kind,
        args.rank,
        args.jobs,
        shapes=shapes,
        timeout=args.timeout or None,
        checkpoint=args.checkpoint,
        resume=args.resume,
    )
    if args.report:
        write_report(summary, args.report)
        if not args.no_figure:
            from .plotting import figure_path_for, render_verification_figure

            render_verification_figure(
                summary.records,
                args.figure or figure_path_for(args.report),
                title=f"{args.kind}s of rank {args.rank}: {summary.summary_line()}",
            )
    else:
        for rec in summary.records:
            print(rec.to_line())
        if summary.timeouts:
            print(f"TIMEOUTS {len(summary.timeouts)}")
        print(summary.summary_line())
    for rec in summary.counterexamples:
        print(f"counterexample: {rec.canonical_key}", file=sys.stderr)
    if summary.counterexamples:
        return 1
    return 3 if summary.timeouts else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellrook",
        description="Rook polynomials, switching rook polynomials and h-polynomials of collections of cells.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all shapes of a rank up to symmetry")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rook", help="rook polynomial and rook number")
    p.add_argument("--input", required=True)
    p.add_argument("--polynomial", action="store_true")
    p.add_argument("--number", action="store_true")
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser("switch", help="switching rook polynomial")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("ideal", help="Groebner basis, initial ideal or Condition (#)/(#') check")
    p.add_argument("--input", required=True)
    p.add_argument("--order", choices=algebra.ORDERS, default="rev")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--basis", action="store_true")
    mode.add_argument("--initial", action="store_true")
    mode.add_argument("--sharp", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("hpoly", help="h-polynomial and Krull dimension of K[P]")
    p.add_argument("--input", required=True)
    p.add_argument("--order", choices=algebra.ORDERS, default="rev")
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("convex-h", help="h-polynomial by the convex dissection recursion")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_convex_h)

    p = sub.add_parser("verify", help="compare switching rook and h-polynomials exhaustively")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--dataset", help="read shapes from FILE, or write the enumeration there if missing")
    p.add_argument("--report", help="write the tab-separated report (and a PNG figure next to it)")
    p.add_argument("--figure", help="figure path (default: report path with .png)")
    p.add_argument("--no-figure", action="store_true")
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per shape; 0 disables")
    p.add_argument("--checkpoint", help="write resumable progress to FILE")
    p.add_argument("--resume", help="continue from a checkpoint FILE")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (DatasetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
