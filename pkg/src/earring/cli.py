"""Command-line front end: word algebra, loop measurements, evidence reports.

Exit status 0 on success or a passing report, 1 on a failing report verdict,
2 on usage or literal parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .evidence import (
    EvidenceReport,
    convergence_report,
    fmt_dist,
    limit_point_report,
    oscillation_bounds_report,
    product_class_report,
    square_grid,
    vanishing_report,
)
from .limits import phi, project
from .loops import (
    CombLoop,
    Dwell,
    compile_loop,
    parse_tokens,
    sup_distance,
)
from .oscillation import oscillation
from .words import WordParseError, format_word, max_gen, parse_word, reduce_word


def _loop_from_literal(text: str) -> CombLoop:
    tokens = parse_tokens(text)
    return compile_loop(tokens)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _render_report(report: EvidenceReport, args: argparse.Namespace) -> int:
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_table(), args.out)
    if args.figures is not None:
        from .figures import save_report_figure

        path = save_report_figure(report, args.figures)
        print(f"figure written to {path}", file=sys.stderr)
    return 0 if report.passed else 1


def _doubling(start: int, maximum: int) -> list[int]:
    out = []
    k = start
    while k <= maximum:
        out.append(k)
        k *= 2
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="earring",
        description="Exact word algebra, combinatorial loops, and evidence reports "
        "for the Hawaiian earring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="free-group normal form of a word literal")
    p.add_argument("word", help="word literal, e.g. '1 2 -2 -1 3' (e = empty)")

    p = sub.add_parser("project", help="project a word onto the first N circles")
    p.add_argument("word")
    p.add_argument("--level", type=int, required=True, help="number of circles kept")

    p = sub.add_parser("coherent", help="level tower of a word as a JSON array of literals")
    p.add_argument("word")
    p.add_argument("--depth", type=int, default=None, help="override tower depth (default: max generator)")

    p = sub.add_parser("compile", help="compile a loop literal and print its moves")
    p.add_argument("loop", help="loop literal: word literal plus '.' for a dwell slot")

    p = sub.add_parser("osc", help="oscillation number of a loop for one circle")
    p.add_argument("loop")
    p.add_argument("--gen", type=int, required=True, help="circle index")
    p.add_argument("--witness", action="store_true", help="print the witness set as JSON")

    p = sub.add_parser("dist", help="uniform distance between two loops")
    p.add_argument("loop_a")
    p.add_argument("loop_b")
    p.add_argument("--eps", type=float, default=1e-4, help="accuracy of the estimate")

    report = sub.add_parser("report", help="run an evidence report")
    rsub = report.add_subparsers(dest="report_name", required=True)

    def add_common(rp: argparse.ArgumentParser) -> None:
        rp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        rp.add_argument("--out", default=None, help="write the report to a file instead of stdout")
        rp.add_argument("--figures", default=None, metavar="DIR", help="also render a figure into DIR")
        rp.add_argument("--seed", type=int, default=0)

    rp = rsub.add_parser("convergence", help="w(n,k) loops approach their padded limit loop")
    rp.add_argument("--n", type=int, default=3)
    rp.add_argument("--kmax", type=int, default=64, help="doubling k grid 4, 8, ... up to kmax")
    add_common(rp)

    rp = rsub.add_parser("vanishing", help="a(n,k) loops approach the constant loop")
    rp.add_argument("--nmax", type=int, default=12)
    rp.add_argument("--kmax", type=int, default=12)
    add_common(rp)

    rp = rsub.add_parser("oscbounds", help="exact oscillation counts and padded lower bounds")
    rp.add_argument("--nmax", type=int, default=12)
    rp.add_argument("--kmax", type=int, default=12)
    rp.add_argument("--trials", type=int, default=20, help="random padded variants per cell")
    add_common(rp)

    rp = rsub.add_parser("product", help="reduced a(n,k)w(n,k) never collapses to the identity")
    rp.add_argument("--nmax", type=int, default=12)
    rp.add_argument("--kmax", type=int, default=12)
    add_common(rp)

    rp = rsub.add_parser("limitpoint", help="find (n,k) pairs inside shrinking neighborhoods")
    rp.add_argument("--eps", type=float, nargs="+", default=[0.5, 0.2, 0.1, 0.05])
    rp.add_argument("--max-index", type=int, default=200, help="give up the search beyond n = k = MAX_INDEX")
    add_common(rp)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "reduce":
        print(format_word(reduce_word(parse_word(args.word))))
        return 0

    if args.command == "project":
        print(format_word(project(parse_word(args.word), args.level)))
        return 0

    if args.command == "coherent":
        w = parse_word(args.word)
        depth = args.depth if args.depth is not None else max(max_gen(w), 1)
        print(phi(w, depth).to_json())
        return 0

    if args.command == "compile":
        loop = _loop_from_literal(args.loop)
        for m in loop.moves:
            if isinstance(m, Dwell):
                print(f"dwell {m.duration}")
            else:
                arrow = "+" if m.direction == 1 else "-"
                print(f"traverse {m.gen} {arrow}1 {m.duration}")
        return 0

    if args.command == "osc":
        m, witness = oscillation(_loop_from_literal(args.loop), args.gen)
        print(m)
        if args.witness:
            print(witness.to_json())
        return 0

    if args.command == "dist":
        d = sup_distance(
            _loop_from_literal(args.loop_a), _loop_from_literal(args.loop_b), args.eps
        )
        print(fmt_dist(d))
        return 0

    if args.command == "report":
        return _run_report(args)

    raise AssertionError(f"unhandled command {args.command}")


def _run_report(args: argparse.Namespace) -> int:
    name = args.report_name
    if name == "convergence":
        ks = _doubling(4, args.kmax)
        if not ks:
            raise ValueError("kmax must be at least 4")
        report = convergence_report(args.n, ks)
    elif name == "vanishing":
        report = vanishing_report(square_grid(args.nmax, args.kmax))
    elif name == "oscbounds":
        report = oscillation_bounds_report(
            square_grid(args.nmax, args.kmax), args.trials, args.seed
        )
    elif name == "product":
        report = product_class_report(square_grid(args.nmax, args.kmax))
    elif name == "limitpoint":
        report = limit_point_report(args.eps, max_index=args.max_index)
    else:
        raise AssertionError(f"unhandled report {name}")
    return _render_report(report, args)


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
