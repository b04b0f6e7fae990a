"""Command-line front end: counting, enumeration, reference tables, constant
brackets, distributions, homomorphism counts, bounds, figure data, and the
self-verification suite.

All result payloads go to stdout and are byte-identical for identical flags
(worker count included); timing metadata goes to stderr.  Exit codes: 0 on
success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import bounds as bounds_mod
from . import enumeration as eng
from . import graphs as gr
from . import refdata
from . import stats as stats_mod
from .words import CountQuery


class _Usage(Exception):
    """A bad flag combination, reported on stderr with exit code 2."""


def _add_query_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--f", type=int, help="Frobenius number")
    parser.add_argument("--m", type=int, help="multiplicity (word length + 1)")
    parser.add_argument("--ell", type=int, help="word length")
    parser.add_argument("--depth", type=int, help="exact depth filter")
    parser.add_argument("--depth-max", type=int, help="depth upper bound")
    parser.add_argument("--stressed", action="store_true",
                        help="only words whose last entry equals the depth")
    parser.add_argument("--med", action="store_true",
                        help="only maximal-embedding-dimension words")
    parser.add_argument("--contains", type=int, metavar="N",
                        help="only semigroups containing N")


def _add_threads_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count (default: all available cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kunzlab",
        description="Exact counting and verification for numerical "
                    "semigroups in Kunz-word form.")
    parser.add_argument("--ref-data", metavar="DIR", default=None,
                        help="directory holding table1.csv/table2.csv "
                             "(the KUNZLAB_REF_DATA variable wins over this)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count the words matching a query")
    _add_query_flags(p)
    _add_threads_flag(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("enumerate", help="list the words matching a query")
    _add_query_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("table", help="emit a shipped reference table as CSV")
    p.add_argument("which", choices=("stressed3", "fm"))

    p = sub.add_parser("constants", help="emit a constant bracket as JSON")
    p.add_argument("--which", required=True,
                   choices=("c0", "c1", "mu0", "mu1", "gamma0", "gamma1"))
    p.add_argument("--j-cut", type=int, default=56,
                   help="series cutoff for the density constants")
    p.add_argument("--k-cut", type=int, default=8,
                   help="series cutoff for the mean constants")

    p = sub.add_parser("dist", help="emit an exact distribution as CSV")
    p.add_argument("which", choices=("mult", "genus"))
    p.add_argument("--f", type=int, required=True, help="Frobenius number")
    _add_threads_flag(p)

    p = sub.add_parser("hom", help="count graph homomorphisms")
    p.add_argument("--d", type=int, help="half-size of the bipartite pattern")
    p.add_argument("--q", type=int, required=True,
                   help="threshold-target label count")
    p.add_argument("--graph", metavar="FILE",
                   help="pattern graph file (see graph_from_text)")

    p = sub.add_parser("bounds", help="emit explicit bounds as JSON")
    p.add_argument("--monotone", action="store_true",
                   help="check the growth-base monotonicity sweep")
    p.add_argument("--q-max", type=int, default=10_000)
    p.add_argument("--stressed", action="store_true",
                   help="stressed depth-3 upper bounds for --ell")
    p.add_argument("--ell", type=int)
    p.add_argument("--tail-width", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--q", type=int)

    p = sub.add_parser("plot", help="emit figure data as CSV")
    p.add_argument("which", choices=("growth", "table1-ratio", "fm-scatter"))
    p.add_argument("--m", type=int, help="fm-scatter: keep one multiplicity")
    p.add_argument("--x-max", type=float, default=6.0,
                   help="growth: right end of the x range")
    p.add_argument("--step", type=float, default=0.25,
                   help="growth: x increment")

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--suite", choices=("tables", "all"), default="all")

    return parser


def _build_query(args) -> CountQuery:
    length = None
    if args.m is not None:
        if args.m < 2:
            raise _Usage("--m must be at least 2")
        length = args.m - 1
    if args.ell is not None:
        if length is not None and length != args.ell:
            raise _Usage(f"--m {args.m} and --ell {args.ell} disagree")
        length = args.ell
    contains = () if args.contains is None else (args.contains,)
    query = CountQuery(frobenius=args.f, length=length,
                       depth_exact=args.depth, depth_max=args.depth_max,
                       stressed=args.stressed, med=args.med,
                       contains=contains)
    if not query.is_finite:
        raise _Usage("the query selects infinitely many words; "
                     "give --f, or a length with a depth bound")
    return query


def _query_echo(query: CountQuery) -> dict:
    echo = {}
    for field in ("frobenius", "length", "depth_exact", "depth_max",
                  "stressed", "med", "contains"):
        value = getattr(query, field)
        if value is None or value is False or value == ():
            continue
        echo[field] = list(value) if isinstance(value, tuple) else value
    return echo


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise _Usage("--threads must be positive")
        return args.threads
    return os.cpu_count() or 1


def _fraction_payload(value: Fraction | int) -> tuple[int, int]:
    frac = Fraction(value)
    return frac.numerator, frac.denominator


def _emit_json(payload: dict, out) -> None:
    print(json.dumps(payload), file=out)


def _cmd_count(args, out) -> int:
    query = _build_query(args)
    threads = _threads(args)
    count = eng.count_words(query, threads=threads)
    if args.format == "csv":
        print("count", file=out)
        print(count, file=out)
    else:
        _emit_json({"query": _query_echo(query), "count": count}, out)
    return 0


def _cmd_enumerate(args, out) -> int:
    query = _build_query(args)
    words = [list(word) for word in eng.enumerate_words(query)]
    if args.format == "csv":
        for word in words:
            print(",".join(str(w) for w in word), file=out)
    else:
        _emit_json({"query": _query_echo(query), "words": words}, out)
    return 0


def _cmd_table(args, out, ref_dir) -> int:
    if args.which == "stressed3":
        rows = refdata.load_table1(ref_dir)
        print("ell,count", file=out)
        for ell in sorted(rows):
            print(f"{ell},{rows[ell]}", file=out)
    else:
        rows = refdata.load_table2(ref_dir)
        print("f,m,count", file=out)
        for f, m in sorted(rows):
            print(f"{f},{m},{rows[f, m]}", file=out)
    return 0


def _cmd_constants(args, out, ref_dir) -> int:
    table1 = refdata.load_table1(ref_dir)
    parity = "even" if args.which in ("c0", "mu0", "gamma0") else "odd"
    bracket = stats_mod.backelin_bracket(parity, j_cut=args.j_cut,
                                         table1=table1)
    if args.which in ("mu0", "mu1", "gamma0", "gamma1"):
        bracket = stats_mod.mu_gamma_partial(args.which, args.k_cut, bracket)
    lower_num, lower_den = _fraction_payload(bracket.lower)
    upper_num, upper_den = _fraction_payload(bracket.upper)
    decimal_lower, decimal_upper = bracket.decimal(4)
    _emit_json({
        "lower_num": lower_num,
        "lower_den": lower_den,
        "upper_num": upper_num,
        "upper_den": upper_den,
        "decimal_lower": decimal_lower,
        "decimal_upper": decimal_upper,
    }, out)
    return 0


def _cmd_dist(args, out) -> int:
    if args.f < 3:
        raise _Usage("--f must be at least 3")
    threads = _threads(args)
    if args.which == "mult":
        dist = stats_mod.mult_distribution(args.f, threads=threads)
    else:
        dist = stats_mod.genus_stats(args.f).distribution
    total = dist.total
    print("key,count,probability_num,probability_den", file=out)
    for key, count in dist.pairs:
        prob = Fraction(count, total)
        print(f"{key},{count},{prob.numerator},{prob.denominator}", file=out)
    return 0


def _cmd_hom(args, out) -> int:
    if (args.d is None) == (args.graph is None):
        raise _Usage("give exactly one of --d or --graph")
    if args.q < 1:
        raise _Usage("--q must be positive")
    if args.d is not None:
        if args.d < 1:
            raise _Usage("--d must be positive")
        count = gr.hom_kdd(args.d, args.q)
        _emit_json({"d": args.d, "q": args.q, "count": count}, out)
        return 0
    with open(args.graph, encoding="utf-8") as handle:
        graph = gr.graph_from_text(handle.read())
    count = gr.hom_count(graph, gr.threshold_target(args.q),
                         max_vertices=graph.vertex_count)
    _emit_json({"vertices": graph.vertex_count, "q": args.q,
                "count": count}, out)
    return 0


def _cmd_bounds(args, out) -> int:
    if args.monotone:
        report = bounds_mod.check_c_monotone(q_max=args.q_max)
        _emit_json({"q_max": args.q_max, "ok": report.ok,
                    "violation": report.violation}, out)
        return 0 if report.ok else 1
    if args.stressed:
        if args.ell is None:
            raise _Usage("--stressed needs --ell")
        naive, refined = bounds_mod.stressed3_upper_bounds(args.ell)
        naive_num, naive_den = _fraction_payload(naive)
        refined_num, refined_den = _fraction_payload(refined)
        _emit_json({"ell": args.ell,
                    "naive_num": naive_num, "naive_den": naive_den,
                    "refined_num": refined_num, "refined_den": refined_den},
                   out)
        return 0
    if args.tail_width is not None:
        if args.ell is None or args.depth is None:
            raise _Usage("--tail-width needs --ell and --depth")
        bound = bounds_mod.tail_heavy_bound(args.ell, args.tail_width,
                                            args.depth)
        num, den = _fraction_payload(bound)
        _emit_json({"ell": args.ell, "tail_width": args.tail_width,
                    "depth": args.depth, "lower_num": num, "lower_den": den},
                   out)
        return 0
    if args.f is not None and args.q is not None:
        generic = bounds_mod.generic_bounds(args.f, args.q)
        depth_num, depth_den = _fraction_payload(generic.depth_power)
        frob_num, frob_den = _fraction_payload(generic.frobenius_power)
        _emit_json({"f": args.f, "q": args.q,
                    "depth_power_num": depth_num,
                    "depth_power_den": depth_den,
                    "frobenius_power_num": frob_num,
                    "frobenius_power_den": frob_den}, out)
        return 0
    raise _Usage("give --monotone, --stressed --ell, "
                 "--tail-width --ell --depth, or --f --q")


def _cmd_plot(args, out, ref_dir) -> int:
    if args.which == "growth":
        if args.x_max < 1.0 or args.step <= 0.0:
            raise _Usage("--x-max must be >= 1 and --step positive")
        print("x,y", file=out)
        k = 0
        while True:
            x = 1.0 + k * args.step
            if x > args.x_max + 1e-9:
                break
            print(f"{x:.4f},{bounds_mod.growth_rate(x):.6f}", file=out)
            k += 1
        return 0
    if args.which == "table1-ratio":
        rows = refdata.load_table1(ref_dir)
        print("ell,ratio", file=out)
        for ell in sorted(rows):
            ratio = rows[ell] / 6.0 ** (ell / 2.0)
            print(f"{ell},{ratio:.6f}", file=out)
        return 0
    rows = refdata.load_table2(ref_dir)
    print("m,f,x,y", file=out)
    for f, m in sorted(rows, key=lambda cell: (cell[1], cell[0])):
        if args.m is not None and m != args.m:
            continue
        count = rows[f, m]
        x = f / m
        y = count ** (1.0 / m) if count else 0.0
        print(f"{m},{f},{x:.6f},{y:.6f}", file=out)
    return 0


def _cmd_verify(args, out, err) -> int:
    from . import verify as verify_mod
    return 0 if verify_mod.run_suite(args.suite, out=out, err=err) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out, err = sys.stdout, sys.stderr
    ref_dir = args.ref_data
    start = time.perf_counter()
    try:
        if args.command == "count":
            code = _cmd_count(args, out)
        elif args.command == "enumerate":
            code = _cmd_enumerate(args, out)
        elif args.command == "table":
            code = _cmd_table(args, out, ref_dir)
        elif args.command == "constants":
            code = _cmd_constants(args, out, ref_dir)
        elif args.command == "dist":
            code = _cmd_dist(args, out)
        elif args.command == "hom":
            code = _cmd_hom(args, out)
        elif args.command == "bounds":
            code = _cmd_bounds(args, out)
        elif args.command == "plot":
            code = _cmd_plot(args, out, ref_dir)
        else:
            code = _cmd_verify(args, out, err)
    except _Usage as exc:
        print(f"kunzlab: {exc}", file=err)
        return 2
    except (ValueError, OSError) as exc:
        print(f"kunzlab: {exc}", file=err)
        return 2
    except ArithmeticError as exc:
        print(f"kunzlab: verification failure: {exc}", file=err)
        return 1
    elapsed = time.perf_counter() - start
    workers = getattr(args, "threads", None)
    suffix = "" if workers is None else f" workers={workers or os.cpu_count() or 1}"
    print(f"elapsed={elapsed:.3f}s{suffix}", file=err)
    return code


if __name__ == "__main__":
    sys.exit(main())
