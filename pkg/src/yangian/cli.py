"""``yv``: run relation suites, list their cases, print PBW expansions."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .algebra import ParseError, Yangian, format_element, parse_element, set_term_cap
from .generators import lookup_generator
from .verify import (
    DEFAULT_SEED,
    SuiteSpec,
    UnknownSuite,
    UnsupportedParameters,
    list_cases,
    render_report,
    run_suite,
    suite_names,
)
from .verify.core import SUITES, report_dict

EXIT_FAIL = 1
EXIT_USAGE = 2


def _ints(text: str) -> tuple:
    try:
        out = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--nu", type=_ints, default=None, help="composition of n, e.g. 2,1")
    p.add_argument("--cutoff", type=int, default=4, help="largest series level computed")
    p.add_argument("--bound", type=int, default=None,
                   help="largest level sum r+s(+t) of relation instances")
    p.add_argument("--only", default=None, help="comma-separated case globs or relation names")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--levels", type=_ints, default=(2, 3), help="kappa_l levels for the kappa suite")


def _spec(args, name: str) -> SuiteSpec:
    return SuiteSpec(name, args.n, args.nu, args.cutoff, args.bound, args.seed, args.only, args.levels)


def _targets(args) -> List[str]:
    if args.suite == "all":
        return [s for s in suite_names() if args.n <= SUITES[s].max_n]
    if args.suite not in suite_names():
        raise UnknownSuite(args.suite)
    return [args.suite]


def cmd_verify(args) -> int:
    if args.term_cap is not None:
        set_term_cap(args.term_cap)
    reports = [run_suite(_spec(args, name)) for name in _targets(args)]
    if args.report == "json":
        docs = [report_dict(r, args.timings) for r in reports]
        print(json.dumps(docs[0] if args.suite != "all" else docs, indent=2))
    else:
        for r in reports:
            print(render_report(r, "text", args.timings, args.verbose))
        if len(reports) > 1:
            passed = sum(r.passed for r in reports)
            failed = sum(r.failed for r in reports)
            state = "PASS" if not failed else "FAIL"
            print(f"all suites: {state} {passed}/{passed + failed}")
    return 0 if all(r.ok for r in reports) else EXIT_FAIL


def cmd_list(args) -> int:
    if args.suite is None:
        for name in suite_names():
            d = SUITES[name]
            print(f"{name:<18} n<={d.max_n}  {d.summary}")
        return 0
    for name in _targets(args):
        for case_id, ref, _ in list_cases(_spec(args, name)):
            print(f"{case_id}\t{ref}")
    return 0


def cmd_show(args) -> int:
    if args.term_cap is not None:
        set_term_cap(args.term_cap)
    if (args.gen is None) == (args.expr is None):
        print("yv show: give exactly one of --gen or --expr", file=sys.stderr)
        return EXIT_USAGE
    if args.expr is not None:
        x = parse_element(args.expr, Yangian(args.n)).normal_form()
    else:
        nu = args.nu or (1,) * args.n
        x = lookup_generator(args.gen, args.n, nu, args.cutoff)
    print(format_element(x))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yv", description="Exact checks for the Yangian Y(gl_n).")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a suite (or all) and report")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    _add_spec_args(v)
    v.add_argument("--report", choices=("text", "json"), default="text")
    v.add_argument("--term-cap", type=int, default=None, help="abort a case above this many terms")
    v.add_argument("--timings", action="store_true", help="include wall-clock times")
    v.add_argument("--verbose", action="store_true", help="list passing cases too")
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="list suites, or the cases of one suite")
    ls.add_argument("--suite", default=None)
    _add_spec_args(ls)
    ls.set_defaults(func=cmd_list)

    s = sub.add_parser("show", help="print the PBW expansion of a generator or expression")
    s.add_argument("--gen", default=None, help='e.g. "E[1,2;1,1;3]", "D[1;1,1;2]", "C[2]", "minor(1 2|1 2)[1]"')
    s.add_argument("--expr", default=None, help='element text, e.g. "T[2,1;1]*T[1,2;1]"')
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--nu", type=_ints, default=None, help="composition for D/E/F (default 1,...,1)")
    s.add_argument("--cutoff", type=int, default=4)
    s.add_argument("--term-cap", type=int, default=None)
    s.set_defaults(func=cmd_show)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownSuite as exc:
        print(f"yv: unknown suite {exc.args[0]!r}; known: {', '.join(suite_names())}", file=sys.stderr)
    except (UnsupportedParameters, ParseError, ValueError, IndexError) as exc:
        print(f"yv: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
