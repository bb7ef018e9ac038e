"""Command line front end: ``arithsite eval|repl|check|stalk|sections|hyperdistance|bigcell|divisors``.

Exit codes: 0 success or no violation, 1 violation found, 2 usage or parse
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from . import grothendieck, lang, laws
from .errors import ArithSiteError, ResourceLimit

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _exit_code_for(exc: Exception) -> int:
    cause = getattr(exc, "cause", exc)
    return EXIT_RESOURCE if isinstance(cause, ResourceLimit) else EXIT_USAGE


def _emit(sort: str, value, as_json: bool, out: TextIO) -> None:
    if as_json:
        print(json.dumps(lang.record(sort, value)), file=out)
    else:
        print(lang.render(sort, value), file=out)


def _evaluate_text(text: str, as_json: bool, out: TextIO, err: TextIO) -> int:
    try:
        sort, value = lang.run(text)
    except (lang.LangError, ArithSiteError) as exc:
        print(f"error: {exc}", file=err)
        return _exit_code_for(exc)
    _emit(sort, value, as_json, out)
    return EXIT_OK


def cmd_eval(args, out, err) -> int:
    return _evaluate_text(" ".join(args.expr), args.json, out, err)


def cmd_keyword(args, out, err) -> int:
    """``stalk``, ``sections`` and ``hyperdistance`` are expression keywords; forward them."""
    return _evaluate_text(" ".join([args.command, *args.rest]), args.json, out, err)


def cmd_repl(args, out, err, stdin: TextIO) -> int:
    source = open(args.file, encoding="utf-8") if args.file else stdin
    interactive = args.file is None and stdin.isatty()
    env = lang.Environment()
    status = EXIT_OK
    try:
        while True:
            if interactive:
                print("> ", end="", file=out, flush=True)
            line = source.readline()
            if not line:
                break
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if text in ("quit", "exit"):
                break
            try:
                sort, value = lang.execute(text, env)
            except (lang.LangError, ArithSiteError) as exc:
                print(f"error: {exc}", file=err)
                status = max(status, _exit_code_for(exc))
                continue
            _emit(sort, value, args.json, out)
    finally:
        if args.file:
            source.close()
    return EXIT_OK if interactive else status


def _parse_primes(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p.strip())


def cmd_check(args, out, err) -> int:
    if args.suite in ("gp", "table"):
        return _check_family(args, out, err)
    names = list(laws.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in laws.SUITES for n in names):
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(laws.SUITES)}, all, gp, table", file=err)
        return EXIT_USAGE
    if args.mutate and args.mutate not in laws.MUTATIONS:
        print(f"error: unknown mutation {args.mutate!r}; choose from {', '.join(laws.MUTATIONS)}", file=err)
        return EXIT_USAGE
    reports = []
    try:
        for name in names:
            budget = laws.resolve_budget(name, args.cases, args.max_gen, args.max_val, args.max_primes)
            if args.mutate:
                with laws.mutated(args.mutate):
                    reports.append(laws.run_suite(name, args.seed, budget))
            else:
                reports.append(laws.run_suite(name, args.seed, budget))
    except ResourceLimit as exc:
        print(f"error: resource limit: {exc}", file=err)
        return EXIT_RESOURCE
    if args.json:
        print(json.dumps([r.as_record() for r in reports] if args.suite == "all" else reports[0].as_record()), file=out)
    else:
        for r in reports:
            print(r.render(), file=out)
        if len(reports) > 1:
            total = sum(r.violations for r in reports)
            failing = [r.suite for r in reports if not r.ok]
            print(f"all suites: {total} violations" + (f" in {', '.join(failing)}" if failing else ""), file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def _check_family(args, out, err) -> int:
    try:
        if args.suite == "gp":
            family = grothendieck.GP(_parse_primes(args.primes or ""))
        else:
            sort, members = lang.run("{" + (args.members or "") + "}")
            if sort != "sieveset":
                print("error: --members takes sieve literals, e.g. '<1>,<2>'", file=err)
                return EXIT_USAGE
            family = grothendieck.Table(members, closed_upward=args.closed_upward)
        report = grothendieck.axiom_check(
            family,
            cases=200 if args.cases is None else args.cases,
            seed=args.seed,
            max_gen=args.max_gen or 3,
            max_val=args.max_val or 60,
        )
    except (lang.LangError, ArithSiteError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return _exit_code_for(exc)
    if args.json:
        print(json.dumps(report.as_record()), file=out)
    else:
        print(report.render(), file=out)
    return EXIT_OK if report.clean else EXIT_VIOLATION


def cmd_bigcell(args, out, err) -> int:
    return _evaluate_text(f"neighbors({args.M}, {args.bound})", args.json, out, err)


def cmd_divisors(args, out, err) -> int:
    text = f"divisors({' '.join(args.supernatural)}, {args.bound})"
    if args.check_point:
        text = f"point?({text})"
    return _evaluate_text(text, args.json, out, err)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arithsite", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one expression")
    p.add_argument("expr", nargs="+")

    p = sub.add_parser("repl", parents=[common], help="read expressions, one per line")
    p.add_argument("file", nargs="?", help="batch file (default: stdin)")

    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("suite", help=f"one of {', '.join(laws.SUITES)}, all, gp, table")
    p.add_argument("--cases", type=int)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-gen", type=int)
    p.add_argument("--max-val", type=int)
    p.add_argument("--max-primes", type=int)
    p.add_argument("--mutate", help=f"inject a broken operation ({', '.join(laws.MUTATIONS)})")
    p.add_argument("--primes", help="for gp: comma-separated primes")
    p.add_argument("--members", help="for table: comma-separated sieve literals")
    p.add_argument("--closed-upward", action="store_true", help="for table: declare the family upward closed")

    for name in ("stalk", "sections", "hyperdistance"):
        p = sub.add_parser(name, parents=[common], help=f"the {name} expression form")
        p.add_argument("rest", nargs="+")

    p = sub.add_parser("bigcell", parents=[common], help="big cell queries")
    bsub = p.add_subparsers(dest="bigcell_command", required=True)
    q = bsub.add_parser("neighbors", parents=[common])
    q.add_argument("M", type=int)
    q.add_argument("--bound", type=int, default=50)

    p = sub.add_parser("divisors", parents=[common], help="divisor truncation of a supernatural")
    p.add_argument("supernatural", nargs="+")
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--check-point", action="store_true")
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "eval":
        return cmd_eval(args, out, err)
    if args.command == "repl":
        return cmd_repl(args, out, err, stdin or sys.stdin)
    if args.command == "check":
        return cmd_check(args, out, err)
    if args.command in ("stalk", "sections", "hyperdistance"):
        return cmd_keyword(args, out, err)
    if args.command == "bigcell":
        return cmd_bigcell(args, out, err)
    return cmd_divisors(args, out, err)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
