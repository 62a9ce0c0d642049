"""Command-line front end: ``aaa eval``, ``aaa repl``, ``aaa parse``, ``aaa check``.

Exit codes: 0 success, 1 property failure or false equality, 2 parse or
evaluation error, 64 usage error.  Output is machine-readable when
piped: one canonical text line per value.  When stdout is a terminal,
each element is prefixed by a header line.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .checks import run_suite
from .core import AlgebraContext, AlgebraError
from .exprlang import Env, ExprError, run_program
from .textio import ParseError, parse, serialize

__all__ = ["main"]

HEADER = "free antiassociative algebra element:"

_USAGE_EXIT = 64


class _ArgumentParser(argparse.ArgumentParser):
    """argparse's default error exit is 2; usage errors here are 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="aaa",
        description="Exact arithmetic in the free antiassociative algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p_eval = sub.add_parser("eval", help="evaluate statements from arguments or stdin")
    p_eval.add_argument("exprs", nargs="*", metavar="EXPR", help="';'-separated statements")
    _common_flags(p_eval)

    p_repl = sub.add_parser("repl", help="interactive session")
    _common_flags(p_repl)

    p_parse = sub.add_parser("parse", help="re-emit canonical text read from stdin")
    p_parse.add_argument(
        "--roundtrip",
        action="store_true",
        help="exit nonzero if any input line is not already canonical",
    )

    p_check = sub.add_parser("check", help="run the randomized property suite")
    p_check.add_argument("--trials", type=int, default=1000, help="trials per property")
    _common_flags(p_check)
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--k",
        default="-1",
        metavar="RAT",
        help="associativity constant K in a(bc) = K*(ab)c (rational, default -1; "
        "write --k=-3/2 for negative values)",
    )
    p.add_argument("--seed", default=None, metavar="N", help="base seed for raaa()")


def _resolve_k(parser: _ArgumentParser, text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        parser.error(f"invalid rational for --k: {text!r}")


def _resolve_seed(parser: _ArgumentParser, value) -> int:
    raw = value if value is not None else os.environ.get("AAA_SEED")
    if raw is None:
        return int.from_bytes(os.urandom(8), "big")
    try:
        return int(raw)
    except ValueError:
        parser.error(f"invalid seed: {raw!r}")


def _print_value(value, tty: bool) -> None:
    if isinstance(value, bool):
        print("true" if value else "false")
        return
    if tty:
        print(HEADER)
    print(serialize(value))


def _run_line(src: str, env: Env, lineno: int, tty: bool):
    """Run one input line; returns (ok, any_false_equality)."""
    try:
        results = run_program(src, env)
    except ExprError as exc:
        print(f"line {lineno}: col {exc.pos}: {exc.message}", file=sys.stderr)
        return False, False
    except AlgebraError as exc:
        print(f"line {lineno}: {exc}", file=sys.stderr)
        return False, False
    any_false = False
    for value in results:
        if value is None:
            continue
        if value is False:
            any_false = True
        _print_value(value, tty)
    return True, any_false


def _cmd_eval(parser: _ArgumentParser, args) -> int:
    env = Env(
        context=AlgebraContext(_resolve_k(parser, args.k)),
        seed=_resolve_seed(parser, args.seed),
    )
    tty = sys.stdout.isatty()
    if args.exprs:
        lines = list(enumerate(args.exprs, 1))
    else:
        lines = [(n, raw.rstrip("\n")) for n, raw in enumerate(sys.stdin, 1)]
    status = 0
    for lineno, src in lines:
        if not src.strip():
            continue
        ok, any_false = _run_line(src, env, lineno, tty)
        if not ok:
            return 2
        if any_false:
            status = 1
    return status


def _cmd_repl(parser: _ArgumentParser, args) -> int:
    try:
        import readline  # noqa: F401  (line editing when available)
    except ImportError:
        pass
    env = Env(
        context=AlgebraContext(_resolve_k(parser, args.k)),
        seed=_resolve_seed(parser, args.seed),
    )
    interactive = sys.stdin.isatty()
    tty = sys.stdout.isatty()
    prompt = "aaa> " if interactive else ""
    if interactive:
        print("type :quit to leave, :k RAT for a fresh context, :seed N to reseed")
    lineno = 0
    while True:
        try:
            line = input(prompt)
        except EOFError:
            break
        except KeyboardInterrupt:
            print()
            continue
        lineno += 1
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            command, _, rest = line.partition(" ")
            rest = rest.strip()
            if command in (":quit", ":q"):
                break
            if command == ":k":
                try:
                    env = Env(context=AlgebraContext(Fraction(rest)), seed=env.seed)
                except (ValueError, ZeroDivisionError):
                    print(f"invalid rational for :k: {rest!r}", file=sys.stderr)
                continue
            if command == ":seed":
                try:
                    env.reseed(int(rest))
                except ValueError:
                    print(f"invalid seed: {rest!r}", file=sys.stderr)
                continue
            print(f"unknown command {command!r}", file=sys.stderr)
            continue
        _run_line(line, env, lineno, tty)
    return 0


def _cmd_parse(args) -> int:
    status = 0
    for lineno, raw in enumerate(sys.stdin, 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        try:
            element = parse(line)
        except ParseError as exc:
            print(f"line {lineno}: {exc.message}", file=sys.stderr)
            return 2
        out = serialize(element)
        print(out)
        if args.roundtrip and out != line:
            status = 1
    return status


def _cmd_check(parser: _ArgumentParser, args) -> int:
    if args.trials < 0:
        parser.error("--trials must be >= 0")
    k = _resolve_k(parser, args.k)
    seed = _resolve_seed(parser, args.seed)
    print(f"seed: {seed}")
    reports = run_suite(k=k, trials=args.trials, seed=seed)
    for report in reports:
        print(f"{report.name}: {report.passed}/{report.trials}")
        if report.counterexample:
            print(f"  counterexample: {report.counterexample}")
    ok = sum(1 for r in reports if r.ok)
    print(f"{ok}/{len(reports)} properties passed ({args.trials} trials each)")
    return 0 if ok == len(reports) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(parser, args)
    if args.command == "repl":
        return _cmd_repl(parser, args)
    if args.command == "parse":
        return _cmd_parse(args)
    return _cmd_check(parser, args)
