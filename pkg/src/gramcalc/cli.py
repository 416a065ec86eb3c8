"""Command-line front end.

Subcommands: derive, seq, verify, multifactorial, serve.  Results go to
stdout (text or JSON per --format); diagnostics go to stderr.  Exit
codes are stable: 0 success or all checks passed, 1 verification
failure, 2 usage/parse/domain error, 3 exponent overflow, 4 non-monomial
sequence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .derivative import NonMonomialSequenceError
from .grammar import ParseError
from .integers import multifactorial
from .ops import compute_derivative, compute_sequence
from .poly import ExponentOverflowError, PolynomialError
from .verify import Report, run_suite, suite_names

__all__ = ["main"]

EXIT_SUCCESS = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_NON_MONOMIAL = 4


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {value}")
    return value


def _load_grammar_arg(value: str) -> str:
    """Inline grammar text, or the contents of a file when given @path."""
    if not value.startswith("@"):
        return value
    path = value[1:]
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read grammar file {path!r}: {exc}") from exc


def _styled(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramcalc",
        description="Exact derivative calculus over substitution grammars.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    derive_p = sub.add_parser("derive", help="apply the derivative operator")
    derive_p.add_argument(
        "--grammar", required=True, help="grammar text, or @path to read a file"
    )
    derive_p.add_argument("--expr", required=True, help="expression to derive")
    derive_p.add_argument(
        "--n", type=_nonnegative_int, default=1, help="how many times to apply"
    )
    derive_p.add_argument(
        "--word", help="operator word for matrix grammars, e.g. 12 or 1,2"
    )
    _add_format(derive_p)
    derive_p.set_defaults(func=_cmd_derive)

    seq_p = sub.add_parser("seq", help="emit the derivative coefficient sequence")
    seq_p.add_argument(
        "--grammar", required=True, help="grammar text, or @path to read a file"
    )
    seq_p.add_argument("--expr", required=True, help="starting expression")
    seq_p.add_argument("--n-max", type=_nonnegative_int, required=True)
    seq_p.add_argument(
        "--word", help="operator word for matrix grammars, e.g. 12 or 1,2"
    )
    _add_format(seq_p)
    seq_p.set_defaults(func=_cmd_seq)

    verify_p = sub.add_parser("verify", help="run an identity verification suite")
    verify_p.add_argument("suite", help=f"one of: {', '.join(suite_names())}")
    verify_p.add_argument(
        "params", nargs="*", metavar="key=value", help="suite parameter overrides"
    )
    _add_format(verify_p)
    verify_p.set_defaults(func=_cmd_verify)

    multi_p = sub.add_parser("multifactorial", help="exact step-r factorial n!_r")
    multi_p.add_argument("n", type=int, help="argument (use -- before negatives)")
    multi_p.add_argument("r", type=int, help="step size, >= 1")
    _add_format(multi_p)
    multi_p.set_defaults(func=_cmd_multifactorial)

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.set_defaults(func=_cmd_serve)

    return parser


def _cmd_derive(args: argparse.Namespace) -> int:
    grammar = _load_grammar_arg(args.grammar)
    result = compute_derivative(grammar, args.expr, args.n, args.word)
    if args.format == "json":
        print(json.dumps(result.to_json()))
    else:
        print(result.text())
    return EXIT_SUCCESS


def _cmd_seq(args: argparse.Namespace) -> int:
    grammar = _load_grammar_arg(args.grammar)
    items = compute_sequence(grammar, args.expr, args.n_max, args.word)
    if args.format == "json":
        payload = [
            {"n": n, "coeff": str(coeff), "monomial": dict(mono.exps)}
            for n, coeff, mono in items
        ]
        print(json.dumps(payload))
    else:
        for n, coeff, mono in items:
            print(f"{n} {coeff} {mono.text()}")
    return EXIT_SUCCESS


def _parse_suite_params(pairs: list[str]) -> dict[str, str]:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"expected key=value, got {pair!r}")
        params[key] = value
    return params


def _print_report(report: Report) -> None:
    print(f"suite: {report.suite}")
    print(f"passed: {report.passed}")
    print(f"failed: {report.failed}")
    for case in report.failures():
        print(_styled(f"FAIL {json.dumps(case.params)}", "31"))
        print(f"  lhs: {case.lhs}")
        print(f"  rhs: {case.rhs}")
    if report.all_passed:
        print(_styled("result: ok", "32"))
    else:
        print(_styled("result: FAILED", "31"))


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, _parse_suite_params(args.params))
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        _print_report(report)
    return EXIT_SUCCESS if report.all_passed else EXIT_VERIFY_FAILED


def _cmd_multifactorial(args: argparse.Namespace) -> int:
    value = multifactorial(args.n, args.r)
    if args.format == "json":
        print(json.dumps({"n": args.n, "r": args.r, "value": str(value)}))
    else:
        print(value)
    return EXIT_SUCCESS


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_SUCCESS


def _fail(exc: Exception, code: int) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExponentOverflowError as exc:
        return _fail(exc, EXIT_OVERFLOW)
    except NonMonomialSequenceError as exc:
        return _fail(exc, EXIT_NON_MONOMIAL)
    except (ParseError, PolynomialError, ValueError, IndexError, ZeroDivisionError) as exc:
        return _fail(exc, EXIT_USAGE)
