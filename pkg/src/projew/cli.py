"""Command-line front end.

Exit codes: 0 computed (whatever the verdict), 1 ``check-solution`` found
a nonzero residual, 2 input error, 3 pole at the requested point,
4 symbolic output over the term budget.
"""
import argparse
import json
import sys
from fractions import Fraction

from .exactmath import PoleError, TermBudgetExceeded
from .exprparse import ParseError, StructureError, parse_expr, parse_structure
from .geometry import TensorField
from .obstruction import analyze
from .pipeline import pew_residual
from .report import fmt, to_dict, to_json, to_text

EXIT_OK = 0
EXIT_NONZERO_RESIDUAL = 1
EXIT_INPUT = 2
EXIT_POLE = 3
EXIT_BUDGET = 4


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}")


def _positive_int(text):
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="projew",
        description="Exact invariants and pEW obstructions for a projective structure on a 2D chart.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="structure file (JSON)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("invariants", help="print rho, phi, ell, Y and W")
    common(p)
    p.add_argument("--at", nargs=2, type=_rational, metavar=("X", "Y"))

    p = sub.add_parser("obstruction", help="compute the obstructions and a verdict")
    common(p)
    p.add_argument("--at", nargs=2, type=_rational, metavar=("X", "Y"))
    p.add_argument("--symbolic", action="store_true", help="full rational-function output")
    p.add_argument("--max-terms", type=_positive_int, default=100000)

    p = sub.add_parser("check-solution", help="evaluate the pEW residual for a given alpha")
    common(p)
    p.add_argument("--alpha", nargs=2, required=True, metavar=("EXPR1", "EXPR2"))
    return parser


def _load(path):
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())


def _emit(text, out):
    out.write(text)


def _cmd_invariants(args, out):
    conn = _load(args.file)
    at = tuple(args.at) if args.at else None
    report = analyze(conn, at=at)
    if args.format == "json":
        d = to_dict(report)
        d.pop("payload")
        d.pop("verdict")
        _emit(json.dumps(d, indent=2, ensure_ascii=False) + "\n", out)
    else:
        _emit(to_text(report, sections=()), out)
    return EXIT_OK


def _cmd_obstruction(args, out):
    conn = _load(args.file)
    at = tuple(args.at) if args.at else None
    report = analyze(conn, at=at, symbolic=args.symbolic, max_terms=args.max_terms)
    _emit(to_json(report) if args.format == "json" else to_text(report), out)
    return EXIT_OK


def _cmd_check_solution(args, out):
    conn = _load(args.file)
    alpha = TensorField.covector([parse_expr(e, conn.variables) for e in args.alpha], conn.variables)
    res = pew_residual(conn, alpha)
    comps = {"11": res[0, 0], "12": res[0, 1], "22": res[1, 1]}
    solved = all(v.is_zero() for v in comps.values())
    if args.format == "json":
        _emit(json.dumps({"residual": {k: fmt(v) for k, v in comps.items()}, "solution": solved},
                         indent=2) + "\n", out)
    else:
        for k, v in comps.items():
            _emit(f"residual_{k} = {fmt(v)}\n", out)
        _emit(f"solution: {'yes' if solved else 'no'}\n", out)
    return EXIT_OK if solved else EXIT_NONZERO_RESIDUAL


_COMMANDS = {
    "invariants": _cmd_invariants,
    "obstruction": _cmd_obstruction,
    "check-solution": _cmd_check_solution,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_INPUT
    except (StructureError, OSError) as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except PoleError as exc:
        err.write(f"pole at point: {exc}\n")
        return EXIT_POLE
    except TermBudgetExceeded as exc:
        err.write(f"term budget exceeded: {exc}\n")
        return EXIT_BUDGET


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
