"""Command-line front end.

Thin adapters only: every command parses arguments, calls the library, and
formats the result.  Text goes to stdout, errors to stderr; exit status is
0 on success, 1 on a domain error (bad numeral, non-regular reciprocal,
missing constant, ...), 2 on a usage error.

Commands::

    igigub eval '0;4,48 * 6;0 * 6;0'          exact sexagesimal arithmetic
    igigub sqrt 21 --steps 5                   root iteration trace
    igigub recip 0;0,20                        exact reciprocal
    igigub solve 'sqrt(6)/2' '1/2'             x**2 + p x = q by takiltum
    igigub coeff two-barley --profile coarse   a figure coefficient
    igigub verify all                          check attested records
    igigub report --json                       the full reproduction bundle
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import figures, procedures, report, tablet
from .errors import DivisionByZero, IgigubError, MalformedNumeral
from .sexagesimal import FloatingSexagesimal, Sexagesimal, parse, rational_to_decimal
from .surd import SurdValue, surd_sqrt

Q = Fraction


# --- tiny expression parsers ------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>[0-9][0-9,;]*)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("×", "*")
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            tail = text[pos:].strip()
            raise MalformedNumeral(f"unexpected input at {tail[:12]!r}")
        pos = match.end()
        for kind in ("num", "name", "op"):
            value = match.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
        else:
            break  # trailing whitespace
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()
        if token is None:
            raise MalformedNumeral("unexpected end of expression")
        self.pos += 1
        return token

    def expect_op(self, op: str):
        token = self.take()
        if token != ("op", op):
            raise MalformedNumeral(f"expected {op!r}, found {token[1]!r}")

    def done(self):
        token = self.peek()
        if token is not None:
            raise MalformedNumeral(f"unexpected trailing token {token[1]!r}")


def _eval_expression(text: str, exponent: int | None) -> Sexagesimal:
    """Infix +, -, * (or x) and recip(...) over sexagesimal literals."""
    cursor = _Cursor(text)

    def literal(token_text: str) -> Sexagesimal:
        value = parse(token_text)
        if isinstance(value, FloatingSexagesimal):
            if exponent is None:
                raise MalformedNumeral(
                    f"{token_text!r} is floating; add ';' or pass --exponent")
            return value.place_value(exponent)
        return value

    def factor() -> Sexagesimal:
        kind, text_ = cursor.take()
        if kind == "num":
            return literal(text_)
        if kind == "name" and text_ == "recip":
            cursor.expect_op("(")
            inner = expression()
            cursor.expect_op(")")
            return inner.reciprocal()
        if (kind, text_) == ("op", "("):
            inner = expression()
            cursor.expect_op(")")
            return inner
        if (kind, text_) == ("op", "-"):
            return -factor()
        raise MalformedNumeral(f"unexpected token {text_!r}")

    def term() -> Sexagesimal:
        value = factor()
        while cursor.peek() == ("op", "*"):
            cursor.take()
            value = value * factor()
        return value

    def expression() -> Sexagesimal:
        value = term()
        while cursor.peek() in (("op", "+"), ("op", "-")):
            _, op = cursor.take()
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    result = expression()
    cursor.done()
    return result


def _surd_expression(text: str) -> SurdValue:
    """Infix +, -, *, / and sqrt(...) over integer literals."""
    cursor = _Cursor(text)

    def factor() -> SurdValue:
        kind, text_ = cursor.take()
        if kind == "num":
            if "," in text_ or ";" in text_:
                raise MalformedNumeral(
                    f"{text_!r}: surd literals use integers and fractions, "
                    "not sexagesimal digits")
            return SurdValue.from_rational(int(text_))
        if kind == "name" and text_ == "sqrt":
            cursor.expect_op("(")
            inner = expression()
            cursor.expect_op(")")
            if not inner.is_rational():
                raise MalformedNumeral("sqrt needs a rational argument")
            return surd_sqrt(inner.rational)
        if (kind, text_) == ("op", "("):
            inner = expression()
            cursor.expect_op(")")
            return inner
        if (kind, text_) == ("op", "-"):
            return -factor()
        raise MalformedNumeral(f"unexpected token {text_!r}")

    def term() -> SurdValue:
        value = factor()
        while cursor.peek() in (("op", "*"), ("op", "/")):
            _, op = cursor.take()
            rhs = factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_rational():
                    raise MalformedNumeral("cannot divide by an irrational value")
                if rhs.rational == 0:
                    raise DivisionByZero("division by zero in expression")
                value = value.scale(1 / rhs.rational)
        return value

    def expression() -> SurdValue:
        value = term()
        while cursor.peek() in (("op", "+"), ("op", "-")):
            _, op = cursor.take()
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    result = expression()
    cursor.done()
    return result


def _resolve_sqrt21(text: str) -> Fraction:
    """a5, back-solved, or a sexagesimal literal."""
    if text == "a5":
        return procedures.babylonian_sqrt(Q(21), 5).final()
    if text == "back-solved":
        return tablet.implied_sqrt21_interval()[1]
    value = parse(text)
    if isinstance(value, FloatingSexagesimal):
        raise MalformedNumeral(
            f"--sqrt21 literal {text!r} is floating; add a ';' radix point")
    return value.to_rational()


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)


# --- subcommands ------------------------------------------------------------


def _cmd_eval(args) -> int:
    result = _eval_expression(" ".join(args.expression), args.exponent)
    _emit(args, {"result": str(result), "rational": str(result.to_rational())},
          str(result))
    return 0


def _parse_radicand(text: str) -> Fraction:
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedNumeral(f"bad radicand {text!r}: {exc}") from None


def _trace_lines(trace_dict: dict) -> list[str]:
    lines = [f"N = {trace_dict['N']}"]
    for step in trace_dict["steps"]:
        extra = f", working {step['working']}" if "working" in step else ""
        lines.append(
            f"a{step['k']} ({step['kind']}): {step['exact']} = "
            f"{step['sexagesimal']} ({step['side']} the root{extra})")
    return lines


def _cmd_sqrt(args) -> int:
    n = _parse_radicand(args.n)
    if args.trunc is not None:
        trace = procedures.truncated_iteration(n, args.steps, args.trunc)
    else:
        trace = procedures.babylonian_sqrt(n, args.steps)
    payload = trace.to_json_dict(places=args.places)
    _emit(args, payload, "\n".join(_trace_lines(payload)))
    return 0


def _cmd_recip(args) -> int:
    value = parse(args.numeral)
    if isinstance(value, FloatingSexagesimal):
        raise MalformedNumeral(
            f"{args.numeral!r} is floating; add a ';' radix point")
    result = value.reciprocal()
    _emit(args, {"input": str(value), "reciprocal": str(result),
                 "rational": str(result.to_rational())}, str(result))
    return 0


def _cmd_solve(args) -> int:
    p = _surd_expression(args.p)
    q = _surd_expression(args.q)
    solution = procedures.complete_square(p, q)
    payload = {
        "p": str(solution.p),
        "q": str(solution.q),
        "half_coefficient": str(solution.half_coefficient),
        "completed_square": str(solution.completed_square),
        "discriminant_root": str(solution.discriminant_root),
        "root": str(solution.root),
    }
    text = "\n".join([
        f"equation: x**2 + ({payload['p']})*x = {payload['q']}",
        f"completed square: (x + {payload['half_coefficient']})**2 "
        f"= {payload['completed_square']}",
        f"root: x = {payload['root']}",
    ])
    _emit(args, payload, text)
    return 0


def _cmd_coeff(args) -> int:
    profile = figures.PROFILES[args.profile]
    if args.sqrt21 is not None:
        profile = profile.with_root(21, _resolve_sqrt21(args.sqrt21))
    figure = figures.Figure(figures.FIGURE_IDS[args.figure])
    numeral, exact = figures.babylonian_area(figure, profile, args.places)
    payload = {
        "figure": args.figure,
        "profile": profile.name,
        "places": args.places,
        "sexagesimal": str(numeral),
        "rational": str(figures.babylonian_rational(figure, profile)),
        "exact": exact,
    }
    _emit(args, payload, str(numeral))
    return 0


def _verify_text(result: tablet.VerificationReport) -> str:
    magnitude, _ = Sexagesimal.from_rational(
        abs(result.discrepancy), max(6, len(result.attested.fractional_digits)),
        "truncate")
    if result.discrepancy == 0:
        discrepancy = "0;0"
    else:
        direction = "below" if result.discrepancy < 0 else "above"
        discrepancy = f"{magnitude} ({direction} attested)"
    return (
        f"{result.record_id}: attested {result.attested}, "
        f"reconstruction {result.reconstruction} "
        f"(exact {result.reconstruction_exact}), "
        f"verdict {result.verdict}, discrepancy {discrepancy}\n"
        f"  {result.notes}")


def _cmd_verify(args) -> int:
    ids = args.ids or ["all"]
    if ids == ["all"]:
        ids = [record.id for record in tablet.builtin_records()]
    profile = figures.PROFILES[args.profile] if args.profile else None
    options = tablet.ReconstructionOptions(
        profile=profile,
        sqrt21=_resolve_sqrt21(args.sqrt21),
        iteration_steps=args.steps,
    )
    results = []
    for record_id in ids:
        if record_id not in tablet.RECORDS:
            known = ", ".join(sorted(tablet.RECORDS))
            raise MalformedNumeral(f"unknown record {record_id!r} (known: {known})")
        results.append(tablet.verify(tablet.RECORDS[record_id], options))
    payload = {"verifications": [r.to_json_dict() for r in results]}
    _emit(args, payload, "\n".join(_verify_text(r) for r in results))
    return 0


def _cmd_report(args) -> int:
    sys.stdout.write(report.emit_report("json" if args.json else "text"))
    return 0


# --- wiring -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igigub",
        description="Exact sexagesimal arithmetic and Babylonian geometric "
                    "coefficient reconstruction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("eval", help="evaluate a sexagesimal expression")
    p.add_argument("expression", nargs="+",
                   help="expression over numerals with + - * and recip()")
    p.add_argument("--exponent", type=int, default=None,
                   help="place value exponent for floating literals")
    add_json(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sqrt", help="run the root iteration")
    p.add_argument("n", help="radicand, an integer or p/q")
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--trunc", type=int, default=None, metavar="PLACES",
                   help="truncate every step to PLACES fractional places")
    p.add_argument("--places", type=int, default=4,
                   help="fractional places for display numerals")
    add_json(p)
    p.set_defaults(func=_cmd_sqrt)

    p = sub.add_parser("recip", help="exact base-60 reciprocal")
    p.add_argument("numeral")
    add_json(p)
    p.set_defaults(func=_cmd_recip)

    p = sub.add_parser("solve", help="solve x**2 + p*x = q over surds")
    p.add_argument("p", help="linear coefficient, e.g. 'sqrt(6)/2'")
    p.add_argument("q", help="right-hand side, e.g. '1/2'")
    add_json(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("coeff", help="a figure's babylonian coefficient")
    p.add_argument("figure", choices=sorted(figures.FIGURE_IDS))
    p.add_argument("--profile", choices=sorted(figures.PROFILES), default="coarse")
    p.add_argument("--places", type=int, default=4)
    p.add_argument("--sqrt21", default=None,
                   help="sqrt(21) substitute: a5, back-solved, or a numeral")
    add_json(p)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("verify", help="verify attested records")
    p.add_argument("ids", nargs="*", metavar="ID",
                   help="record ids, or 'all' (default)")
    p.add_argument("--profile", choices=sorted(figures.PROFILES), default=None,
                   help="override each record's default profile")
    p.add_argument("--sqrt21", default="a5",
                   help="sqrt(21) substitute for TMS3.6 (default a5)")
    p.add_argument("--steps", type=int, default=5,
                   help="iteration steps for the sqrt(2) record")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="emit the full reproduction bundle")
    add_json(p)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except IgigubError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run():
    raise SystemExit(main())
