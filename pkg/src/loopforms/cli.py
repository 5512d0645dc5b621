"""Command-line surface: expansion, membership, criteria, verification suites.

Expression grammar for polynomial arguments (member/expand --expr):

    atom    := h(r) | hhat(k) | hbar(k) | hcheck(k) | htilde(k) | hhatc(k)
             | RATIONAL | '(' expr ')' | '-' atom
    factor  := atom ('^' INT)?
    term    := factor ('*' factor)*
    expr    := term (('+' | '-') term)*

h(r) is the degree-r generator; the named families are the exponential
coefficients (hhatc is the doubled-power family, sequence 2^(r-1)).
Rationals are written p/q.  Coefficient output is canonical text: monomials
sorted by (degree, partition), rational coefficients as p/q.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import a22, a4, arithmetic, forms, identities, sequences, series
from .polynomial import GradedPolynomial
from .report import SUITES, RunConfig, run_suites
from .sequences import CPOW2, HALF_ONE, HALF_ONE2, ONE, SequenceSpec, one_m
from .series import expand_hat_series, named_series

_FUNCS = {
    "h": lambda r: GradedPolynomial.gen(r),
    "hhat": lambda k: expand_hat_series(ONE, k)[k],
    "hbar": lambda k: expand_hat_series(HALF_ONE2, k)[k],
    "hcheck": lambda k: expand_hat_series(HALF_ONE, k)[k],
    "htilde": lambda k: named_series("TILDE", k)[k],
    "hhatc": lambda k: expand_hat_series(CPOW2, k)[k],
}

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([a-z]+)|([()^*/+-]))")


class ExprError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"parse error at position {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num:
            out.append(("num", Fraction(num)))
        elif name:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.pos]
        if kind and tok[0] != kind or (value is not None and tok[1] != value):
            raise ExprError(f"parse error at token {self.pos}: expected {value or kind}, got {tok}")
        self.pos += 1
        return tok

    def parse(self) -> GradedPolynomial:
        out = self.expr()
        if self.peek()[0] != "end":
            raise ExprError(f"parse error: trailing input at token {self.pos}")
        return out

    def expr(self) -> GradedPolynomial:
        out = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take("op")[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> GradedPolynomial:
        out = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take("op")[1]
            if op == "*":
                out = out * self.factor()
            else:
                kind, val = self.take("num")
                if val == 0:
                    raise ExprError("division by zero")
                out = out.scale(Fraction(1) / val)
        return out

    def factor(self) -> GradedPolynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take("op", "^")
            kind, val = self.take("num")
            if val.denominator != 1 or val < 0:
                raise ExprError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self) -> GradedPolynomial:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            # allow "1/2" followed by nothing or an operator; plain rational scalar
            return GradedPolynomial.constant(val)
        if kind == "op" and val == "-":
            self.take()
            return -self.atom()
        if kind == "op" and val == "(":
            self.take()
            out = self.expr()
            self.take("op", ")")
            return out
        if kind == "name":
            self.take()
            if val not in _FUNCS:
                raise ExprError(f"unknown generator {val!r}")
            self.take("op", "(")
            _, arg = self.take("num")
            if arg.denominator != 1 or arg < 1:
                raise ExprError("generator index must be a positive integer")
            self.take("op", ")")
            return _FUNCS[val](int(arg))
        raise ExprError(f"parse error at token {self.pos}")


def parse_expression(text: str) -> GradedPolynomial:
    return _Parser(text).parse()


_SEQ_NAMES = {
    "one": ONE,
    "half_one": HALF_ONE,
    "half_one2": HALF_ONE2,
    "cpow2": CPOW2,
}


def _sequence_from_arg(arg: str) -> SequenceSpec:
    low = arg.lower()
    if low in _SEQ_NAMES:
        return _SEQ_NAMES[low]
    m = re.fullmatch(r"one_m\((\d+)\)", low)
    if m:
        return one_m(int(m.group(1)))
    if low.startswith("table:"):
        return sequences.table([Fraction(v) for v in low[6:].split(",")])
    raise SystemExit(f"unknown sequence {arg!r}")


_FORM_ARGS = {"sym": "SYMMETRIC", "mix": "MIXED", "check": "HALF"}


def cmd_expand(args) -> int:
    if args.series:
        s = named_series(args.series.upper(), args.n)
        print(f"{args.series.lower()}_{args.n} = {s[args.n].to_text()}")
    elif args.seq:
        spec = _sequence_from_arg(args.seq)
        s = expand_hat_series(spec, args.n)
        print(s[args.n].to_text())
    elif args.expr:
        print(parse_expression(args.expr).to_text())
    else:
        raise SystemExit("expand needs --series, --seq or --expr")
    return 0


def cmd_member(args) -> int:
    try:
        poly = parse_expression(args.expr)
    except ExprError as exc:
        raise SystemExit(str(exc))
    form = _FORM_ARGS.get(args.form)
    if form is None:
        raise SystemExit(f"unknown form {args.form!r} (use sym/mix/check)")
    verdict = forms.membership(poly, form)
    if verdict:
        print("IN")
        return 0
    print(f"OUT witness={verdict.witness}")
    return 0


def cmd_basis(args) -> int:
    kind = args.kind.upper()
    if kind not in forms.BASIS_KINDS:
        raise SystemExit(f"unknown basis kind {args.kind!r}")
    for b in forms.enumerate_basis(kind, args.degree):
        print(f"{b.label()}: {b.poly.to_text()}")
    return 0


def cmd_criterion(args) -> int:
    spec = _sequence_from_arg(args.seq)
    checks = {
        "gauss": lambda: arithmetic.check_gauss_congruences(spec, args.bound),
        "hat": lambda: arithmetic.hat_criterion(spec, args.bound),
        "bar": lambda: arithmetic.bar_criterion(spec, args.bound),
        "mix": lambda: arithmetic.mix_criterion(spec, args.bound),
        "half": lambda: arithmetic.check_criterion(spec, args.bound),
    }
    if args.which not in checks:
        raise SystemExit(f"unknown criterion {args.which!r}")
    try:
        verdict = checks[args.which]()
    except ValueError as exc:
        raise SystemExit(str(exc))
    if verdict:
        print(f"PASS (bound {args.bound})")
        return 0
    print(f"FAIL witness={verdict.witness}")
    return 1


def cmd_lie_check(args) -> int:
    window = args.window
    if args.algebra == "a22":
        checks = [a22.jacobi_exhaust(window)] + [
            a22.check_morphism(m, window) for m in a22.MORPHISMS
        ]
    elif args.algebra == "a4":
        checks = [
            a4.realization_gate(window),
            a4.verify_relations(window),
            a4.verify_technical_identities(window),
            a4.verify_tau_formulas(window),
            a4.check_root_vector_weights(window),
            a4.check_embedding("PSI_BAR", min(window, 3)),
            a4.check_embedding("PSI_TILDE", min(window, 3)),
        ]
    else:
        raise SystemExit("algebra must be a22 or a4")
    ok = True
    for v in checks:
        print(("PASS " if v else "FAIL ") + v.detail)
        ok = ok and bool(v)
    return 0 if ok else 1


def cmd_uea_verify(args) -> int:
    names = list(identities.CATALOG) if args.identity == "all" else [args.identity]
    ok = True
    for name in names:
        if name not in identities.CATALOG:
            raise SystemExit(f"unknown identity {name!r}")
        results = identities.run_identity(name, args.n)
        good = all(bool(r) for r in results)
        ok = ok and good
        readings = {k: v for r in results for k, v in r.readings.items()}
        extra = f" readings={readings}" if readings and args.verbose else ""
        print(f"{'PASS' if good else 'FAIL'} {name} ({len(results)} instances){extra}")
        if not good:
            bad = next(r for r in results if not r)
            print(f"  first failure: params={bad.params} mismatch={bad.mismatch}")
    return 0 if ok else 1


def _load_config(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise SystemExit(f"bad config line: {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            out[key] = value
    return out


def cmd_suite(args) -> int:
    cfg = RunConfig()
    if args.config:
        raw = _load_config(args.config)
        if "max_degree" in raw:
            cfg.max_degree = int(raw["max_degree"])
        if "uea_truncation" in raw:
            cfg.uea_truncation = int(raw["uea_truncation"])
        if "lie_window" in raw:
            cfg.lie_window = int(raw["lie_window"])
        if "suites" in raw:
            cfg.suites = tuple(s.strip() for s in raw["suites"].split(","))
    if args.max_degree is not None:
        cfg.max_degree = args.max_degree
    if args.uea_truncation is not None:
        cfg.uea_truncation = args.uea_truncation
    if args.lie_window is not None:
        cfg.lie_window = args.lie_window
    if args.jobs:
        cfg.jobs = args.jobs
    names = args.names.split(",") if args.names else list(SUITES)
    cfg.suites = tuple(SUITES) if "all" in names else tuple(names)
    try:
        cfg.validate()
    except ValueError as exc:
        raise SystemExit(str(exc))
    report = run_suites(cfg)
    text = report.render()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    summary = report.to_json()["summary"]
    print(f"# {summary['pass']}/{summary['total']} checks passed", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopforms",
        description="Exact verification of integral forms of twisted loop algebras",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print exact series coefficients")
    p.add_argument("--series", choices=["hat", "bar", "check", "tilde"])
    p.add_argument("--seq", help="one | half_one | half_one2 | cpow2 | one_m(M) | table:v1,v2,...")
    p.add_argument("--expr", help="polynomial expression")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("member", help="integral-form membership of an expression")
    p.add_argument("--form", required=True, help="sym | mix | check")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("basis", help="list a degree-graded basis")
    p.add_argument("--kind", required=True, help="|".join(forms.BASIS_KINDS).lower())
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("criterion", help="divisibility criteria for a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--which", default="gauss", help="gauss | hat | bar | mix | half")
    p.add_argument("--bound", type=int, default=12)
    p.set_defaults(fn=cmd_criterion)

    p = sub.add_parser("lie-check", help="structure-constant verification")
    p.add_argument("--algebra", required=True, help="a22 | a4")
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(fn=cmd_lie_check)

    p = sub.add_parser("uea-verify", help="straightening identity catalog")
    p.add_argument("--identity", default="all")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_uea_verify)

    p = sub.add_parser("suite", help="run acceptance suites, emit a JSON report")
    p.add_argument("--names", help="comma-separated: " + ",".join(SUITES) + ",all")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--uea-truncation", type=int, default=None)
    p.add_argument("--lie-window", type=int, default=None)
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
