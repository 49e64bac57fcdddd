"""Command-line interface: expression parser, canonical printer, JSON.

Grammar for element expressions (whitespace is free):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor
              | rational
              | ('X' | 'Y') ('^' natural)?
              | '(' expr ')' ('^' natural)?
    rational := natural ('/' natural)?

Juxtaposition is not multiplication; '*' is mandatory.  Exponents are
nonnegative integer literals.

The canonical printer sorts terms by total degree descending, then X
exponent descending, elides unit coefficients and zero exponents, and
prints 0 for the zero element; parsing the result reproduces the element.
Rational coefficients travel through JSON as exact "num/den" strings.

Exit codes: 0 success, 1 when the computation reports false or empty,
2 for usage, syntax, or contract errors, 3 for an internal inconsistency
(a guaranteed identity failed, which is always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .centralizer import (
    CentralizerBasis,
    ComponentKind,
    centralizer_basis,
    decompose,
    homogeneous_centralizer_component,
    ray_degree,
)
from .core import WeylElement, X, Y, commutator, mul, power
from .derivation import (
    ElementaryAutomorphism,
    derivation_report,
    dixmier_pair,
    dixmier_pair_from_script,
    is_dixmier_pair,
)
from .errors import (
    ExprSyntaxError,
    InternalInconsistencyError,
    MalformedInputError,
    WeylError,
)
from .graded import GradedForm, XYPolynomial, from_graded_form, homogeneous_components, to_graded_form
from .leading import LeadingData, leading_data
from .oracle import oracle_equal, oracle_mul_check

# ---------------------------------------------------------------------------
# tokenizer and parser


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, NAME, OP, EOF
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("NUMBER", text[start:i], line, col))
            col += i - start
            continue
        if ch in "XY":
            tokens.append(_Token("NAME", ch, line, col))
            i += 1
            col += 1
            continue
        if ch in "+-*^()/":
            tokens.append(_Token("OP", ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != op:
            raise ExprSyntaxError(f"expected {op!r}", tok.line, tok.column)
        return self.take()

    def parse(self) -> WeylElement:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ExprSyntaxError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return value

    def expr(self) -> WeylElement:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> WeylElement:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.take()
                value = mul(value, self.factor())
            else:
                return value

    def factor(self) -> WeylElement:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.take()
            return -self.factor()
        if tok.kind == "NUMBER":
            self.take()
            num = int(tok.text)
            if self.peek().kind == "OP" and self.peek().text == "/":
                self.take()
                den_tok = self.peek()
                if den_tok.kind != "NUMBER":
                    raise ExprSyntaxError("expected a denominator", den_tok.line, den_tok.column)
                self.take()
                den = int(den_tok.text)
                if den == 0:
                    raise MalformedInputError(
                        f"zero denominator at line {den_tok.line}, column {den_tok.column}"
                    )
                return WeylElement([(0, 0, Fraction(num, den))])
            return WeylElement([(0, 0, num)])
        if tok.kind == "NAME":
            self.take()
            base = X if tok.text == "X" else Y
            return power(base, self.exponent())
        if tok.kind == "OP" and tok.text == "(":
            self.take()
            value = self.expr()
            self.expect_op(")")
            return power(value, self.exponent())
        raise ExprSyntaxError(
            f"expected a rational, X, Y, or parenthesis, got {tok.text or 'end of input'!r}",
            tok.line,
            tok.column,
        )

    def exponent(self) -> int:
        tok = self.peek()
        if not (tok.kind == "OP" and tok.text == "^"):
            return 1
        self.take()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            raise MalformedInputError(
                f"negative exponent at line {tok.line}, column {tok.column}"
            )
        if tok.kind != "NUMBER":
            raise ExprSyntaxError("expected a nonnegative integer exponent", tok.line, tok.column)
        self.take()
        return int(tok.text)


def parse_element(text: str) -> WeylElement:
    """Parse the surface syntax into a canonical element."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# canonical printers


def _print_order(terms) -> list:
    return sorted(terms, key=lambda m: (-(m[0] + m[1]), -m[0]))


def _term_body(i: int, j: int, c: Fraction) -> str:
    parts = []
    if c != 1 or (i == 0 and j == 0):
        parts.append(str(c))
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(parts)


def format_element(a: WeylElement) -> str:
    """Canonical text form; parsing it reproduces the element exactly."""
    if not a:
        return "0"
    pieces = []
    for m in _print_order(a.terms):
        c = a.terms[m]
        body = _term_body(m[0], m[1], abs(c))
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def format_xy_polynomial(f: XYPolynomial) -> str:
    if not f:
        return "0"
    pieces = []
    for m in range(f.degree, -1, -1):
        c = f.coefficient(m)
        if not c:
            continue
        parts = []
        if abs(c) != 1 or m == 0:
            parts.append(str(abs(c)))
        if m:
            parts.append("Z" if m == 1 else f"Z^{m}")
        body = "*".join(parts)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def format_graded_form(g: GradedForm) -> str:
    """Render X^j * (f) for grade j >= 0, and (f) * Y^(-j) for j < 0."""
    body = f"({format_xy_polynomial(g.poly)})"
    if g.grade > 0:
        head = "X" if g.grade == 1 else f"X^{g.grade}"
        return f"{head} * {body}"
    if g.grade < 0:
        tail = "Y" if g.grade == -1 else f"Y^{-g.grade}"
        return f"{body} * {tail}"
    return body


# ---------------------------------------------------------------------------
# JSON serialization


def _coeff_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def element_to_json(a: WeylElement) -> dict[str, Any]:
    return {
        "terms": [
            {"i": m[0], "j": m[1], "coeff": _coeff_str(a.terms[m])}
            for m in _print_order(a.terms)
        ]
    }


def leading_to_json(data: LeadingData) -> dict[str, Any]:
    return {
        "diag_degree": data.diag,
        "diag_degree_mirror": data.diag_mirror,
        "weight": {"i": data.weight[0], "j": data.weight[1]},
        "weight_mirror": {"i": data.weight_mirror[0], "j": data.weight_mirror[1]},
        "leading_form": element_to_json(data.form),
        "leading_term": element_to_json(data.term),
        "leading_coeff": _coeff_str(data.coeff),
        "monic": data.monic,
    }


def basis_to_json(basis: CentralizerBasis) -> dict[str, Any]:
    return {
        "element": element_to_json(basis.element),
        "bound": basis.bound,
        "sector": basis.sector,
        "direction": {"i": basis.direction[0], "j": basis.direction[1]},
        "levels": list(basis.levels),
        "level_gcd": basis.level_gcd,
        "period": basis.period,
        "basis": [
            {
                "level": l,
                "ray_degree": basis.ray_degrees[l],
                "element": element_to_json(basis.by_level[l]),
            }
            for l in basis.levels
        ],
        "picks": [
            None
            if pick is None
            else {
                "residue": r,
                "level": basis.pick_levels[r],
                "element": element_to_json(pick),
            }
            for r, pick in enumerate(basis.picks)
        ],
        "truncated": basis.truncated,
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_normalize(args) -> int:
    a = parse_element(args.expr)
    if args.json:
        print(json.dumps(element_to_json(a), indent=2))
    else:
        print(format_element(a))
    return 0


def _cmd_mul(args) -> int:
    print(format_element(mul(parse_element(args.a), parse_element(args.b))))
    return 0


def _cmd_comm(args) -> int:
    print(format_element(commutator(parse_element(args.a), parse_element(args.b))))
    return 0


def _cmd_pow(args) -> int:
    print(format_element(power(parse_element(args.a), args.n)))
    return 0


def _cmd_leading(args) -> int:
    data = leading_data(parse_element(args.expr))
    if args.json:
        print(json.dumps(leading_to_json(data), indent=2))
        return 0
    print(f"diag degree: {data.diag}")
    print(f"mirror diag degree: {data.diag_mirror}")
    print(f"weight: ({data.weight[0]}, {data.weight[1]})")
    print(f"mirror weight: ({data.weight_mirror[0]}, {data.weight_mirror[1]})")
    print(f"leading form: {format_element(data.form)}")
    print(f"mirror leading form: {format_element(data.form_mirror)}")
    print(f"leading term: {format_element(data.term)}")
    print(f"leading coeff: {data.coeff}")
    print(f"monic: {'true' if data.monic else 'false'}")
    return 0


def _cmd_grade(args) -> int:
    a = parse_element(args.expr)
    components = homogeneous_components(a)
    if not components:
        print("0")
        return 0
    for g, component in components.items():
        form = to_graded_form(component)
        print(f"grade {g}: {format_graded_form(form)} = {format_element(component)}")
    return 0


def _cmd_homog_centralizer(args) -> int:
    p = parse_element(args.expr)
    component = homogeneous_centralizer_component(p, args.j)
    if component.kind is ComponentKind.EMPTY:
        print(f"component at grade {args.j}: empty")
        return 1
    if component.kind is ComponentKind.XY_POLYNOMIALS:
        print(f"component at grade {args.j}: all polynomials in X*Y")
        return 0
    print(f"component at grade {args.j}: line")
    print(f"generator: {format_graded_form(component.generator)}")
    print(f"element: {format_element(from_graded_form(component.generator))}")
    return 0


def _cmd_centralizer(args) -> int:
    basis = centralizer_basis(parse_element(args.expr), args.max_total_degree)
    if args.json:
        print(json.dumps(basis_to_json(basis), indent=2))
        return 0
    print(f"sector: {basis.sector}")
    print(f"direction: ({basis.direction[0]}, {basis.direction[1]})")
    print(f"levels: {list(basis.levels)}")
    print(f"level gcd: {basis.level_gcd}")
    print(f"period: {basis.period}")
    for l in basis.levels:
        print(f"basis level {l} (degree {basis.ray_degrees[l]}): {format_element(basis.by_level[l])}")
    for r, pick in enumerate(basis.picks):
        if pick is None:
            print(f"pick {r}: missing (truncated)")
        else:
            print(f"pick {r} (level {basis.pick_levels[r]}): {format_element(pick)}")
    print(f"truncated: {'true' if basis.truncated else 'false'}")
    return 0


def _cmd_decompose(args) -> int:
    basis = centralizer_basis(parse_element(args.basis_of), args.max_total_degree)
    element = parse_element(args.expr)
    parts = decompose(element, basis)
    print(f"degree: {ray_degree(element, basis) if element else 0}")
    for r, pick in enumerate(basis.picks):
        print(f"pick {r}: {format_element(pick)}")
    for r, part in enumerate(parts):
        print(f"coefficient {r}: {format_xy_polynomial(part)}")
    return 0


def _cmd_check_dixmier(args) -> int:
    from .derivation import check_dixmier_pair

    p = parse_element(args.p)
    q = parse_element(args.q)
    if not is_dixmier_pair(p, q):
        print("dixmier pair: false")
        return 1
    pair = dixmier_pair(p, q)
    report = check_dixmier_pair(pair, args.max_total_degree)
    print("dixmier pair: true")
    print(f"centralizer dimension: {report.centralizer_dim}")
    print(f"powers dimension: {report.powers_dim}")
    print(f"centralizer equals polynomials in P: {'true' if report.holds else 'false'}")
    deriv = derivation_report(pair, report.basis)
    print(f"derivation nonzero picks: {list(deriv.nonzero_picks)}")
    print(f"constant degree drop: {deriv.constant_drop}")
    print(f"derivation kernel dimension: {deriv.kernel_dim}")
    return 0 if report.holds else 1


def _parse_script(text: str) -> list[ElementaryAutomorphism]:
    steps = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk == "fourier":
            steps.append(ElementaryAutomorphism("fourier"))
            continue
        if ":" not in chunk:
            raise MalformedInputError(f"bad script step {chunk!r}: expected kind:polynomial")
        kind, poly_text = chunk.split(":", 1)
        kind = kind.strip()
        if kind not in ("addY", "addX"):
            raise MalformedInputError(f"unknown script step kind {kind!r}")
        steps.append(ElementaryAutomorphism(kind, parse_element(poly_text)))
    return steps


def _cmd_gen_pair(args) -> int:
    pair = dixmier_pair_from_script(_parse_script(args.script))
    print(f"P = {format_element(pair.p)}")
    print(f"Q = {format_element(pair.q)}")
    return 0


def _cmd_oracle_check(args) -> int:
    a = parse_element(args.a)
    b = parse_element(args.b)
    if args.mul:
        ok = oracle_mul_check(a, b)
        print(f"product action law: {'true' if ok else 'false'}")
    else:
        ok = oracle_equal(a, b)
        print(f"equal: {'true' if ok else 'false'}")
    return 0 if ok else 1


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylalg",
        description="Exact computation in the first Weyl algebra over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="canonical normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("mul", help="product of two expressions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("comm", help="commutator of two expressions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_comm)

    p = sub.add_parser("pow", help="nonnegative power of an expression")
    p.add_argument("a")
    p.add_argument("n", type=_nonnegative_int)
    p.set_defaults(func=_cmd_pow)

    p = sub.add_parser("leading", help="leading-form data of a nonzero expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_leading)

    p = sub.add_parser("grade", help="homogeneous components with XY factorizations")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_grade)

    p = sub.add_parser("homog-centralizer", help="centralizer component of a homogeneous element")
    p.add_argument("expr")
    p.add_argument("--j", type=int, required=True, help="homogeneity degree to solve in")
    p.set_defaults(func=_cmd_homog_centralizer)

    p = sub.add_parser("centralizer", help="centralizer basis up to a total-degree bound")
    p.add_argument("expr")
    p.add_argument("--max-total-degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_centralizer)

    p = sub.add_parser("decompose", help="write an element over the canonical picks")
    p.add_argument("expr")
    p.add_argument("--basis-of", required=True)
    p.add_argument("--max-total-degree", type=int, required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check-dixmier", help="verify the centralizer of P is the polynomials in P")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--max-total-degree", type=int, required=True)
    p.set_defaults(func=_cmd_check_dixmier)

    p = sub.add_parser("gen-pair", help="pair from an automorphism script, e.g. 'addY:Y^2;fourier'")
    p.add_argument("--script", required=True)
    p.set_defaults(func=_cmd_gen_pair)

    p = sub.add_parser("oracle-check", help="differential-operator comparison of two expressions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mul", action="store_true", help="check the product action law instead")
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except WeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
