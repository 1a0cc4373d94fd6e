"""
Text syntax for ordinals and space expressions.

Ordinals:
    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := base ('^' factor)?
    base   := NAT | 'w' | 'W' NAT | '(' expr ')'

Spaces:
    S    := unit ('(+)' unit)*
    unit := 'C(' expr ')' | 'C0(' expr ')' | 'c0(' expr ',' S ')' | '(' S ')'

Input also accepts the Unicode spellings ω, Ω₁, ·, ⊕. Output is ASCII only.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, NamedTuple, Union

from . import config
from .errors import ExpressionSyntaxError, OrdinalOverflowError
from .ordinals import ONE, EpsAtom, Ordinal, OMEGA, is_finite, is_zero, omega_atom, ordinal, terms
from .space_algebra import C, C0, C0Sum, DirectSum, SpaceExpr

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<nat>\d+)
  | (?P<atom>[WΩ](?:\d+|[₀-₉]+))
  | (?P<omega>[wω])
  | (?P<ident>C0|C|c0)
  | (?P<dsum>\(\+\)|⊕)
  | (?P<op>[+*·^(),])
    """,
    re.VERBOSE,
)

SUBSCRIPT_DIGITS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")

# left binding powers; '^' is right-associative
BINDING_POWER = {"+": 10, "*": 20, "^": 30}


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", text, position)
        kind = match.lastgroup
        if kind != "space":
            value = "*" if match.group() == "·" else match.group()
            tokens.append(Token(kind, value, position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# --- Ordinal expression tree ---

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class Atom:
    k: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "OrdinalExprAst"
    right: "OrdinalExprAst"


OrdinalExprAst = Union[Num, Omega, Atom, BinOp]


def evaluate(node: OrdinalExprAst) -> Ordinal:
    if isinstance(node, Num):
        return ordinal(node.value)
    if isinstance(node, Omega):
        return OMEGA
    if isinstance(node, Atom):
        return omega_atom(node.k)
    left, right = evaluate(node.left), evaluate(node.right)
    if node.op == "+":
        return left + right
    if node.op == "*":
        return left * right
    return left**right


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, token: Token) -> ExpressionSyntaxError:
        found = "end of input" if token.kind == "end" else repr(token.text)
        return ExpressionSyntaxError(f"{message}, found {found}", self.text, token.position)

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.text != text or token.kind == "end":
            raise self.error(f"expected {text!r}", token)
        return self.advance()

    def finish(self) -> None:
        token = self.peek()
        if token.kind != "end":
            raise self.error("expected end of input", token)

    # ordinals

    def ordinal_expr(self, rbp: int = 0) -> OrdinalExprAst:
        left = self.base()
        while True:
            token = self.peek()
            lbp = BINDING_POWER.get(token.text) if token.kind == "op" else None
            if lbp is None or lbp <= rbp:
                return left
            self.advance()
            right = self.ordinal_expr(lbp - 1 if token.text == "^" else lbp)
            left = BinOp(token.text, left, right)

    def base(self) -> OrdinalExprAst:
        token = self.advance()
        if token.kind == "nat":
            return Num(_literal(token.text, self.text, token.position))
        if token.kind == "omega":
            return Omega()
        if token.kind == "atom":
            k = _literal(token.text[1:].translate(SUBSCRIPT_DIGITS), self.text, token.position)
            if k < 1:
                raise ExpressionSyntaxError("atom index must be at least 1", self.text, token.position)
            return Atom(k)
        if token.kind == "op" and token.text == "(":
            inner = self.ordinal_expr()
            self.expect(")")
            return inner
        raise self.error("expected an ordinal", token)

    # spaces

    def space_expr(self) -> SpaceExpr:
        parts = [self.space_unit()]
        while self.peek().kind == "dsum":
            self.advance()
            parts.append(self.space_unit())
        return parts[0] if len(parts) == 1 else DirectSum(tuple(parts))

    def space_unit(self) -> SpaceExpr:
        token = self.advance()
        if token.kind == "ident":
            self.expect("(")
            value = evaluate(self.ordinal_expr())
            if token.text == "c0":
                self.expect(",")
                inner = self.space_expr()
                self.expect(")")
                return C0Sum(value, inner)
            self.expect(")")
            return C(value) if token.text == "C" else C0(value)
        if token.kind == "op" and token.text == "(":
            inner = self.space_expr()
            self.expect(")")
            return inner
        raise self.error("expected a space expression", token)


def _literal(digits: str, text: str, position: int) -> int:
    value = int(digits)
    if value > config.MAX_COEFFICIENT:
        raise OrdinalOverflowError(f"literal {digits} at position {position} exceeds the {config.COEFFICIENT_BITS}-bit range")
    return value


def parse_ordinal_ast(text: str) -> OrdinalExprAst:
    parser = _Parser(text)
    tree = parser.ordinal_expr()
    parser.finish()
    logger.debug(f"Parsed ordinal {text!r} into {type(tree).__name__}")
    return tree


def parse_ordinal(text: str) -> Ordinal:
    return evaluate(parse_ordinal_ast(text))


def parse_space(text: str) -> SpaceExpr:
    parser = _Parser(text)
    expr = parser.space_expr()
    parser.finish()
    logger.debug(f"Parsed space expression {text!r} as {type(expr).__name__}")
    return expr


# --- Formatting ---

def format_ordinal(a: Ordinal) -> str:
    if isinstance(a, EpsAtom):
        return f"W{a.k}"
    if is_zero(a):
        return "0"
    return " + ".join(_format_term(exponent, coefficient) for exponent, coefficient in terms(a))


def _format_term(exponent: Ordinal, coefficient: int) -> str:
    if is_zero(exponent):
        return str(coefficient)
    if isinstance(exponent, EpsAtom):
        # w^Wk = Wk
        head = format_ordinal(exponent)
    elif exponent == ONE:
        head = "w"
    elif is_finite(exponent) or exponent == OMEGA:
        head = f"w^{format_ordinal(exponent)}"
    else:
        head = f"w^({format_ordinal(exponent)})"
    return head if coefficient == 1 else f"{head}*{coefficient}"


def format_space(expr: SpaceExpr) -> str:
    if isinstance(expr, C):
        return f"C({format_ordinal(expr.alpha)})"
    if isinstance(expr, C0):
        return f"C0({format_ordinal(expr.alpha)})"
    if isinstance(expr, C0Sum):
        return f"c0({format_ordinal(expr.kappa)}, {format_space(expr.inner)})"
    return " (+) ".join(
        f"({format_space(part)})" if isinstance(part, DirectSum) else format_space(part) for part in expr.parts
    )
