"""Parser for the shift-template expression language.

Grammar (whitespace insignificant between tokens):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor ('*'? factor)*          # juxtaposition multiplies
    factor := atom ('^' nat)*
    atom   := number | 'X' | 'Y' | 'I' | '(' expr ')'
    number := digits ('/' digits)?           # one token, no spaces inside

Every error is a ParseError carrying the character position and the token
kinds that would have been acceptable there. Exponents must be non-negative
integers; '^-' raises NegativeExponentError (a ParseError subclass).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeExponentError, ParseError
from .field import FieldDescriptor, Scalar, from_fraction, from_int
from .template import Template, identity, monomial, shift_x, shift_y

_MAX_DEPTH = 500

# Token kinds.
NUMBER, X, Y, IDENT, PLUS, MINUS, STAR, CARET, LPAREN, RPAREN, END = (
    "number", "X", "Y", "I", "+", "-", "*", "^", "(", ")", "end")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    single = {"+": PLUS, "-": MINUS, "*": STAR, "^": CARET,
              "(": LPAREN, ")": RPAREN, "X": X, "Y": Y, "I": IDENT}
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in single:
            tokens.append(Token(single[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "/":
                i += 1
                if i >= n or not text[i].isdigit():
                    raise ParseError("'/' must be followed by digits", pos=i,
                                     expected=(NUMBER,))
                while i < n and text[i].isdigit():
                    i += 1
            tokens.append(Token(NUMBER, text[start:i], start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos=i)
    tokens.append(Token(END, "", n))
    return tokens


# -- abstract syntax --------------------------------------------------------

@dataclass(frozen=True)
class Const:
    text: str
    pos: int


@dataclass(frozen=True)
class VarX:
    pos: int


@dataclass(frozen=True)
class VarY:
    pos: int


@dataclass(frozen=True)
class VarI:
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int


Expr = Const | VarX | VarY | VarI | Neg | Add | Sub | Mul | Pow

_ATOM_STARTERS = (NUMBER, X, Y, IDENT, LPAREN)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.k = 0
        self.depth = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {tok.kind!r}", pos=tok.pos,
                             expected=(kind,))
        return self.advance()

    def _enter(self) -> None:
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError("expression nests too deeply",
                             pos=self.peek().pos)

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != END:
            raise ParseError(f"unexpected {tok.kind!r} after expression",
                             pos=tok.pos, expected=(PLUS, MINUS, STAR, CARET, END))
        return node

    def expr(self) -> Expr:
        self._enter()
        try:
            if self.peek().kind == MINUS:
                self.advance()
                node: Expr = Neg(self.term())
            else:
                node = self.term()
            while self.peek().kind in (PLUS, MINUS):
                op = self.advance()
                right = self.term()
                node = Add(node, right) if op.kind == PLUS else Sub(node, right)
            return node
        finally:
            self.depth -= 1

    def term(self) -> Expr:
        self._enter()
        try:
            node = self.factor()
            while True:
                tok = self.peek()
                if tok.kind == STAR:
                    self.advance()
                    node = Mul(node, self.factor())
                elif tok.kind in _ATOM_STARTERS:   # juxtaposition
                    node = Mul(node, self.factor())
                else:
                    return node
        finally:
            self.depth -= 1

    def factor(self) -> Expr:
        self._enter()
        try:
            node = self.atom()
            while self.peek().kind == CARET:
                caret = self.advance()
                tok = self.peek()
                if tok.kind == MINUS:
                    raise NegativeExponentError("exponents must be non-negative",
                                                pos=tok.pos, expected=(NUMBER,))
                if tok.kind != NUMBER:
                    raise ParseError(f"unexpected {tok.kind!r} as exponent",
                                     pos=tok.pos, expected=(NUMBER,))
                if "/" in tok.text:
                    raise ParseError("exponents must be integers", pos=tok.pos,
                                     expected=(NUMBER,))
                self.advance()
                node = Pow(node, int(tok.text), caret.pos)
            return node
        finally:
            self.depth -= 1

    def atom(self) -> Expr:
        self._enter()
        try:
            tok = self.peek()
            if tok.kind == NUMBER:
                self.advance()
                return Const(tok.text, tok.pos)
            if tok.kind == X:
                self.advance()
                return VarX(tok.pos)
            if tok.kind == Y:
                self.advance()
                return VarY(tok.pos)
            if tok.kind == IDENT:
                self.advance()
                return VarI(tok.pos)
            if tok.kind == LPAREN:
                self.advance()
                node = self.expr()
                self.expect(RPAREN)
                return node
            raise ParseError(f"unexpected {tok.kind!r}", pos=tok.pos,
                             expected=_ATOM_STARTERS)
        finally:
            self.depth -= 1


def parse_template_expr(text: str, fd: FieldDescriptor) -> Expr:
    """Parse to an AST, eagerly validating every numeric literal in the field.

    Validation at parse time keeps diagnostics positioned: a literal like
    "1/7" over F_7 fails here, pointing at the offending token.
    """
    node = _Parser(tokenize(text)).parse()
    _validate_consts(node, fd)
    return node


def _validate_consts(node: Expr, fd: FieldDescriptor) -> None:
    if isinstance(node, Const):
        _const_scalar(node, fd)
    elif isinstance(node, Neg):
        _validate_consts(node.operand, fd)
    elif isinstance(node, (Add, Sub, Mul)):
        _validate_consts(node.left, fd)
        _validate_consts(node.right, fd)
    elif isinstance(node, Pow):
        _validate_consts(node.base, fd)


# Expansion budgets for '^'.  Exponents are unbounded in the grammar, so a
# hostile '(X+Y+1)^9999' or '99999^99999' would otherwise expand to millions
# of terms or megabyte integers; past these limits the result could not be
# used as an overlay anyway, so the parser refuses with a positioned error.
_MAX_POW_TERMS = 50_000
_MAX_COEFF_BITS = 1_000_000


def _scalar_bits(s: Scalar) -> int:
    v = s.value
    if isinstance(v, Fraction):
        return v.numerator.bit_length() + v.denominator.bit_length()
    return int(v).bit_length()


def _check_pow_budget(base: Template, exponent: int, pos: int,
                      fd: FieldDescriptor) -> None:
    k = len(base.terms)
    if k == 0 or exponent <= 1:
        return
    if k > 1 and math.comb(exponent + k - 1, k - 1) > _MAX_POW_TERMS:
        raise ParseError("expansion produces too many terms", pos=pos)
    if fd.p is None:   # prime-field coefficients stay bounded by the modulus
        bits = max(_scalar_bits(c) for c in base.terms.values())
        if bits * exponent > _MAX_COEFF_BITS:
            raise ParseError("expansion produces oversized coefficients",
                             pos=pos)


def _const_scalar(node: Const, fd: FieldDescriptor) -> Scalar:
    if "/" in node.text:
        num, den = node.text.split("/")
        if int(den) == 0:
            raise ParseError("denominator is zero", pos=node.pos)
        try:
            return from_fraction(int(num), int(den), fd)
        except ZeroDivisionError:
            raise ParseError("denominator is zero in this field",
                             pos=node.pos) from None
    return from_int(int(node.text), fd)


def expr_to_template(node: Expr, fd: FieldDescriptor) -> Template:
    """Evaluate an AST in the polynomial ring F[X, Y]."""
    if isinstance(node, Const):
        return monomial(fd, 0, 0, _const_scalar(node, fd))
    if isinstance(node, VarX):
        return shift_x(fd)
    if isinstance(node, VarY):
        return shift_y(fd)
    if isinstance(node, VarI):
        return identity(fd)
    if isinstance(node, Neg):
        return -expr_to_template(node.operand, fd)
    if isinstance(node, Add):
        return expr_to_template(node.left, fd) + expr_to_template(node.right, fd)
    if isinstance(node, Sub):
        return expr_to_template(node.left, fd) - expr_to_template(node.right, fd)
    if isinstance(node, Mul):
        return expr_to_template(node.left, fd) * expr_to_template(node.right, fd)
    if isinstance(node, Pow):
        base = expr_to_template(node.base, fd)
        _check_pow_budget(base, node.exponent, node.pos, fd)
        return base ** node.exponent
    raise TypeError(f"unknown expression node {node!r}")


def parse_template(text: str, fd: FieldDescriptor) -> Template:
    """Parse and evaluate a template expression over the given field."""
    return expr_to_template(parse_template_expr(text, fd), fd)
