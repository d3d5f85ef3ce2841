"""
Recursive-descent parser.

Grammar (lowest to highest precedence):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?
    atom   := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'

'^' is right-associative and its left operand is an atom, so -x^2 is -(x^2).
"""

from cohphase.core.exceptions import ArityError, ParseError
from cohphase.dsl.ast import FUNCTIONS, BinOp, Call, Expr, Literal, Neg, Var
from cohphase.dsl.tokens import Token, TokenKind, tokenize


_ATOM_START = ["(", "-", "identifier", "number"]


class Parser:
    """Single-use parser over a token stream."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    def _peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _end_position(self) -> int:
        return self.tokens[-1].end if self.tokens else 0

    def _fail(self, expected: list[str]) -> ParseError:
        token = self._peek()
        if token is None:
            return ParseError(self._end_position(), expected)
        return ParseError(token.position, expected, found=repr(token.lexeme))

    def _accept(self, *kinds: TokenKind) -> Token | None:
        token = self._peek()
        if token is not None and token.kind in kinds:
            self.index += 1
            return token
        return None

    def _expect(self, kind: TokenKind) -> Token:
        token = self._accept(kind)
        if token is None:
            raise self._fail([kind.value])
        return token

    def parse(self) -> Expr:
        """Parse the whole stream as one expression."""
        node = self.expr()
        if self._peek() is not None:
            raise self._fail(["end of input", "+", "-", "*", "/", "^"])
        return node

    def expr(self) -> Expr:
        node = self.term()
        while (op := self._accept(TokenKind.PLUS, TokenKind.MINUS)) is not None:
            node = BinOp(op.lexeme, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while (op := self._accept(TokenKind.STAR, TokenKind.SLASH)) is not None:
            node = BinOp(op.lexeme, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self._accept(TokenKind.MINUS) is not None:
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self._accept(TokenKind.CARET) is not None:
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        if (token := self._accept(TokenKind.NUMBER)) is not None:
            return Literal(float(token.lexeme))

        if self._accept(TokenKind.LPAREN) is not None:
            node = self.expr()
            self._expect(TokenKind.RPAREN)
            return node

        if (token := self._accept(TokenKind.IDENT)) is not None:
            if self._peek() is not None and self._peek().kind is TokenKind.LPAREN:
                return self._call(token)
            return Var(token.lexeme)

        raise self._fail(_ATOM_START)

    def _call(self, name: Token) -> Call:
        if name.lexeme not in FUNCTIONS:
            raise ParseError(name.position, list(FUNCTIONS), found=repr(name.lexeme))

        self._expect(TokenKind.LPAREN)
        args = [self.expr()]
        while self._accept(TokenKind.COMMA) is not None:
            args.append(self.expr())
        if self._peek() is None or self._peek().kind is not TokenKind.RPAREN:
            raise self._fail([")", ","])
        self.index += 1

        want = FUNCTIONS[name.lexeme]
        if len(args) != want:
            raise ArityError(name.lexeme, len(args), want)
        return Call(name.lexeme, tuple(args))


def parse(tokens: list[Token]) -> Expr:
    """
    Build the syntax tree of a token stream.

    Raises:
        ParseError: With the byte position and the set of expected tokens
        ArityError: If a built-in function gets the wrong number of arguments
    """
    return Parser(tokens).parse()


def parse_source(src: str) -> Expr:
    """Tokenize and parse expression text."""
    return parse(tokenize(src))
