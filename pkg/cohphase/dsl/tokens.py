"""Tokenizer for f(n) / e_n expressions."""

import re
from dataclasses import dataclass
from enum import Enum

from cohphase.core.exceptions import LexError


class TokenKind(str, Enum):
    """Token categories of the expression language."""
    NUMBER = "number"
    IDENT = "identifier"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","


@dataclass(frozen=True)
class Token:
    """A lexeme with its byte offset in the UTF-8 source."""

    kind: TokenKind
    lexeme: str
    position: int

    @property
    def end(self) -> int:
        return self.position + len(self.lexeme.encode("utf-8"))


# ASCII only: unicode digits, spaces and operators are rejected.
_SCANNER = re.compile(
    r"(?P<space>[ \t\r\n]+)"
    r"|(?P<number>\d+(?:\.\d+)?|\.\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^(),])",
    re.ASCII,
)

_OPERATORS = {kind.value: kind for kind in TokenKind if kind not in (TokenKind.NUMBER, TokenKind.IDENT)}


def tokenize(src: str) -> list[Token]:
    """
    Split an expression into tokens, skipping whitespace.

    Args:
        src: Expression text

    Returns:
        Token stream in source order

    Raises:
        LexError: At the first character that starts no token
    """
    tokens: list[Token] = []
    index = 0
    offset = 0

    while index < len(src):
        match = _SCANNER.match(src, index)
        if match is None:
            raise LexError(offset, src[index])

        lexeme = match.group()
        group = match.lastgroup
        if group == "number":
            tokens.append(Token(TokenKind.NUMBER, lexeme, offset))
        elif group == "ident":
            tokens.append(Token(TokenKind.IDENT, lexeme, offset))
        elif group == "op":
            tokens.append(Token(_OPERATORS[lexeme], lexeme, offset))

        index = match.end()
        offset += len(lexeme)  # matched text is ASCII

    return tokens
