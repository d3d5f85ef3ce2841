"""Syntax tree of the expression language."""

from dataclasses import dataclass

import numpy as np


# Built-in functions and their arity.
FUNCTIONS: dict[str, int] = {
    "sqrt": 1,
    "exp": 1,
    "ln": 1,
    "gamma": 1,
    "abs": 1,
    "pow": 2,
    "min": 2,
    "max": 2,
}

BINARY_OPERATORS = ("+", "-", "*", "/", "^")


@dataclass(frozen=True)
class Literal:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    function: str
    args: tuple["Expr", ...]


Expr = Literal | Var | Neg | BinOp | Call


def to_source(node: Expr) -> str:
    """
    Render a tree as fully parenthesized source text.

    Parsing the result gives back a structurally identical tree.
    """
    match node:
        case Literal(value):
            return np.format_float_positional(value, trim="-")
        case Var(name):
            return name
        case Neg(operand):
            return f"(-{to_source(operand)})"
        case BinOp(op, left, right):
            return f"({to_source(left)} {op} {to_source(right)})"
        case Call(function, args):
            return f"{function}({', '.join(to_source(a) for a in args)})"
    raise TypeError(f"not an expression node: {node!r}")


def free_variables(node: Expr) -> set[str]:
    """Names of all variables referenced in the tree."""
    match node:
        case Literal():
            return set()
        case Var(name):
            return {name}
        case Neg(operand):
            return free_variables(operand)
        case BinOp(_, left, right):
            return free_variables(left) | free_variables(right)
        case Call(_, args):
            return set().union(*(free_variables(a) for a in args))
    raise TypeError(f"not an expression node: {node!r}")
