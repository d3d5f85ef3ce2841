"""Floating-point evaluation of expression trees."""

import math
from collections.abc import Mapping

from scipy.special import gammaln

from cohphase.core.exceptions import DomainError, UnboundVariable
from cohphase.dsl.ast import BinOp, Call, Expr, Literal, Neg, Var, to_source


def _power(node: Expr, base: float, exponent: float, n: int) -> float:
    try:
        value = base ** exponent
    except ZeroDivisionError:
        raise DomainError("zero raised to a negative power", n, to_source(node))
    except OverflowError:
        raise DomainError("overflow", n, to_source(node))
    if isinstance(value, complex):
        raise DomainError("complex result", n, to_source(node))
    return value


def _call(node: Call, args: list[float], n: int) -> float:
    x = args[0]
    match node.function:
        case "sqrt":
            if x < 0.0:
                raise DomainError("sqrt of negative value", n, to_source(node))
            return math.sqrt(x)
        case "exp":
            try:
                return math.exp(x)
            except OverflowError:
                raise DomainError("overflow", n, to_source(node))
        case "ln":
            if not x > 0.0:
                raise DomainError("ln of nonpositive value", n, to_source(node))
            return math.log(x)
        case "gamma":
            if not x > 0.0:
                raise DomainError("gamma of nonpositive value", n, to_source(node))
            try:
                return math.exp(float(gammaln(x)))
            except OverflowError:
                raise DomainError("overflow", n, to_source(node))
        case "abs":
            return abs(x)
        case "pow":
            return _power(node, x, args[1], n)
        case "min":
            return min(x, args[1])
        case "max":
            return max(x, args[1])
    raise DomainError(f"unknown function {node.function}", n, to_source(node))


def _evaluate(node: Expr, n: int, scope: Mapping[str, float]) -> float:
    match node:
        case Literal(value):
            return value
        case Var(name):
            if name not in scope:
                raise UnboundVariable(name)
            return scope[name]
        case Neg(operand):
            value = -_evaluate(operand, n, scope)
        case BinOp(op, left, right):
            a = _evaluate(left, n, scope)
            b = _evaluate(right, n, scope)
            if op == "+":
                value = a + b
            elif op == "-":
                value = a - b
            elif op == "*":
                value = a * b
            elif op == "/":
                if b == 0.0:
                    raise DomainError("division by zero", n, to_source(node))
                value = a / b
            else:
                value = _power(node, a, b, n)
        case Call(_, args):
            value = _call(node, [_evaluate(a, n, scope) for a in args], n)
        case _:
            raise TypeError(f"not an expression node: {node!r}")

    if not math.isfinite(value):
        raise DomainError("non-finite result", n, to_source(node))
    return value


def evaluate(node: Expr, n: int, env: Mapping[str, float] | None = None) -> float:
    """
    Evaluate a tree at level index n.

    Args:
        node: Parsed expression
        n: Nonnegative level index bound to the variable `n`
        env: Parameter values

    Returns:
        Finite float value

    Raises:
        UnboundVariable: If a variable is neither `n` nor in env
        DomainError: For sqrt of a negative, ln or gamma of a nonpositive,
            division by zero, complex or non-finite results
    """
    scope = {**(env or {}), "n": float(n)}
    return _evaluate(node, n, scope)
