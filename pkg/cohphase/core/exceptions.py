"""Custom exceptions and their exit codes."""

import sys
from enum import IntEnum
from typing import Any

from pydantic import ValidationError


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end."""
    OK = 0
    INVARIANT_FAILED = 1
    USAGE = 2
    NUMERICAL = 3


class CohPhaseException(Exception):
    """Base exception for all cohphase errors."""

    def __init__(
        self,
        message: str,
        exit_code: ExitCode = ExitCode.NUMERICAL,
        data: dict[str, Any] | None = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.data = data or {}
        super().__init__(self.message)

    @property
    def name(self) -> str:
        """Typed error name shown on the diagnostic stream."""
        return type(self).__name__


class ConfigurationException(CohPhaseException):
    """Errors in the definition of a run, a state family or an expression."""

    def __init__(self, message: str = "Invalid configuration", data: dict | None = None):
        super().__init__(message=message, exit_code=ExitCode.USAGE, data=data)


class NumericalException(CohPhaseException):
    """Errors raised while evaluating a series."""

    def __init__(self, message: str = "Numerical failure", data: dict | None = None):
        super().__init__(message=message, exit_code=ExitCode.NUMERICAL, data=data)


class InvariantFailed(CohPhaseException):
    """A property checked by the invariant suite does not hold."""

    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(
            message=f"invariant '{invariant}' failed {detail}".strip(),
            exit_code=ExitCode.INVARIANT_FAILED,
            data={"invariant": invariant, "detail": detail}
        )


def cohphase_exception_handler(exc: CohPhaseException) -> int:
    """Print the typed error name and message on stderr; return its exit code."""
    print(f"{exc.name}: {exc.message}", file=sys.stderr)
    return int(exc.exit_code)


def pydantic_validation_exception_handler(exc: ValidationError) -> int:
    """
    Handle Pydantic validation errors of a run configuration.
    """
    for error in exc.errors():
        field = " -> ".join(str(loc) for loc in error["loc"])
        print(f"ValidationError: {field}: {error['msg']}", file=sys.stderr)
    return int(ExitCode.USAGE)


# State family definition errors

class InvalidParameter(ConfigurationException):
    """A parameter lies outside its validity range."""

    def __init__(self, name: str, value: Any, constraint: str):
        super().__init__(
            message=f"parameter {name}={value!r} violates {constraint}",
            data={"name": name, "value": value, "constraint": constraint}
        )


class ZeroNonlinearity(ConfigurationException):
    """f(n) vanishes, so d_n diverges."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(message=f"f({n}) = 0", data={"n": n})


class NonpositiveSpectrum(ConfigurationException):
    """e_n <= 0 for some n >= 1."""

    def __init__(self, n: int, value: float):
        self.n = n
        super().__init__(message=f"e_{n} = {value!r} is not positive", data={"n": n, "value": value})


class NegativeSpectrum(ConfigurationException):
    """e_n < 0 where f(n) = sqrt(e_n / n) is requested."""

    def __init__(self, n: int, value: float):
        self.n = n
        super().__init__(message=f"e_{n} = {value!r} is negative", data={"n": n, "value": value})


class SpectrumGroundNotZero(ConfigurationException):
    """The spectrum does not start at e_0 = 0."""

    def __init__(self, value: float):
        super().__init__(message=f"e_0 = {value!r}, expected 0", data={"value": value})


# Expression language errors

class LexError(ConfigurationException):
    """Unexpected character in an expression."""

    def __init__(self, position: int, char: str):
        self.position = position
        super().__init__(
            message=f"unexpected character {char!r} at byte {position}",
            data={"position": position, "char": char}
        )


class ParseError(ConfigurationException):
    """Token stream does not match the grammar."""

    def __init__(self, position: int, expected: list[str], found: str = "end of input"):
        self.position = position
        self.expected = sorted(expected)
        super().__init__(
            message=f"at byte {position}: expected one of {self.expected}, found {found}",
            data={"position": position, "expected": self.expected, "found": found}
        )


class ArityError(ConfigurationException):
    """Function called with the wrong number of arguments."""

    def __init__(self, function: str, got: int, want: int):
        self.function = function
        self.got = got
        self.want = want
        super().__init__(
            message=f"{function} takes {want} argument(s), got {got}",
            data={"function": function, "got": got, "want": want}
        )


class UnboundVariable(ConfigurationException):
    """Variable neither `n` nor a declared parameter."""

    def __init__(self, name: str):
        self.variable = name
        super().__init__(message=f"unbound variable {name!r}", data={"name": name})


class DomainError(ConfigurationException):
    """Expression evaluated outside the domain of an operation."""

    def __init__(self, reason: str, n: int, expression: str):
        self.n = n
        self.expression = expression
        super().__init__(
            message=f"{reason} in {expression} at n={n}",
            data={"reason": reason, "n": n, "expression": expression}
        )


# Series evaluation errors

class NotConverged(NumericalException):
    """Truncation cap reached before the tail bound was met."""

    def __init__(self, z_mag: float, n_cap: int):
        super().__init__(
            message=f"series at |z|={z_mag!r} did not converge within {n_cap} terms",
            data={"z_mag": z_mag, "n_cap": n_cap}
        )


class DomainExceeded(NumericalException):
    """|z| lies outside the convergence disk of the family."""

    def __init__(self, z_mag: float, radius: float):
        super().__init__(
            message=f"|z|={z_mag!r} is outside the convergence radius {radius!r}",
            data={"z_mag": z_mag, "radius": radius}
        )


class SeriesOverflow(NumericalException):
    """A series value exceeds the floating-point range even in log form."""

    def __init__(self, log_value: float):
        super().__init__(
            message=f"series value exp({log_value!r}) overflows double precision",
            data={"log_value": log_value}
        )
