"""Exception hierarchy shared by every module of the package."""
from __future__ import annotations


class VGError(Exception):
    """Base class for all errors raised by vecgroupoid."""


class NotPrime(VGError, ValueError):
    pass


class ZeroInverse(VGError, ZeroDivisionError):
    pass


class ShapeMismatch(VGError, ValueError):
    pass


class NoSolution(VGError):
    pass


class IndexOutOfRange(VGError, IndexError):
    pass


class BadCoordinate(VGError, ValueError):
    pass


class CapExceeded(VGError):
    pass


class NotComposable(VGError):
    def __init__(self, x: int, y: int, beta_x: int, alpha_y: int):
        super().__init__(
            f"({x}, {y}) is not composable: beta(x)={beta_x} != alpha(y)={alpha_y}"
        )
        self.x, self.y = x, y
        self.beta_x, self.alpha_y = beta_x, alpha_y


class TableIncomplete(VGError):
    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"multiplication table has no entry for composable pair {pair}")
        self.pair = pair


class TableExtraneous(VGError):
    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"multiplication table has an entry for non-composable pair {pair}")
        self.pair = pair


class WitnessError(VGError):
    """An error that carries a concrete counterexample."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(f"{message} (witness {list(witness)})")
        self.witness = tuple(witness)


class NotAGroup(WitnessError):
    pass


class NotAnIsomorphism(WitnessError):
    pass


class AmbientEscape(VGError):
    pass


class EncodingFailure(VGError):
    pass


class NotAMorphism(WitnessError):
    def __init__(self, message: str, witness: tuple[int, ...], report=None):
        super().__init__(message, witness)
        self.report = report


class FactorizationError(VGError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class MalformedDocument(VGError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(message + where)
        self.line, self.column = line, column
