"""Exception types shared across the package."""

from __future__ import annotations


class HopfTutteError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(HopfTutteError):
    def __init__(self, size: int, cap: int, what: str = "object"):
        super().__init__(f"{what} has {size} elements, cap is {cap}")
        self.size = size
        self.cap = cap


class FractionalSubstitution(HopfTutteError):
    """A half-integer power needs the square root of a binding that has none."""


class NonInvertibleBinding(HopfTutteError):
    """A negative power needs the inverse of a binding that is not a monomial."""


class NonSquareBase(HopfTutteError):
    """A half-integer power was evaluated at a rational that is not a square."""


class WrongGrade(HopfTutteError):
    pass


class ProfileMismatch(HopfTutteError):
    pass


class SelectorIncompatible(HopfTutteError):
    pass


class NonUniformSelector(HopfTutteError):
    """Raised by engines that only make sense for uniform selectors."""


class NotADeltaMatroid(HopfTutteError):
    pass


class InvalidMatroid(HopfTutteError):
    pass


class InvalidPerspective(HopfTutteError):
    pass


class InvalidRibbonGraph(HopfTutteError):
    pass


class OverlappingSets(HopfTutteError):
    pass


class NotCellular(HopfTutteError):
    pass


class UnknownSuite(HopfTutteError):
    pass


class ParseError(HopfTutteError):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line
