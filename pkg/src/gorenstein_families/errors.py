"""Exceptions and the ``Indeterminate`` marker shared across the package."""

from dataclasses import dataclass

from .graded import NotArtinian


class InvalidDegreeData(ValueError):
    """Betti degrees that cannot come from a codimension two CM quotient."""


class HilbertBurchViolation(InvalidDegreeData):
    pass


class MinimalityViolation(InvalidDegreeData):
    pass


class WrongMu(ValueError):
    """Operation needs a different number of minimal generators."""


class ConstructionMuMismatch(WrongMu):
    pass


class UnsupportedConstruction(ValueError):
    pass


class SchemaError(ValueError):
    pass


class InconsistentProfile(ArithmeticError):
    """The formal mapping cone has no Artinian Gorenstein reading at this s.

    Happens when no regular section of the requested degree exists: the
    alternating sum then fails to start with 1, goes negative, or does not
    end with a 1 in the socle degree.
    """


@dataclass(frozen=True)
class Indeterminate:
    """A quantity that degree data alone does not determine.

    Falsy-free on purpose: callers must test with ``isinstance``.
    """

    reason: str = ""

    def __str__(self):
        return "indeterminate" + (f" ({self.reason})" if self.reason else "")


def is_known(x) -> bool:
    return not isinstance(x, Indeterminate)


__all__ = [
    "InvalidDegreeData",
    "HilbertBurchViolation",
    "MinimalityViolation",
    "WrongMu",
    "ConstructionMuMismatch",
    "UnsupportedConstruction",
    "SchemaError",
    "InconsistentProfile",
    "NotArtinian",
    "Indeterminate",
    "is_known",
]
