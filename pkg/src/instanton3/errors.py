"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every domain error this package raises."""


class RankUnsupported(ToolkitError):
    """A rank-specific closed form was asked about a rank it does not cover."""


class NonIntegralChernClass(ToolkitError):
    """A Chow class is not the Chern character of any sheaf of the given rank."""


class NonIntegralChi(ToolkitError):
    """An Euler characteristic came out non-integral, so the input data are inconsistent."""


class ParityViolation(ToolkitError):
    """c3 - c1*c2 is odd, so the genus relation has no integer solution."""


class DomainError(ToolkitError):
    """An argument lies outside the range on which the quantity is defined."""


class OutOfValidityRange(ToolkitError):
    """A spectrum cohomology formula was evaluated at a twist it does not cover."""


class NotNaturalizable(ToolkitError):
    """No single-index cohomology table exists for the given Chern data."""

    def __init__(self, message: str, twist: int | None = None):
        super().__init__(message)
        self.twist = twist


class MissingRows(ToolkitError):
    """A cohomology table lacks the twists a check needs to read."""


class MissingHypothesis(ToolkitError):
    """A conclusion was requested without asserting a hypothesis it depends on."""
