"""Exception hierarchy shared by every module of the package."""


class ObscureError(Exception):
    """Base class for all package errors."""


class DomainError(ObscureError, ValueError):
    """A numeric input lies outside the domain of a formula."""


class NormalizationError(DomainError):
    """A state violates a normalization condition.

    ``sector`` is ``"quantum"`` or ``"membership"``.
    """

    def __init__(self, sector, total):
        self.sector = sector
        self.total = total
        super().__init__(f"{sector} amplitudes are not normalized (sum of squares = {total!r})")


class RangeError(DomainError):
    """A membership amplitude, probability or membership value is out of range."""


class ArityError(ObscureError, ValueError):
    """Gate blocks or operands act on a different number of qubits."""


class RealnessError(ObscureError, ValueError):
    """A membership gate block has non-real entries."""


class UnknownNameError(ObscureError, ValueError):
    """A gate, projection or model name is not in the shipped set."""
