"""Exception types shared across the package."""


class UniverseMismatch(ValueError):
    """Operands built over different universes, or an out-of-range bitset."""


class CapExceeded(RuntimeError):
    """A power-set enumeration was requested above the configured cap."""


class NotCompatible(ValueError):
    """The tolerance is not compatible with the equivalence.

    Carries the full compatibility report, including the witness triple.
    """

    def __init__(self, report):
        super().__init__(f"tolerance is not compatible with the equivalence ({report.describe()})")
        self.report = report


class HypothesisNotMet(ValueError):
    """A structural precondition of the requested analysis does not hold."""


class CsvError(ValueError):
    """Malformed information-system table; the message names row and column."""
