"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input violates a documented precondition or domain constraint."""


class FormatError(ValueError):
    """Malformed textual or JSON input."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug or corrupted data."""


class PatternContainment(DomainError):
    """A filling contains the forbidden descending pattern.

    ``cell`` is the (column, row) address of the nonzero entry at which the
    violation was detected, when known.
    """

    def __init__(self, message: str, cell=None):
        super().__init__(message)
        self.cell = cell


class ChainBoundExceeded(DomainError):
    """A NE-chain is longer than the permitted bound.

    ``chain`` lists the (column, row, entry) triples of a witnessing chain.
    """

    def __init__(self, message: str, chain=None):
        super().__init__(message)
        self.chain = chain
