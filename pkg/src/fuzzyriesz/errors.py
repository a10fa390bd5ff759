"""Exception types shared across the package."""


class FuzzyRieszError(Exception):
    pass


class InputError(FuzzyRieszError, ValueError):
    """Malformed input: bad grade, dimension mismatch, unparsable file."""


class PreconditionError(FuzzyRieszError, ValueError):
    """An operation was called outside the hypotheses it is defined under."""


class InfeasibleError(FuzzyRieszError):
    """A linear system has no solution.

    ``certificate`` maps original constraint indices to the nonnegative
    multipliers whose combination yields ``0 <= negative``.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate or {}


class UnboundedError(FuzzyRieszError):
    pass


class OracleDisagreement(FuzzyRieszError, AssertionError):
    """Two independent decision procedures returned different answers."""
