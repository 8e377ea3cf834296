"""Exception hierarchy shared by all gha modules.

Every error that points at a specific offending position carries an
``index`` attribute so callers (and tests) can locate it without parsing
the message.
"""


class GhaError(Exception):
    """Base class for all gha errors."""


class ValidationError(GhaError):
    """Structural problem in an instance, graph, or allocation."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SelfLoopError(ValidationError):
    pass


class DuplicateEdgeError(ValidationError):
    pass


class VertexOutOfRangeError(ValidationError):
    pass


class LengthMismatchError(ValidationError):
    pass


class UnsortedValuesError(ValidationError):
    pass


class NotABijectionError(ValidationError):
    pass


class NotATreeError(GhaError):
    pass


class DisconnectedError(GhaError):
    pass


class TooLargeError(GhaError):
    """Input exceeds a solver's configured size cap."""


class NotCompleteTreeSizeError(GhaError):
    pass


class OutOfRangeError(GhaError):
    pass


class TooShallowError(GhaError):
    pass


class NotRegularError(GhaError):
    pass


class ParityViolationError(GhaError):
    pass


class ExpansionNotCertifiedError(GhaError):
    pass


class BadParametersError(GhaError):
    pass


class InvalidWitnessError(GhaError):
    pass


class UnsupportedFamilyError(GhaError):
    pass


class EpsilonTooSmallError(GhaError):
    pass
