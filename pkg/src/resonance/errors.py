"""Exception hierarchy shared by all modules."""


class ResonanceError(Exception):
    """Base class for every error raised by the library."""


class InvalidArrangement(ResonanceError, ValueError):
    pass


class BadPrime(ResonanceError):
    pass


class InterpolationMismatch(ResonanceError):
    pass


class NonAlternating(ResonanceError):
    pass


class LimitExceeded(ResonanceError):
    pass


class MissingCircuit(ResonanceError):
    pass


class NonCharacter(ResonanceError):
    pass


class PadTooSmall(ResonanceError, ValueError):
    pass


class ConventionMismatch(ResonanceError):
    pass


class InsufficientData(ResonanceError):
    def __init__(self, message, additional_needed=None):
        super().__init__(message)
        self.additional_needed = additional_needed


class LeadingNotConstant(ResonanceError):
    def __init__(self, message, form=None):
        super().__init__(message)
        self.form = form


class StoreConflict(ResonanceError):
    def __init__(self, key, first, second):
        super().__init__(f"conflicting values for {key}: {first!r} != {second!r}")
        self.key = key
        self.values = (first, second)
