"""Exception hierarchy shared across the package."""


class FlagbottError(Exception):
    pass


class ValidationError(FlagbottError):
    """A problem statement failed a structural rule."""


class ShapeInvalid(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class BetaOutOfRange(ValidationError):
    pass


class ZeroDenominator(FlagbottError):
    """A tangent character vanished at the current weight sample; resample."""


class EngineError(FlagbottError):
    """An internal consistency assertion failed; surfaced, never hidden."""


class SampleDisagreement(EngineError):
    pass


class NonIntegerResult(EngineError):
    pass


class ResampleExhausted(EngineError):
    pass
