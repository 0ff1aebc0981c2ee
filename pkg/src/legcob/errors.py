"""Exception types shared across the package."""


class LegcobError(Exception):
    """Base class for all package errors."""


class FrontSyntaxError(LegcobError, ValueError):
    """A token in a front word, PD file or script does not parse."""


class ValidationError(LegcobError, ValueError):
    """A front word fails the strand-count audit."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InvalidSite(LegcobError, ValueError):
    """A move site does not match the front it is applied to."""


class StepError(LegcobError):
    """A cobordism script step failed to replay."""

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class CrossingCapExceeded(LegcobError):
    pass


class NonterminationGuard(LegcobError):
    """The skein reduction measure failed to decrease."""


class PreconditionError(LegcobError, ValueError):
    pass


class DomainError(LegcobError, ValueError):
    pass


class DegenerateSample(LegcobError, ValueError):
    pass
