"""Exception types raised by the package."""


class InvalidDimensionError(ValueError):
    """Qudit dimension is not allowed for the requested construction."""


class DimensionMismatchError(ValueError):
    """Operand shapes do not agree."""


class DomainError(ValueError):
    """A scalar argument lies outside its admissible range."""


class InvalidWeightsError(ValueError):
    """Weyl-channel weights are negative, exceed one, or do not sum to one."""


class ClosedFormOnlyError(ValueError):
    """The Kraus form is undefined here; use the closed-form channel action instead."""


class RestorationError(RuntimeError):
    """A recovery check that must hold exactly did not."""
