"""Exception types raised across the package."""


class DeepHoleError(ValueError):
    """Base class for all errors raised by deephole."""


class NonPrimeModulus(DeepHoleError):
    pass


class ModulusMismatch(DeepHoleError):
    pass


class ZeroInverse(ZeroDivisionError, DeepHoleError):
    pass


class DuplicateNode(DeepHoleError):
    pass


class DimensionMismatch(DeepHoleError):
    pass


class DegreeOutOfRange(DeepHoleError):
    pass


class InvalidDimension(DeepHoleError):
    pass


class ParameterMismatch(DeepHoleError):
    pass


class IsCodeword(DeepHoleError):
    pass


class HypothesisViolated(DeepHoleError):
    """Raised when k < (p - 1) / 2, outside the range where the classification is proved."""


class BudgetExceeded(DeepHoleError):
    pass


class InvalidArity(DeepHoleError):
    pass


class ZeroInput(DeepHoleError):
    pass


class DegenerateParameters(DeepHoleError):
    pass


class DeltaInBetas(DeepHoleError):
    pass


class InvalidShape(DeepHoleError):
    pass
