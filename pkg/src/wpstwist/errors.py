"""Exception and warning types.

Everything deriving from :class:`ValidationError` signals bad input and maps
to CLI exit code 2; :class:`InvariantViolation` signals a bug or a broken
internal consistency check and maps to exit code 3.
"""


class ValidationError(ValueError):
    """Input rejected by a precondition."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""


class NonDivisibleDegree(ValidationError):
    pass


class NonDivisibleExponent(ValidationError):
    pass


class UnsupportedShape(ValidationError):
    pass


class NonFermatWeights(ValidationError):
    pass


class ShapeError(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class BadPartition(ValidationError):
    pass


class WeightRelationViolated(ValidationError):
    pass


class UnbalancedFibration(ValidationError):
    pass


class UnsafeElimination(ValidationError):
    """Raised when eliminating a pencil variable would not give the true fiber.

    ``result`` carries the hypersurface the naive substitution produces (a
    cover or a quotient of the actual fiber) when it can be computed.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NoIntegralClass(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class NothingToContract(ValidationError):
    pass


class NegativeHodge(ValidationError):
    pass


class NonIntegralGenus(ValidationError):
    pass


class NonIntegerCount(UserWarning):
    """A weighted Bezout count came out fractional (orbifold points involved)."""


class EulerBoundWarning(UserWarning):
    """A fibration Euler number fell outside the open bound (48 - 24N, 48)."""
