"""Exception hierarchy shared by every module of the package."""


class CommGraphError(Exception):
    """Base class for all library errors."""


class InputError(CommGraphError):
    """Malformed or invalid input (CLI exit code 2)."""


class UnsupportedError(CommGraphError):
    """The request is well-formed but outside what can be decided (exit code 3)."""


class NonPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class NotMonic(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class FieldMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class TooLarge(InputError):
    pass


class ScalarInput(InputError):
    pass


class IdentityMissing(InputError):
    pass


class ParseError(InputError):
    pass


class NonSplitSpectrum(UnsupportedError):
    """Characteristic polynomial does not split over the base field."""

    def __init__(self, message, factor_degrees=()):
        super().__init__(message)
        self.factor_degrees = tuple(factor_degrees)


class NoEigenvalueInField(UnsupportedError):
    pass


class InfiniteField(UnsupportedError):
    pass


class BudgetExceeded(UnsupportedError):
    pass


class FieldTooSmall(UnsupportedError):
    pass


# construction preconditions
class DegenerateParameters(InputError):
    pass


class NotMinimalSpec(InputError):
    pass


class BadConjugator(InputError):
    pass


class BadParameters(InputError):
    pass


class BadDimension(InputError):
    pass


class RepeatedEigenvalues(InputError):
    pass


class Char2IndexClash(InputError):
    pass


class MinimalInput(InputError):
    pass


class WrongClass(InputError):
    pass


class NotSemisimpleMinimal(InputError):
    pass


class SemisimpleInput(InputError):
    pass


class NotJordan(InputError):
    pass


class ValidationFailure(CommGraphError):
    """A builder's defining identity did not hold (claim violated)."""
