class RankMacWilliamsException(Exception):
    """Base exception class for all rank MacWilliams toolkit exceptions.

    This serves as the parent class for all custom exceptions in the toolkit,
    allowing for consistent error handling and exit-code mapping in the CLI.
    """

    def __init__(self, message="An error occurred in the rank MacWilliams toolkit"):
        self.message = message
        super().__init__(self.message)


class FieldConstructionError(RankMacWilliamsException):
    """Exception raised when a field tower cannot be built from its description."""

    def __init__(self, message="Invalid field description"):
        super().__init__(message)


class TowerMismatchError(RankMacWilliamsException):
    """Exception raised when operands belong to different field towers."""

    def __init__(self, left, right, message="Operands belong to different field towers"):
        self.left = left
        self.right = right
        super().__init__(f"{message}: {left} vs {right}")


class FieldDivisionByZeroError(RankMacWilliamsException):
    """Exception raised when inverting the zero element."""

    def __init__(self, message="Inversion of the zero element"):
        super().__init__(message)


class DimensionMismatchError(RankMacWilliamsException):
    """Exception raised when matrix or vector shapes do not agree."""

    def __init__(self, expected, actual, message="Dimension mismatch"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{message}: expected {expected}, got {actual}")


class PreconditionError(RankMacWilliamsException):
    """Exception raised when an operation is called outside its domain."""

    def __init__(self, message="Operation precondition violated"):
        super().__init__(message)


class InexactDivisionError(RankMacWilliamsException):
    """Exception raised when a division that must be exact leaves a remainder.

    This either means the input enumerator is not the enumerator of a linear
    code with the given parameters, or that an implementation invariant broke.
    """

    def __init__(self, numerator, divisor, message="Inexact division"):
        self.numerator = numerator
        self.divisor = divisor
        super().__init__(f"{message}: {numerator} is not divisible by {divisor}")


class InvalidEnumeratorError(RankMacWilliamsException):
    """Exception raised when a weight enumerator fails validation."""

    def __init__(self, message="Invalid weight enumerator"):
        super().__init__(message)


class EnumerationGuardExceededError(RankMacWilliamsException):
    """Exception raised when a brute-force enumeration would exceed its guard."""

    def __init__(self, size, guard, message="Enumeration guard exceeded"):
        self.size = size
        self.guard = guard
        super().__init__(f"{message}: {size} > {guard}")


class UnsupportedFieldError(RankMacWilliamsException):
    """Exception raised when an operation is not defined for the given field."""

    def __init__(self, message="Operation not supported for this field"):
        super().__init__(message)


class NonIntegralCoefficientError(RankMacWilliamsException):
    """Exception raised when a cyclotomic sum fails to collapse to an integer."""

    def __init__(self, index, value, message="Non-integral cyclotomic coefficient"):
        self.index = index
        self.value = value
        super().__init__(f"{message} at index {index}: {value}")


class JobParseError(RankMacWilliamsException):
    """Exception raised when a job specification cannot be parsed."""

    def __init__(self, message="Invalid job specification"):
        super().__init__(message)


class InvalidOutputDirectoryError(RankMacWilliamsException):
    """Exception raised when the provided output path is not a valid directory."""

    def __init__(self, path, message="Provided path is not a valid directory. Please provide a valid path, not a file"):
        self.path = path
        super().__init__(f"{message}: {path}")
