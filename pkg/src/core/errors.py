from enum import Enum
from typing import Any, Optional

class ErrorCode(str, Enum):
    VALIDATION_ERROR = "VALIDATION_ERROR"
    PARSE_ERROR = "PARSE_ERROR"
    NOT_PRIME = "NOT_PRIME"
    ZERO_INVERSE = "ZERO_INVERSE"
    TOO_FEW_POINTS = "TOO_FEW_POINTS"
    FIELD_TOO_SMALL = "FIELD_TOO_SMALL"
    BOTH_ZERO = "BOTH_ZERO"
    DUPLICATE_POINTS = "DUPLICATE_POINTS"
    NOT_COPRIME = "NOT_COPRIME"
    NO_SOLUTION = "NO_SOLUTION"
    ZERO_INPUT = "ZERO_INPUT"
    SHAPE_MISMATCH = "SHAPE_MISMATCH"
    SINGULAR_MATRIX = "SINGULAR_MATRIX"
    NOT_REDUCED = "NOT_REDUCED"
    GCD_NOT_ONE = "GCD_NOT_ONE"
    GENERATOR_GROWTH = "GENERATOR_GROWTH"
    INVALID_INDEX_TUPLE = "INVALID_INDEX_TUPLE"
    ZERO_POLYNOMIAL = "ZERO_POLYNOMIAL"
    NOT_MINIMAL_BASIS = "NOT_MINIMAL_BASIS"
    DEGREE_TOO_HIGH = "DEGREE_TOO_HIGH"

class HnfError(Exception):
    """Domain error; subclasses fix the code, the CLI maps exit_code to the process status."""

    code: ErrorCode = ErrorCode.VALIDATION_ERROR
    exit_code: int = 1

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        self.message = message
        self.details = details
        super().__init__(message)

class ValidationError(HnfError):
    code = ErrorCode.VALIDATION_ERROR

class ParseError(HnfError):
    code = ErrorCode.PARSE_ERROR

# Field and polynomial arithmetic
class NotPrime(HnfError):
    code = ErrorCode.NOT_PRIME

class ZeroInverse(HnfError):
    code = ErrorCode.ZERO_INVERSE

class TooFewPoints(HnfError):
    code = ErrorCode.TOO_FEW_POINTS

class FieldTooSmall(HnfError):
    code = ErrorCode.FIELD_TOO_SMALL

class BothZero(HnfError):
    code = ErrorCode.BOTH_ZERO

class DuplicatePoints(HnfError):
    code = ErrorCode.DUPLICATE_POINTS

class NotCoprime(HnfError):
    code = ErrorCode.NOT_COPRIME

class NoSolution(HnfError):
    code = ErrorCode.NO_SOLUTION

class ZeroInput(HnfError):
    code = ErrorCode.ZERO_INPUT

# Matrices and relation bases
class ShapeMismatch(HnfError):
    code = ErrorCode.SHAPE_MISMATCH

class SingularMatrix(HnfError):
    code = ErrorCode.SINGULAR_MATRIX

class NotReduced(HnfError):
    code = ErrorCode.NOT_REDUCED

class GcdNotOne(HnfError):
    code = ErrorCode.GCD_NOT_ONE

class GeneratorGrowth(HnfError):
    code = ErrorCode.GENERATOR_GROWTH

class InvalidIndexTuple(HnfError):
    code = ErrorCode.INVALID_INDEX_TUPLE

# Bivariate bases
class ZeroPolynomial(HnfError):
    code = ErrorCode.ZERO_POLYNOMIAL

class NotMinimalBasis(HnfError):
    code = ErrorCode.NOT_MINIMAL_BASIS

class DegreeTooHigh(HnfError):
    code = ErrorCode.DEGREE_TOO_HIGH
