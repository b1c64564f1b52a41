"""Exception hierarchy for tsrlib.

Every error raised by the library derives from TsrError so callers (and the
CLI) can distinguish usage problems from genuine bugs.
"""


class TsrError(Exception):
    """Base class for all tsrlib errors."""


# --- field construction / arithmetic ---

class NonPrimeCharacteristic(TsrError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(TsrError):
    """A supplied extension modulus factors over its base field."""


class FieldMismatch(TsrError):
    """Operands belong to different field descriptors."""


class ZeroInversion(TsrError):
    """Attempted to invert (or take the order of) the zero element."""


# --- polynomials ---

class ConstantPolynomial(TsrError):
    """Operation requires degree >= 1."""


class ZeroConstantTerm(TsrError):
    """Operation requires a nonzero constant term."""


class DivisionByZeroPoly(TsrError):
    """Polynomial division by the zero polynomial."""


class NotCoprime(TsrError):
    """The two polynomials share a nonconstant common factor."""


class ZeroDenominator(TsrError):
    """The denominator polynomial is zero."""


# --- matrices / registers ---

class DimensionMismatch(TsrError):
    """State or matrix dimensions are inconsistent with the register."""


class SingularMatrix(TsrError):
    """An invertible matrix was required."""


# --- enumeration ---

class EnumerationTooLarge(TsrError):
    """An exhaustive scan would exceed its guard."""


class ReducibleInput(TsrError):
    """A monic irreducible polynomial was required."""


class DegreeOutOfRange(TsrError):
    """Polynomial degrees outside the supported range for this operation."""


class BadShape(TsrError):
    """Input polynomial does not have the required shape."""


# --- formulas ---

class NotPrimePower(TsrError):
    """q is not a prime power."""


class FactorizationCap(TsrError):
    """Trial-division factorization gave up on a composite remainder."""


class UnknownConstant(TsrError):
    """The asymptotic constant is not determined for these parameters."""


class MOutOfRange(TsrError):
    """The block size m is outside the formula's domain."""
