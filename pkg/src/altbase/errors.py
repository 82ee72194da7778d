"""Exception hierarchy for the altbase package."""

from __future__ import annotations


class AltbaseError(Exception):
    """Base class for all errors raised by this package."""


# --- algebraic layer ---------------------------------------------------------

class NotSquarefree(AltbaseError):
    """The polynomial shares a nontrivial factor with its derivative."""


class NotIrreducible(AltbaseError):
    """The polynomial has a detectable nontrivial rational factorization."""


class AmbiguousInterval(AltbaseError):
    """The given interval does not isolate exactly one real root."""


class FieldMismatch(AltbaseError):
    """Operands belong to different number fields."""


class DivisionByZero(AltbaseError, ZeroDivisionError):
    """Division by the zero element of a field."""


class NotGreaterThanOne(AltbaseError):
    """The dominant real root is not greater than one."""


# --- bases -------------------------------------------------------------------

class BetaNotGreaterThanOne(AltbaseError):
    """Some base entry is not greater than one.  ``index`` is 1-based."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"base entry {index} is not > 1")


class EmptyExpansion(AltbaseError):
    """A digit sequence for 1 starts with a zero digit."""


class LexInconsistent(AltbaseError):
    """Symbolic digit sequences fail the shifted-tail ordering check.

    ``ell`` and ``shift`` give a witness: the tail of sequence ``ell``
    starting at position ``shift`` dominates the sequence it must stay below.
    """

    def __init__(self, ell: int, shift: int, message: str | None = None):
        self.ell = ell
        self.shift = shift
        super().__init__(message or f"sequence {ell} violates the tail ordering at shift {shift}")


# --- expansion ---------------------------------------------------------------

class SymbolicModeUnsupported(AltbaseError):
    """Operation needs explicit algebraic base entries."""


class OutOfRange(AltbaseError):
    """Argument outside the unit-interval domain of the operation."""


class NotParry(AltbaseError):
    """The expansions of 1 are not all (known to be) eventually periodic."""


# --- rewriting ---------------------------------------------------------------

class GfsViolated(AltbaseError):
    """The descending digit-chain condition fails.  Witness: (ell, position)."""

    def __init__(self, ell: int, position: int, message: str | None = None):
        self.ell = ell
        self.position = position
        super().__init__(message or f"digit chain for shift {ell} increases at position {position}")


class NegativeRhsDigit(AltbaseError):
    """Internal consistency failure: a transcription produced a negative digit."""


class PrefixNotZero(AltbaseError):
    """The string does not satisfy the small-value guard (leading zeros)."""


class FuelExhausted(AltbaseError):
    """An iteration budget ran out.  ``partial`` carries progress so far."""

    def __init__(self, message: str = "fuel exhausted", partial=None):
        self.partial = partial
        super().__init__(message)


class SumOutOfRange(AltbaseError):
    """The exact sum of the operands is not below 1."""


class NotSimpleParry(AltbaseError):
    """Operation requires all expansions of 1 to be finite."""


class NegativeResult(AltbaseError):
    """Subtraction would produce a negative value."""


class NotAdmissible(AltbaseError):
    """An input expansion fails the admissibility criterion."""


class NoWeightFound(AltbaseError):
    """No positive periodic integer weighting satisfies the rule constraints."""


# --- cli ---------------------------------------------------------------------

class DigitStringSyntaxError(AltbaseError):
    """Malformed digit-string literal.  ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class BaseFileError(AltbaseError):
    """Malformed or inconsistent base definition file."""
