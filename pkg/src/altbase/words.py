"""Digit words: finite strings and eventually periodic words.

A digit word is an infinite sequence of non-negative integers.  Two shapes
are materialized:

* :class:`FiniteDigitString` -- finitely many non-zero digits; the logical
  word is the stored digits followed by zeros forever.  Canonical form has
  no trailing zeros.
* :class:`EPWord` -- preperiod followed by an infinitely repeated period.
  Canonical form has a primitive period and a minimal preperiod, so two
  words are equal exactly when their canonical dataclasses are equal.

Positions are 1-based throughout, matching the usual numeration-system
indexing of digit sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterator, Union

from .errors import DigitStringSyntaxError


@dataclass(frozen=True)
class FiniteDigitString:
    """A finite-support digit word (digits then zeros forever)."""

    digits: tuple[int, ...]

    def digit(self, n: int) -> int:
        """Digit at 1-based position ``n``."""
        if n < 1:
            raise IndexError("positions are 1-based")
        return self.digits[n - 1] if n <= len(self.digits) else 0

    @property
    def support_length(self) -> int:
        return len(self.digits)

    @property
    def is_finite(self) -> bool:
        return True

    def is_zero(self) -> bool:
        return not self.digits

    def digit_sum(self) -> int:
        return sum(self.digits)

    def leading_support(self) -> int:
        """1-based position of the first non-zero digit (0 for the zero word)."""
        for n, d in enumerate(self.digits, start=1):
            if d:
                return n
        return 0

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self.digit(i) for i in range(1, n + 1))

    def __str__(self) -> str:
        return format_digit_string(self)


@dataclass(frozen=True)
class EPWord:
    """An eventually periodic digit word with a non-vanishing period."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def digit(self, n: int) -> int:
        if n < 1:
            raise IndexError("positions are 1-based")
        if n <= len(self.preperiod):
            return self.preperiod[n - 1]
        return self.period[(n - len(self.preperiod) - 1) % len(self.period)]

    @property
    def support_length(self) -> int:
        return len(self.preperiod) + len(self.period)

    @property
    def is_finite(self) -> bool:
        return False

    def is_zero(self) -> bool:
        return False

    def __str__(self) -> str:
        return format_digit_string(self)


Word = Union[FiniteDigitString, EPWord]


def _primitive(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for d in range(1, n):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


def make_word(preperiod, period=()) -> Word:
    """Build a canonical word from raw digit lists.

    A period of zeros (or none) yields a :class:`FiniteDigitString`;
    otherwise the period is made primitive and the preperiod minimal
    (repeated tail digits are absorbed into a rotation of the period).
    """
    pre = list(int(d) for d in preperiod)
    per = list(int(d) for d in period)
    if any(d < 0 for d in pre) or any(d < 0 for d in per):
        raise ValueError("digits must be non-negative")
    if not per or not any(per):
        while pre and pre[-1] == 0:
            pre.pop()
        return FiniteDigitString(tuple(pre))
    per = list(_primitive(tuple(per)))
    while pre and pre[-1] == per[-1]:
        per = [per[-1]] + per[:-1]
        pre.pop()
    return EPWord(tuple(pre), tuple(per))


def zero_word() -> FiniteDigitString:
    return FiniteDigitString(())


def unit_word(position: int) -> FiniteDigitString:
    """The word with a single digit 1 at the given 1-based position."""
    if position < 1:
        raise ValueError("position must be >= 1")
    return FiniteDigitString((0,) * (position - 1) + (1,))


def word_digits(word: Word, count: int) -> Iterator[int]:
    for n in range(1, count + 1):
        yield word.digit(n)


def _compare_bound(u: Word, w: Word) -> int:
    pre_u = len(u.digits) if isinstance(u, FiniteDigitString) else len(u.preperiod)
    pre_w = len(w.digits) if isinstance(w, FiniteDigitString) else len(w.preperiod)
    per_u = len(u.period) if isinstance(u, EPWord) else 1
    per_w = len(w.period) if isinstance(w, EPWord) else 1
    return max(pre_u, pre_w) + lcm(per_u, per_w) + 1

def lex_compare(u: Word, w: Word) -> int:
    """Lexicographic order of two digit words: -1, 0 or 1.

    Eventually periodic words agreeing beyond the longer preperiod for a
    full common period are equal, so comparison over
    ``max(preperiods) + lcm(period lengths) + 1`` symbols is decisive.
    """
    return lex_compare_with_position(u, w)[0]


def lex_compare_with_position(u: Word, w: Word) -> tuple[int, int | None]:
    """Lexicographic order plus the 1-based position of the first difference
    (None when the words are equal)."""
    for n in range(1, _compare_bound(u, w) + 1):
        a, b = u.digit(n), w.digit(n)
        if a != b:
            return (-1 if a < b else 1), n
    return 0, None


def shifted_tail(word: Word, n: int) -> Word:
    """The word ``d_n d_{n+1} ...`` obtained by dropping ``n - 1`` digits."""
    if n < 1:
        raise ValueError("shift must be >= 1")
    if isinstance(word, FiniteDigitString):
        return make_word(word.digits[n - 1:])
    pre, per = word.preperiod, word.period
    drop = n - 1
    if drop <= len(pre):
        return make_word(pre[drop:], per)
    offset = (drop - len(pre)) % len(per)
    return make_word((), per[offset:] + per[:offset])


def digitwise_add(a: FiniteDigitString, b: FiniteDigitString) -> FiniteDigitString:
    """Componentwise sum of two finite digit strings."""
    n = max(len(a.digits), len(b.digits))
    return make_word([a.digit(i) + b.digit(i) for i in range(1, n + 1)])


def digitwise_sub(a: FiniteDigitString, b: FiniteDigitString) -> FiniteDigitString:
    """Componentwise difference; raises if any digit would go negative."""
    n = max(len(a.digits), len(b.digits))
    out = []
    for i in range(1, n + 1):
        d = a.digit(i) - b.digit(i)
        if d < 0:
            raise ValueError(f"negative digit at position {i}")
        out.append(d)
    return make_word(out)


def pad_left(word: FiniteDigitString, zeros: int) -> FiniteDigitString:
    return FiniteDigitString((0,) * zeros + word.digits) if word.digits else word


def strip_left(word: FiniteDigitString, zeros: int) -> FiniteDigitString:
    """Remove a prefix of ``zeros`` zero digits (they must all be zero)."""
    head = word.digits[:zeros]
    if any(head):
        raise ValueError("prefix is not all zeros")
    return make_word(word.digits[zeros:])


# --- literal syntax ----------------------------------------------------------
#
# DIGITS := SEQ [ "(" SEQ ")" ]
# SEQ    := run of single digits 0-9 | "[" int ("," int)* "]"
#
# The parenthesized SEQ is the repeating period; without it the word is
# finite.  The preperiod SEQ may be empty (purely periodic words).  Finite
# words are rendered with one explicit zero after the last non-zero digit,
# mirroring how such expansions are conventionally written out.


def _parse_seq(text: str, pos: int, allow_empty: bool) -> tuple[list[int], int]:
    if pos < len(text) and text[pos] == "[":
        end = text.find("]", pos)
        if end < 0:
            raise DigitStringSyntaxError("unterminated '['", pos)
        body = text[pos + 1:end]
        digits = []
        cursor = pos + 1
        for part in body.split(","):
            stripped = part.strip()
            if not stripped.isdigit():
                raise DigitStringSyntaxError("expected a non-negative integer", cursor)
            digits.append(int(stripped))
            cursor += len(part) + 1
        return digits, end + 1
    digits = []
    while pos < len(text) and text[pos].isdigit():
        digits.append(int(text[pos]))
        pos += 1
    if not digits and not allow_empty:
        raise DigitStringSyntaxError("expected digits", pos)
    return digits, pos


def parse_digit_string(text: str) -> Word:
    """Parse a digit-string literal into a canonical word."""
    text = text.strip()
    if not text:
        raise DigitStringSyntaxError("empty literal", 0)
    pre, pos = _parse_seq(text, 0, allow_empty=True)
    per: list[int] = []
    if pos < len(text) and text[pos] == "(":
        per, pos = _parse_seq(text, pos + 1, allow_empty=False)
        if pos >= len(text) or text[pos] != ")":
            raise DigitStringSyntaxError("expected ')'", pos)
        pos += 1
    if pos != len(text):
        raise DigitStringSyntaxError("trailing characters", pos)
    if not pre and not per:
        raise DigitStringSyntaxError("empty literal", 0)
    return make_word(pre, per)


def _format_seq(digits: tuple[int, ...]) -> str:
    if all(d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return "[" + ",".join(str(d) for d in digits) + "]"


def format_digit_string(word: Word) -> str:
    """Render a word; inverse of :func:`parse_digit_string` up to canonical form."""
    if isinstance(word, FiniteDigitString):
        return _format_seq(word.digits + (0,))
    head = _format_seq(word.preperiod) if word.preperiod else ""
    return f"{head}({_format_seq(word.period)})"
