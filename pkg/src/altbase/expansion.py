"""Expansions in alternate bases: greedy digits, values, admissibility.

The greedy algorithm maps x in [0, 1] to its expansion digit by digit:
d_1 = floor(b_1 x), r_1 = b_1 x - d_1, then d_n = floor(b_n r_{n-1}) and
r_n = b_n r_{n-1} - d_n.  Remainders are exact field elements, so a state
(remainder, phase) repeating is detected exactly and yields an eventually
periodic word; a zero remainder yields a finite word.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .algebraic.field import FieldElement
from .bases import AlternateBase, shift
from .errors import NotParry, OutOfRange, SymbolicModeUnsupported
from .words import (
    EPWord,
    FiniteDigitString,
    Word,
    lex_compare,
    make_word,
    shifted_tail,
)

DEFAULT_FUEL = 10_000


@dataclass(frozen=True)
class GreedyState:
    """Resumable greedy-loop state: exact remainder and 1-based phase."""

    remainder: FieldElement
    phase: int


@dataclass(frozen=True)
class Truncated:
    """Greedy output cut off by the fuel bound; carries raw digits so far."""

    digits: tuple[int, ...]
    state: GreedyState


def value_of(base: AlternateBase, word: Word) -> FieldElement:
    """Exact value sum(d_n / (b_1 ... b_n)) for finite or eventually
    periodic words.

    For an eventually periodic word the period is first padded to a
    multiple of the base period p, so the repeating tail is a geometric
    series with ratio 1/delta.
    """
    if not base.is_explicit:
        raise SymbolicModeUnsupported("values require an explicit base")
    field = base.field
    p = base.period
    if isinstance(word, FiniteDigitString):
        total = field.zero
        weight = field.one
        for n, d in enumerate(word.digits, start=1):
            weight = weight / base.beta(n)
            if d:
                total = total + weight * d
        return total
    pre, per = word.preperiod, word.period
    padded_len = lcm(len(per), p)
    padded = tuple(per[i % len(per)] for i in range(padded_len))
    total = field.zero
    weight = field.one
    for n, d in enumerate(pre, start=1):
        weight = weight / base.beta(n)
        if d:
            total = total + weight * d
    # weight is now 1/(b_1..b_a); accumulate one padded period exactly.
    tail = field.zero
    w = weight
    for i, d in enumerate(padded, start=1):
        w = w / base.beta(len(pre) + i)
        if d:
            tail = tail + w * d
    ratio_power = padded_len // p
    delta_pow = base.delta ** ratio_power
    geometric = delta_pow / (delta_pow - 1)
    return total + tail * geometric


def greedy_expand(base: AlternateBase, x, fuel: int = DEFAULT_FUEL):
    """Greedy expansion of x in [0, 1].

    Returns a FiniteDigitString when a remainder hits zero, an EPWord when a
    (remainder, phase) state repeats, or Truncated when fuel runs out.
    """
    if not base.is_explicit:
        raise SymbolicModeUnsupported("greedy expansion requires an explicit base")
    field = base.field
    if isinstance(x, (int, Fraction)):
        x = field.from_rational(x)
    if x.compare(0) < 0 or x.compare(1) > 0:
        raise OutOfRange("greedy expansion is defined on [0, 1]")
    digits: list[int] = []
    seen: dict[tuple, int] = {}
    r = x
    phase = 1
    for step in range(fuel):
        if r.is_zero():
            return make_word(digits)
        key = (r.coords, phase)
        if key in seen:
            start = seen[key]
            return make_word(digits[:start], digits[start:])
        seen[key] = step
        scaled = base.beta(phase) * r
        d = scaled.floor()
        digits.append(d)
        r = scaled - d
        phase = phase % base.period + 1
    return Truncated(tuple(digits), GreedyState(r, phase))


def expansion_of_one(base: AlternateBase, ell: int = 1, fuel: int = DEFAULT_FUEL):
    """The expansion of 1 in the base shifted to start at position ell."""
    if not base.is_explicit:
        return base.stored_t(ell)
    return greedy_expand(shift(base, ell), base.field.one, fuel)


def all_expansions_of_one(base: AlternateBase, fuel: int = DEFAULT_FUEL) -> list:
    return [expansion_of_one(base, ell, fuel) for ell in range(1, base.period + 1)]


_TSEQ_CACHE: "weakref.WeakKeyDictionary[AlternateBase, tuple[Word, ...]]" = weakref.WeakKeyDictionary()


def require_parry_tseqs(base: AlternateBase, fuel: int = DEFAULT_FUEL) -> tuple[Word, ...]:
    """All p expansions of 1 as words; NotParry if any is undetermined.

    Results are cached per base object (they are immutable)."""
    cached = _TSEQ_CACHE.get(base)
    if cached is not None:
        return cached
    seqs = []
    for ell in range(1, base.period + 1):
        t = expansion_of_one(base, ell, fuel)
        if isinstance(t, Truncated):
            raise NotParry(
                f"expansion of 1 at shift {ell} shows no finite or periodic "
                f"pattern within {fuel} steps"
            )
        seqs.append(t)
    result = tuple(seqs)
    _TSEQ_CACHE[base] = result
    return result


# Tri-state outcome of Parry classification.
SIMPLE_PARRY = "SimpleParry"
NON_SIMPLE_PARRY = "NonSimpleParry"
PARRY_UNKNOWN = "Unknown"


def parry_classify(base: AlternateBase, fuel: int = DEFAULT_FUEL) -> str:
    """SimpleParry if every expansion of 1 is finite, NonSimpleParry if all
    are eventually periodic with some infinite, Unknown if fuel ran out."""
    seqs = all_expansions_of_one(base, fuel)
    if any(isinstance(t, Truncated) for t in seqs):
        return PARRY_UNKNOWN
    if all(isinstance(t, FiniteDigitString) for t in seqs):
        return SIMPLE_PARRY
    return NON_SIMPLE_PARRY


def quasi_greedy_of_one(base: AlternateBase, ell: int = 1,
                        fuel: int = DEFAULT_FUEL) -> EPWord:
    """The quasi-greedy expansion of 1 at shift ell.

    For an infinite expansion of 1 this is the expansion itself.  For a
    finite one, w_1..w_n, it is w_1..w_{n-1}(w_n - 1) followed by the
    quasi-greedy expansion at shift ell + n; the recursion cycles through at
    most p shift states, so it resolves to an eventually periodic word.
    """
    seqs = require_parry_tseqs(base, fuel)
    p = base.period

    prefix: list[int] = []
    seen_at: dict[int, int] = {}
    state = (ell - 1) % p + 1
    while True:
        if state in seen_at:
            start = seen_at[state]
            word = make_word(prefix[:start], prefix[start:])
            assert isinstance(word, EPWord), "quasi-greedy words never terminate"
            return word
        t = seqs[state - 1]
        if isinstance(t, EPWord):
            pre = tuple(prefix) + t.preperiod
            return make_word(pre, t.period)  # type: ignore[return-value]
        seen_at[state] = len(prefix)
        digits = t.digits
        n = len(digits)
        prefix.extend(digits[:-1])
        prefix.append(digits[-1] - 1)
        state = (state + n - 1) % p + 1


def admissible(base: AlternateBase, word: Word, fuel: int = DEFAULT_FUEL):
    """Admissibility of a digit word, with the smallest violating shift.

    Finite words are tested against the expansions of 1 (strict inequality
    of every shifted tail); infinite eventually periodic words against the
    quasi-greedy expansions.  Returns (ok, witness); witness is None when
    admissible.
    """
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    if isinstance(word, FiniteDigitString):
        bound = len(word.digits)
        for n in range(1, bound + 1):
            tail = shifted_tail(word, n)
            if lex_compare(tail, seqs[(n - 1) % p]) >= 0:
                return False, n
        return True, None
    quasi = [quasi_greedy_of_one(base, ell, fuel) for ell in range(1, p + 1)]
    bound = len(word.preperiod) + lcm(len(word.period), p)
    for n in range(1, bound + 1):
        tail = shifted_tail(word, n)
        if lex_compare(tail, quasi[(n - 1) % p]) >= 0:
            return False, n
    return True, None
