"""Normalization of finite digit strings, and exact addition/subtraction.

A non-admissible finite string z with small value (below 1/delta, which
structurally means its first p digits vanish) always splits as
z = 0^(pj) x (+) y with x a rule left-hand side and y digitwise
non-negative; replacing x by its transcription yields a strictly
lexicographically larger representation of the same value.  Iterating
reaches the greedy expansion; the weight function certifies termination,
and a fuel bound guards the loop regardless.

Addition digitwise-adds two admissible expansions and normalizes.
Subtraction follows the borrow construction: a unit at position j can be
re-represented so that some digit at position j + k is positive, which lets
one unit of the subtrahend cancel per round.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..bases import AlternateBase
from ..errors import (
    FuelExhausted,
    NegativeResult,
    NotAdmissible,
    NotSimpleParry,
    OutOfRange,
    PrefixNotZero,
    SumOutOfRange,
)
from ..expansion import (
    DEFAULT_FUEL,
    SIMPLE_PARRY,
    admissible,
    parry_classify,
    require_parry_tseqs,
    value_of,
)
from ..words import (
    FiniteDigitString,
    digitwise_add,
    digitwise_sub,
    lex_compare,
    lex_compare_with_position,
    make_word,
    pad_left,
    shifted_tail,
    strip_left,
    unit_word,
    zero_word,
)
from .rules import RewriteRule, type1_rule, type2_rule
from .weights import WeightFunction

REWRITE_FUEL = 10_000


@dataclass(frozen=True)
class ViolationWitness:
    """Decomposition z = 0^(pj) x (+) y at the smallest violating index."""

    index: int                      # smallest shift where the tail dominates
    case: str                       # "equality" | "strict" | "pruned"
    rule: RewriteRule
    x: FiniteDigitString            # = rule.lhs
    j: int                          # block shift applied to x
    y: FiniteDigitString            # non-negative residual


@dataclass(frozen=True)
class TraceStep:
    index: int
    case: str
    rule_id: str
    j: int
    x: FiniteDigitString
    y: FiniteDigitString
    before: FiniteDigitString
    after: FiniteDigitString
    weight_before: int | None
    weight_after: int | None


@dataclass
class AdditionTrace:
    """Rewriting steps; strings are recorded with the 0^p working prefix."""

    padding: int
    steps: list[TraceStep] = dc_field(default_factory=list)

    def stripped(self, word: FiniteDigitString) -> FiniteDigitString:
        return strip_left(word, self.padding)

    def stripped_strings(self) -> list[tuple[str, str]]:
        return [(str(self.stripped(s.before)), str(self.stripped(s.after)))
                for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def find_violation(base: AlternateBase, s: FiniteDigitString,
                   pruned: bool = True, fuel: int = DEFAULT_FUEL) -> ViolationWitness | None:
    """Locate the smallest non-admissible index and decompose the string.

    Returns None when the string is admissible.  A violation inside the
    first p positions cannot be decomposed (the block shift would be
    negative); it only occurs when the value is not below 1/delta, which the
    rewriting loop rules out by padding, so it raises PrefixNotZero.  In
    pruned mode a strict violation falling beyond the support of a finite
    expansion of 1 is converted to the type 2 decomposition, with the
    surplus unit moved into the residual.
    """
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    for i in range(1, len(s.digits) + 1):
        t = seqs[(i - 1) % p]
        tail = shifted_tail(s, i)
        verdict, position = lex_compare_with_position(tail, t)
        if verdict < 0:
            continue
        if i <= p:
            raise PrefixNotZero(
                f"violation at position {i} <= {p}: the string is not below "
                f"1/delta, so no block-shifted rule applies"
            )
        ell = (i - 1) % p + 1
        j = (i - p - ell) // p
        if verdict == 0:
            rule = type2_rule(seqs, p, ell)
            y = digitwise_sub(s, pad_left(rule.lhs, p * j))
            return ViolationWitness(index=i, case="equality", rule=rule,
                                    x=rule.lhs, j=j, y=y)
        # Strict case: minimal n with s_i..s_{i+n} > t_1..t_{n+1}; the first
        # difference sits at offset n + 1.
        n = position - 1
        k, i_off = divmod(n, p)
        i_off += 1
        t_ell = seqs[(ell - 1) % p]
        if pruned and isinstance(t_ell, FiniteDigitString) \
                and p * k + i_off >= len(t_ell.digits):
            rule = type2_rule(seqs, p, ell)
            y = digitwise_sub(s, pad_left(rule.lhs, p * j))
            return ViolationWitness(index=i, case="pruned", rule=rule,
                                    x=rule.lhs, j=j, y=y)
        rule = type1_rule(seqs, p, ell, i_off, k)
        y = digitwise_sub(s, pad_left(rule.lhs, p * j))
        return ViolationWitness(index=i, case="strict", rule=rule,
                                x=rule.lhs, j=j, y=y)
    return None


def normalize(base: AlternateBase, s: FiniteDigitString, fuel: int = REWRITE_FUEL,
              pruned: bool = True, weight: WeightFunction | None = None,
              tseq_fuel: int = DEFAULT_FUEL) -> tuple[FiniteDigitString, AdditionTrace]:
    """Rewrite a finite string into the admissible expansion of its value.

    The string is padded with p zeros so the small-value guard holds along
    the whole run, and the provably-zero prefix is stripped at the end.
    Explicit bases verify value < 1 exactly; symbolic callers assert it.
    """
    p = base.period
    if base.is_explicit and value_of(base, s).compare(1) >= 0:
        raise OutOfRange("normalization needs value < 1")
    trace = AdditionTrace(padding=p)
    z = pad_left(s, p)
    for _ in range(fuel):
        witness = find_violation(base, z, pruned=pruned, fuel=tseq_fuel)
        if witness is None:
            return strip_left(z, p), trace
        replacement = digitwise_add(pad_left(witness.rule.rhs, p * witness.j), witness.y)
        trace.steps.append(TraceStep(
            index=witness.index,
            case=witness.case,
            rule_id=witness.rule.rule_id,
            j=witness.j,
            x=witness.x,
            y=witness.y,
            before=z,
            after=replacement,
            weight_before=weight.weight_of(z) if weight else None,
            weight_after=weight.weight_of(replacement) if weight else None,
        ))
        z = replacement
    raise FuelExhausted(f"normalization did not finish in {fuel} steps", partial=trace)


def _require_admissible(base: AlternateBase, word: FiniteDigitString, fuel: int, name: str) -> None:
    ok, witness = admissible(base, word, fuel)
    if not ok:
        raise NotAdmissible(f"{name} is not admissible (violation at shift {witness})")


def add(base: AlternateBase, a: FiniteDigitString, b: FiniteDigitString,
        fuel: int = REWRITE_FUEL, tseq_fuel: int = DEFAULT_FUEL) -> FiniteDigitString:
    """Admissible expansion of the sum of two admissible expansions."""
    result, _ = add_with_trace(base, a, b, fuel, tseq_fuel)
    return result


def add_with_trace(base: AlternateBase, a: FiniteDigitString, b: FiniteDigitString,
                   fuel: int = REWRITE_FUEL, tseq_fuel: int = DEFAULT_FUEL
                   ) -> tuple[FiniteDigitString, AdditionTrace]:
    _require_admissible(base, a, tseq_fuel, "left addend")
    _require_admissible(base, b, tseq_fuel, "right addend")
    total = digitwise_add(a, b)
    if base.is_explicit:
        if value_of(base, total).compare(1) >= 0:
            raise SumOutOfRange("the exact sum is not below 1")
    return normalize(base, total, fuel, tseq_fuel=tseq_fuel)


def borrow_representation(base: AlternateBase, j: int, k: int,
                          fuel: int = DEFAULT_FUEL) -> FiniteDigitString:
    """A finite representation of the value of 0^(j-1) 1 0^w whose digit at
    position j + k is at least 1.

    Built by k successive borrows: trade the unit at position j + m for the
    expansion of 1 spliced in starting at position j + m + 1 (whose leading
    digit is >= 1), keeping the value fixed at every step.
    """
    if j < 1 or k < 0:
        raise ValueError("need j >= 1 and k >= 0")
    if parry_classify(base, fuel) != SIMPLE_PARRY:
        raise NotSimpleParry("borrowing splices finite expansions of 1")
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    digits = list(unit_word(j).digits)
    for m in range(k):
        pos = j + m
        assert digits[pos - 1] >= 1
        digits[pos - 1] -= 1
        t = seqs[pos % p]          # expansion of 1 at shift pos + 1
        splice = t.digits
        needed = pos + len(splice)
        digits.extend([0] * (needed - len(digits)))
        for offset, d in enumerate(splice):
            digits[pos + offset] += d
    word = make_word(digits)
    assert word.digit(j + k) >= 1
    return word


@dataclass(frozen=True)
class SubtractionStep:
    j: int
    k: int
    borrowed: FiniteDigitString
    minuend: FiniteDigitString
    subtrahend: FiniteDigitString


def subtract(base: AlternateBase, a: FiniteDigitString, b: FiniteDigitString,
             fuel: int = REWRITE_FUEL, tseq_fuel: int = DEFAULT_FUEL) -> FiniteDigitString:
    """Admissible expansion of the difference of two admissible expansions."""
    result, _ = subtract_with_trace(base, a, b, fuel, tseq_fuel)
    return result


def subtract_with_trace(base: AlternateBase, a: FiniteDigitString, b: FiniteDigitString,
                        fuel: int = REWRITE_FUEL, tseq_fuel: int = DEFAULT_FUEL
                        ) -> tuple[FiniteDigitString, list[SubtractionStep]]:
    """Peel one unit of the subtrahend per round via the borrow construction.

    Admissible expansions order lexicographically exactly as their values,
    so the sign check works in symbolic mode too.
    """
    if parry_classify(base, tseq_fuel) != SIMPLE_PARRY:
        raise NotSimpleParry("subtraction needs all expansions of 1 finite")
    _require_admissible(base, a, tseq_fuel, "minuend")
    _require_admissible(base, b, tseq_fuel, "subtrahend")
    order = lex_compare(a, b)
    if order < 0:
        raise NegativeResult("minuend is below subtrahend")
    if order == 0:
        return zero_word(), []
    steps: list[SubtractionStep] = []
    x, y = a, b
    while not y.is_zero():
        j = x.leading_support()
        jy = y.leading_support()
        k = jy - j
        assert k >= 0, "admissible order guarantees the minuend leads"
        x_rest = digitwise_sub(x, unit_word(j))
        y = digitwise_sub(y, unit_word(jy))
        borrowed = borrow_representation(base, j, k, tseq_fuel)
        piece = digitwise_sub(borrowed, unit_word(j + k))
        x, _ = normalize(base, digitwise_add(x_rest, piece), fuel, tseq_fuel=tseq_fuel)
        steps.append(SubtractionStep(j=j, k=k, borrowed=borrowed,
                                     minuend=x, subtrahend=y))
        if y.is_zero():
            break
        order = lex_compare(x, y)
        if order < 0:
            raise NegativeResult("difference went negative")
        if order == 0:
            return zero_word(), steps
    return x, steps
