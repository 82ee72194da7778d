"""Alternate bases: periodic sequences of real bases greater than one.

A base is either *explicit* (algebraic numbers beta_1..beta_p in one real
algebraic field, with the period product delta cached exactly) or *symbolic*
(only the digit sequences of the expansions of 1 are known).  Symbolic bases
support every digit-combinatorial operation; value computations need the
explicit form.

Shifting rotates the base: shift ell gives (beta_ell, ..., beta_{ell+p-1})
with indices cycling through {1..p}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .algebraic.field import FieldElement, RealAlgebraicField
from .errors import (
    BetaNotGreaterThanOne,
    EmptyExpansion,
    FieldMismatch,
    LexInconsistent,
    SymbolicModeUnsupported,
)
from .words import EPWord, FiniteDigitString, Word, lex_compare, shifted_tail


@dataclass(frozen=True)
class AlternateBase:
    period: int
    betas: tuple[FieldElement, ...] | None
    t_seqs: tuple[Word, ...] | None
    field: RealAlgebraicField | None
    delta: FieldElement | None

    @property
    def is_explicit(self) -> bool:
        return self.betas is not None

    def beta(self, n: int) -> FieldElement:
        """beta_n with the index taken cyclically (1-based)."""
        if not self.is_explicit:
            raise SymbolicModeUnsupported("symbolic base has no explicit entries")
        return self.betas[(n - 1) % self.period]

    def stored_t(self, ell: int) -> Word:
        """Stored digit sequence for shift ell (symbolic mode)."""
        if self.t_seqs is None:
            raise SymbolicModeUnsupported("no stored digit sequences")
        return self.t_seqs[(ell - 1) % self.period]

    def __str__(self) -> str:
        kind = "explicit" if self.is_explicit else "symbolic"
        return f"AlternateBase(p={self.period}, {kind})"


def base_new_explicit(field: RealAlgebraicField, betas) -> AlternateBase:
    """Validated explicit base; every entry must exceed 1 in the field order."""
    betas = tuple(betas)
    if not betas:
        raise ValueError("base must have at least one entry")
    for i, b in enumerate(betas, start=1):
        if not isinstance(b, FieldElement) or b.field is not field:
            raise FieldMismatch(f"entry {i} does not live in the given field")
        if b.compare(1) <= 0:
            raise BetaNotGreaterThanOne(i)
    delta = field.one
    for b in betas:
        delta = delta * b
    return AlternateBase(period=len(betas), betas=betas, t_seqs=None,
                         field=field, delta=delta)


def _consistency_depth(t_seqs: tuple[Word, ...], p: int) -> int:
    max_pre = max(
        len(t.digits) if isinstance(t, FiniteDigitString) else len(t.preperiod)
        for t in t_seqs
    )
    periods = [len(t.period) if isinstance(t, EPWord) else 1 for t in t_seqs]
    return max_pre + lcm(*periods, p) + p


def base_new_symbolic(t_seqs) -> AlternateBase:
    """Validated symbolic base from the digit sequences of the expansions of 1.

    Each sequence must start with a digit >= 1, and every shifted tail must
    stay lexicographically at or below the sequence of the matching shift,
    strictly unless the tail is the whole word.  The check scans far enough
    to cover all (tail, shift) states; it is a necessary condition for the
    sequences to arise from an actual base, documented as possibly
    incomplete for exotic inputs.
    """
    seqs = tuple(t_seqs)
    if not seqs:
        raise ValueError("base must have at least one digit sequence")
    p = len(seqs)
    for ell, t in enumerate(seqs, start=1):
        if t.digit(1) < 1:
            raise EmptyExpansion(f"sequence {ell} starts with digit 0")
    if all(isinstance(t, FiniteDigitString) and t.digits == (1,) for t in seqs):
        # d(1) = 10^w for every shift would force every base entry to be 1.
        raise EmptyExpansion("all sequences are 10^w, which no base > 1 realizes")
    depth = _consistency_depth(seqs, p)
    for ell in range(1, p + 1):
        t = seqs[ell - 1]
        for n in range(1, depth + 1):
            tail = shifted_tail(t, n)
            target = seqs[(ell + n - 2) % p]
            order = lex_compare(tail, target)
            if order > 0 or (order == 0 and n > 1):
                raise LexInconsistent(ell, n)
    return AlternateBase(period=p, betas=None, t_seqs=seqs, field=None, delta=None)


def shift(base: AlternateBase, ell: int) -> AlternateBase:
    """The base rotated to start at position ell; shift by p is the identity."""
    offset = (ell - 1) % base.period
    if offset == 0:
        return base
    if base.is_explicit:
        rotated = base.betas[offset:] + base.betas[:offset]
        return AlternateBase(period=base.period, betas=rotated, t_seqs=None,
                             field=base.field, delta=base.delta)
    rotated_t = base.t_seqs[offset:] + base.t_seqs[:offset]
    return AlternateBase(period=base.period, betas=None, t_seqs=rotated_t,
                         field=None, delta=None)


def approximate_betas(base: AlternateBase, dps: int = 50, terms: int = 400):
    """Diagnostic numeric solve for the base entries of a symbolic base.

    Finds floating approximations b_1..b_p with each truncated series
    sum_n t_n^(l) / (b_l ... b_{l+n-1}) close to 1, and reports the largest
    residual.  This is a high-precision diagnostic only, never an exact
    oracle: recovering the entries exactly would require multivariate
    elimination, which is out of scope.

    Returns (approximations, max_residual) as mpmath values.
    """
    import mpmath

    if base.t_seqs is None:
        raise SymbolicModeUnsupported("numeric recovery applies to symbolic bases")
    p = base.period

    def value_residuals(*bs):
        out = []
        for ell in range(1, p + 1):
            t = base.stored_t(ell)
            total = mpmath.mpf(0)
            prod = mpmath.mpf(1)
            for n in range(1, terms + 1):
                prod *= bs[(ell - 1 + n - 1) % p]
                total += t.digit(n) / prod
            out.append(total - 1)
        return out

    with mpmath.workdps(dps):
        start = [mpmath.mpf(base.stored_t(ell).digit(1)) + mpmath.mpf("0.5")
                 for ell in range(1, p + 1)]
        solution = mpmath.findroot(value_residuals, start)
        betas = [solution[i] for i in range(p)]
        residual = max(abs(r) for r in value_residuals(*betas))
    return betas, residual
