"""Exact real-root counting, isolation and interval refinement.

Everything here works over exact rationals: Sturm sequences decide root
counts, bisection refines isolating intervals.  No floating point enters
any decision.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import AmbiguousInterval
from .polynomial import RationalPolynomial


def sturm_sequence(poly: RationalPolynomial) -> list[RationalPolynomial]:
    """Sturm chain of the squarefree part of ``poly``."""
    f = poly.squarefree_part()
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(chain: list[RationalPolynomial], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p.evaluate(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(poly: RationalPolynomial, lo: Fraction, hi: Fraction,
                     chain: list[RationalPolynomial] | None = None) -> int:
    """Number of distinct real roots in the open interval (lo, hi).

    Endpoints must not be roots of the squarefree part.
    """
    if lo >= hi:
        return 0
    if chain is None:
        chain = sturm_sequence(poly)
    f = chain[0]
    if f.evaluate(lo) == 0 or f.evaluate(hi) == 0:
        raise ValueError("endpoint is a root; nudge the interval")
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def count_all_real_roots(poly: RationalPolynomial) -> int:
    b = poly.root_bound() + 1
    return count_real_roots(poly, -b, b)


def isolate_real_roots(poly: RationalPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, one per distinct real root.

    Rational roots are first removed exactly and returned as degenerate
    intervals around the root with irrational-root-free padding.
    """
    f = poly.squarefree_part()
    if f.degree < 1:
        return []
    chain = sturm_sequence(f)
    bound = f.root_bound() + 1
    out: list[tuple[Fraction, Fraction]] = []

    def nudge(x: Fraction, direction: int) -> Fraction:
        # Step off a root by shrinking steps until the Sturm chain's first
        # polynomial is non-zero there.
        step = Fraction(1, 2)
        while True:
            cand = x + direction * step
            if f.evaluate(cand) != 0:
                return cand
            step /= 2

    def split(lo: Fraction, hi: Fraction, n: int) -> None:
        if n <= 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if f.evaluate(mid) == 0:
            lo_m, hi_m = nudge(mid, -1), nudge(mid, +1)
            # Re-tighten so that the bracketing interval holds only mid.
            while count_real_roots(f, lo_m, hi_m, chain) > 1:
                lo_m = (lo_m + mid) / 2
                hi_m = (hi_m + mid) / 2
                if f.evaluate(lo_m) == 0:
                    lo_m = nudge((lo_m + mid) / 2, -1)
                if f.evaluate(hi_m) == 0:
                    hi_m = nudge((hi_m + mid) / 2, +1)
            split(lo, lo_m, count_real_roots(f, lo, lo_m, chain))
            out.append((lo_m, hi_m))
            split(hi_m, hi, count_real_roots(f, hi_m, hi, chain))
            return
        n_left = count_real_roots(f, lo, mid, chain)
        split(lo, mid, n_left)
        split(mid, hi, n - n_left)

    total = count_real_roots(f, -bound, bound, chain)
    split(-bound, bound, total)
    return sorted(out)


def validate_isolating_interval(poly: RationalPolynomial, lo: Fraction, hi: Fraction) -> None:
    """Check that (lo, hi) isolates exactly one real root of ``poly``."""
    if lo >= hi:
        raise AmbiguousInterval(f"empty interval ({lo}, {hi})")
    f = poly.squarefree_part()
    if f.evaluate(lo) == 0 or f.evaluate(hi) == 0:
        raise AmbiguousInterval("interval endpoint is a root")
    n = count_real_roots(f, lo, hi)
    if n != 1:
        raise AmbiguousInterval(f"interval ({lo}, {hi}) contains {n} real roots")


def refine_sign_change(poly: RationalPolynomial, lo: Fraction, hi: Fraction,
                       steps: int = 1) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root, keeping the sign change.

    Requires p(lo) * p(hi) < 0, which holds for any squarefree polynomial on
    a validated isolating interval.
    """
    flo = poly.evaluate(lo)
    for _ in range(steps):
        mid = (lo + hi) / 2
        fmid = poly.evaluate(mid)
        if fmid == 0:
            # Rational root hit exactly: shrink symmetrically around it.
            width = (hi - lo) / 8
            return (mid - width, mid + width)
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


def evaluate_on_interval(poly: RationalPolynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval extension of polynomial evaluation via Horner on endpoints."""
    acc_lo, acc_hi = Fraction(0), Fraction(0)
    for c in reversed(poly.coefficients):
        candidates = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(candidates) + c, max(candidates) + c
    return acc_lo, acc_hi
