"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored constant-term first.  The zero polynomial has an
empty coefficient tuple; otherwise the leading coefficient is non-zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalPolynomial:
    coefficients: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable) -> "RationalPolynomial":
        return RationalPolynomial(_trim([Fraction(c) for c in coeffs]))

    @staticmethod
    def zero() -> "RationalPolynomial":
        return RationalPolynomial(())

    @staticmethod
    def x_minus(c) -> "RationalPolynomial":
        return RationalPolynomial.from_coeffs([-Fraction(c), 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return self.coefficients[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero() or self.is_monic():
            return self
        lc = self.leading
        return RationalPolynomial(tuple(c / lc for c in self.coefficients))

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = list(self.coefficients) + [Fraction(0)] * (n - len(self.coefficients))
        b = list(other.coefficients) + [Fraction(0)] * (n - len(other.coefficients))
        return RationalPolynomial(_trim([x + y for x, y in zip(a, b)]))

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalPolynomial.zero()
            return RationalPolynomial(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return RationalPolynomial(_trim(out))

    __rmul__ = __mul__

    def divmod(self, other: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        den = other.coefficients
        q: list[Fraction] = [Fraction(0)] * max(0, len(rem) - len(den) + 1)
        inv_lc = 1 / den[-1]
        while len(rem) >= len(den):
            coeff = rem[-1] * inv_lc
            shift = len(rem) - len(den)
            q[shift] = coeff
            for i, d in enumerate(den):
                rem[shift + i] -= coeff * d
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return RationalPolynomial(_trim(q)), RationalPolynomial(_trim(rem))

    def __mod__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self.divmod(other)[1]

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            _trim([i * c for i, c in enumerate(self.coefficients)][1:])
        )

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def compose_shift(self, a: Fraction) -> "RationalPolynomial":
        """The polynomial p(x + a)."""
        result = RationalPolynomial.zero()
        shift = RationalPolynomial.from_coeffs([a, 1])
        power = RationalPolynomial.from_coeffs([1])
        for c in self.coefficients:
            result = result + power * c
            power = power * shift
        return result

    def reciprocal(self) -> "RationalPolynomial":
        """x^deg * p(1/x): the coefficient sequence reversed."""
        return RationalPolynomial(_trim(list(reversed(self.coefficients))))

    def gcd(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def is_squarefree(self) -> bool:
        d = self.derivative()
        if d.is_zero():
            return self.degree <= 0
        return self.gcd(d).degree == 0

    def squarefree_part(self) -> "RationalPolynomial":
        d = self.derivative()
        if d.is_zero():
            return self.monic()
        g = self.gcd(d)
        if g.degree == 0:
            return self.monic()
        return self.divmod(g)[0].monic()

    def primitive_integer(self) -> tuple[int, ...]:
        """Integer coefficients with content 1 and positive leading term."""
        if self.is_zero():
            return ()
        mult = 1
        for c in self.coefficients:
            mult = mult * c.denominator // gcd(mult, c.denominator)
        ints = [int(c * mult) for c in self.coefficients]
        content = 0
        for v in ints:
            content = gcd(content, v)
        ints = [v // content for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def root_bound(self) -> Fraction:
        """Cauchy bound: all complex roots have modulus below this."""
        if self.degree < 1:
            return Fraction(1)
        lc = abs(self.leading)
        return 1 + max(abs(c) / lc for c in self.coefficients[:-1])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms)


def _is_rational_square(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if it is not a square."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_roots(poly: RationalPolynomial) -> list[Fraction]:
    """All rational roots, found by the rational-root test on the primitive form."""
    if poly.degree < 1:
        return []
    ints = poly.primitive_integer()
    # Strip powers of x first: zero roots.
    roots = []
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        ints = ints[k:]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n: int) -> list[int]:
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.append(i)
                out.append(n // i)
            i += 1
        return out

    seen = set()
    reduced = RationalPolynomial.from_coeffs(ints)
    for p in divisors(a0):
        for q in divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * p, q)
                if cand in seen:
                    continue
                seen.add(cand)
                if reduced.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _quartic_splits_into_quadratics(poly: RationalPolynomial) -> bool:
    """Whether a monic rational quartic factors into two rational quadratics.

    Uses the resolvent cubic of the depressed quartic: a factorization
    (y^2+uy+v)(y^2-uy+w) exists over the rationals iff the resolvent has a
    rational root z = u^2 that is a rational square and yields rational v, w.
    """
    p = poly.monic()
    a = p.coefficients[3]
    depressed = p.compose_shift(-a / 4)
    # depressed: y^4 + P*y^2 + Q*y + R  (length-5 coefficient tuple, monic)
    R = depressed.coefficients[0]
    Q = depressed.coefficients[1]
    P = depressed.coefficients[2]
    resolvent = RationalPolynomial.from_coeffs([-Q * Q, P * P - 4 * R, 2 * P, 1])
    for z in rational_roots(resolvent):
        if z < 0:
            continue
        u = _is_rational_square(z)
        if u is None:
            continue
        if u == 0:
            # Q must vanish here; split needs P^2 - 4R to be a square.
            disc = _is_rational_square(P * P - 4 * R)
            if disc is not None:
                return True
            continue
        v = (P + z - Q / u) / 2
        w = (P + z + Q / u) / 2
        if v * w == R:
            return True
    return False


def is_irreducible(poly: RationalPolynomial) -> bool | None:
    """Exact irreducibility over the rationals where decidable.

    Degrees 1-4 are decided exactly (rational-root test, plus the quadratic
    split test for quartics).  For degree >= 5 only the rational-root test
    runs; ``None`` means "no factor detected but irreducibility unverified".
    """
    d = poly.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if rational_roots(poly):
        return False
    if d <= 3:
        return True
    if d == 4:
        return not _quartic_splits_into_quadratics(poly)
    return None


def circle_root_transform(poly: RationalPolynomial) -> RationalPolynomial:
    """Map roots to w = z + 1/z: returns C with C(w0) = 0 iff some root z of
    ``poly`` satisfies z^2 - w0*z + 1 = 0.

    Real roots of C inside (-2, 2) correspond exactly to conjugate pairs of
    roots of ``poly`` on the unit circle; C(2) = p(1)^2 and C(-2) = p(-1)^2.
    Computed via power sums s_m = z^m + z^-m (s_0 = 2, s_1 = w,
    s_m = w*s_{m-1} - s_{m-2}).
    """
    a = poly.monic().coefficients
    d = len(a) - 1
    c = [sum(a[j] * a[j + m] for j in range(d + 1 - m)) for m in range(d + 1)]
    w = RationalPolynomial.from_coeffs([0, 1])
    s_prev = RationalPolynomial.from_coeffs([2])
    s_cur = w
    total = RationalPolynomial.from_coeffs([c[0]])
    for m in range(1, d + 1):
        total = total + s_cur * c[m]
        s_prev, s_cur = s_cur, w * s_cur - s_prev
    return total
