"""Real algebraic number fields Q(theta) with exact element arithmetic.

A field is described by a monic irreducible rational polynomial and an
isolating interval pinning down which real root theta denotes.  Elements
are rational coordinate vectors in the power basis 1, theta, ...,
theta^(d-1).  All comparisons first try an exact decision (coordinate
equality, exact integrality) and only then refine the root interval, so
every operation terminates with a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import floor
from typing import Iterable

from ..errors import (
    AmbiguousInterval,
    DivisionByZero,
    FieldMismatch,
    NotIrreducible,
    NotSquarefree,
)
from .linalg import solve_linear
from .polynomial import RationalPolynomial, is_irreducible
from .realroots import (
    count_real_roots,
    evaluate_on_interval,
    refine_sign_change,
    validate_isolating_interval,
)


@dataclass(frozen=True, eq=False)
class RealAlgebraicField:
    """Q(theta) for theta the unique root of ``minpoly`` in ``root_interval``."""

    minpoly: RationalPolynomial
    root_interval: tuple[Fraction, Fraction]
    degree: int
    irreducibility_verified: bool
    # Monotonically shrinking enclosure of theta; single-slot cache, always a
    # sub-interval of root_interval, so concurrent readers stay correct.
    _enclosure: list[tuple[Fraction, Fraction]] = dc_field(repr=False, default_factory=list)

    def __post_init__(self):
        if not self._enclosure:
            self._enclosure.append(self.root_interval)

    # Fields are compared by identity: elements carry a reference to their
    # field, and mixing distinct field objects is an error by design.

    def element(self, coords: Iterable) -> "FieldElement":
        vec = [Fraction(c) for c in coords]
        if len(vec) > self.degree:
            raise ValueError(f"expected at most {self.degree} coordinates")
        vec += [Fraction(0)] * (self.degree - len(vec))
        return FieldElement(self, tuple(vec))

    def from_rational(self, value) -> "FieldElement":
        return self.element([Fraction(value)])

    @property
    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_rational(1)

    @property
    def generator(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.minpoly.coefficients[0])
        return self.element([0, 1])

    def enclosure(self) -> tuple[Fraction, Fraction]:
        return self._enclosure[-1]

    def refine(self, steps: int = 1) -> tuple[Fraction, Fraction]:
        """Shrink the cached enclosure of theta by bisection."""
        lo, hi = self._enclosure[-1]
        if self.degree == 1:
            theta = -self.minpoly.coefficients[0]
            width = (hi - lo) / (4 ** steps)
            new = (theta - width, theta + width)
        else:
            new = refine_sign_change(self.minpoly, lo, hi, steps)
        self._enclosure.append(new)
        if len(self._enclosure) > 8:
            del self._enclosure[:-1]
        return new


def field_create(minpoly: RationalPolynomial,
                 root_interval: tuple[Fraction, Fraction] | tuple) -> RealAlgebraicField:
    """Validate and build a real algebraic field.

    The polynomial is normalized to monic form.  Squarefreeness is always
    verified; irreducibility is decided exactly up to degree 4 and checked
    by the rational-root test beyond that (higher degrees are accepted on
    trust after isolation succeeds, and the flag records this).
    """
    if minpoly.degree < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    poly = minpoly.monic()
    if not poly.is_squarefree():
        raise NotSquarefree(f"{minpoly} is not squarefree")
    verdict = is_irreducible(poly)
    if verdict is False:
        raise NotIrreducible(f"{minpoly} factors over the rationals")
    lo, hi = Fraction(root_interval[0]), Fraction(root_interval[1])
    if poly.degree == 1:
        theta = -poly.coefficients[0]
        if not (lo <= theta <= hi):
            raise AmbiguousInterval(f"interval ({lo}, {hi}) misses the root {theta}")
    else:
        validate_isolating_interval(poly, lo, hi)
    return RealAlgebraicField(
        minpoly=poly,
        root_interval=(lo, hi),
        degree=poly.degree,
        irreducibility_verified=bool(verdict),
    )


@dataclass(frozen=True)
class FieldElement:
    """An element of a real algebraic field, in power-basis coordinates."""

    field: RealAlgebraicField
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.field.degree:
            raise ValueError("coordinate length must equal the field degree")

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coords[0]

    def as_polynomial(self) -> RationalPolynomial:
        return RationalPolynomial.from_coeffs(self.coords)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        raise TypeError(f"cannot coerce {type(other).__name__} into the field")

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        prod = self.as_polynomial() * other.as_polynomial()
        reduced = prod % self.field.minpoly
        coeffs = list(reduced.coefficients)
        coeffs += [Fraction(0)] * (self.field.degree - len(coeffs))
        return FieldElement(self.field, tuple(coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        # Extended Euclid in Q[x]: s*a + t*minpoly = gcd = constant.
        a, b = self.field.minpoly, self.as_polynomial()
        s0, s1 = RationalPolynomial.zero(), RationalPolynomial.from_coeffs([1])
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
        # a is now a non-zero constant (minpoly irreducible, b != 0).
        inv = s0 * (1 / a.coefficients[0])
        inv = inv % self.field.minpoly
        coeffs = list(inv.coefficients)
        coeffs += [Fraction(0)] * (self.field.degree - len(coeffs))
        return FieldElement(self.field, tuple(coeffs))

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ------------------------------------------------------------------

    def enclosure(self) -> tuple[Fraction, Fraction]:
        lo, hi = self.field.enclosure()
        return evaluate_on_interval(self.as_polynomial(), lo, hi)

    def sign(self) -> int:
        """Exact sign (-1, 0, 1), certified by refinement when irrational."""
        if self.is_rational():
            v = self.coords[0]
            return (v > 0) - (v < 0)
        # Irrational values are never exactly zero, so refinement decides.
        while True:
            lo, hi = self.enclosure()
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.field.refine()

    def compare(self, other) -> int:
        """Ordering under the real embedding: -1, 0 or 1."""
        other = self._coerce(other)
        diff = self - other
        if diff.is_zero():
            return 0
        return diff.sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def floor(self) -> int:
        """Greatest integer <= self, exact."""
        if self.is_rational():
            return floor(self.coords[0])
        while True:
            lo, hi = self.enclosure()
            if floor(lo) == floor(hi):
                return floor(lo)
            self.field.refine()

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


def elem_compare(a: FieldElement, b) -> int:
    return a.compare(b)


def elem_floor(a: FieldElement) -> int:
    return a.floor()


def minimal_polynomial(a: FieldElement) -> RationalPolynomial:
    """Monic rational polynomial of least degree annihilating ``a``.

    Found by exact linear algebra on the power-basis coordinates of the
    powers 1, a, a^2, ...: the first power falling in the span of the
    earlier ones yields the monic relation.
    """
    d = a.field.degree
    powers: list[FieldElement] = [a.field.one]
    for _ in range(d):
        powers.append(powers[-1] * a)
    for k in range(1, d + 1):
        matrix = [[powers[j].coords[i] for j in range(k)] for i in range(d)]
        rhs = [powers[k].coords[i] for i in range(d)]
        sol = solve_linear(matrix, rhs)
        if sol is not None:
            coeffs = [-c for c in sol] + [Fraction(1)]
            return RationalPolynomial.from_coeffs(coeffs)
    raise AssertionError("unreachable: degree-d power relation always exists")


def isolating_interval_for(a: FieldElement,
                           poly: RationalPolynomial) -> tuple[Fraction, Fraction]:
    """An interval around the real value of ``a`` isolating it among the
    roots of ``poly`` (which must vanish at ``a``)."""
    f = poly.squarefree_part()
    if a.is_rational():
        v = a.as_rational()
        width = Fraction(1, 2)
        while True:
            lo, hi = v - width, v + width
            if f.evaluate(lo) != 0 and f.evaluate(hi) != 0 \
                    and count_real_roots(f, lo, hi) == 1:
                return lo, hi
            width /= 2
    while True:
        lo, hi = a.enclosure()
        if lo < hi and f.evaluate(lo) != 0 and f.evaluate(hi) != 0 \
                and count_real_roots(f, lo, hi) == 1:
            return lo, hi
        a.field.refine()
