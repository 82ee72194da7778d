"""Certified complex enclosures with exact rational endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .polynomial import RationalPolynomial


@dataclass(frozen=True)
class ComplexBox:
    """Axis-aligned rectangle [real_lo, real_hi] x [imag_lo, imag_hi]."""

    real_lo: Fraction
    real_hi: Fraction
    imag_lo: Fraction
    imag_hi: Fraction

    def __post_init__(self):
        if self.real_lo > self.real_hi or self.imag_lo > self.imag_hi:
            raise ValueError("degenerate box bounds")

    @staticmethod
    def point(re: Fraction, im: Fraction = Fraction(0)) -> "ComplexBox":
        return ComplexBox(re, re, im, im)

    @staticmethod
    def from_disc(re: Fraction, im: Fraction, radius: Fraction) -> "ComplexBox":
        return ComplexBox(re - radius, re + radius, im - radius, im + radius)

    @property
    def width(self) -> Fraction:
        return max(self.real_hi - self.real_lo, self.imag_hi - self.imag_lo)

    def contains_zero(self) -> bool:
        return (self.real_lo <= 0 <= self.real_hi
                and self.imag_lo <= 0 <= self.imag_hi)

    def is_real_line(self) -> bool:
        return self.imag_lo == 0 and self.imag_hi == 0

    def contains(self, other: "ComplexBox") -> bool:
        return (self.real_lo <= other.real_lo and other.real_hi <= self.real_hi
                and self.imag_lo <= other.imag_lo and other.imag_hi <= self.imag_hi)

    def intersects(self, other: "ComplexBox") -> bool:
        return not (self.real_hi < other.real_lo or other.real_hi < self.real_lo
                    or self.imag_hi < other.imag_lo or other.imag_hi < self.imag_lo)

    def intersection(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(
            max(self.real_lo, other.real_lo), min(self.real_hi, other.real_hi),
            max(self.imag_lo, other.imag_lo), min(self.imag_hi, other.imag_hi),
        )

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(
            self.real_lo + other.real_lo, self.real_hi + other.real_hi,
            self.imag_lo + other.imag_lo, self.imag_hi + other.imag_hi,
        )

    def __mul__(self, other: "ComplexBox") -> "ComplexBox":
        rr = _interval_mul((self.real_lo, self.real_hi), (other.real_lo, other.real_hi))
        ii = _interval_mul((self.imag_lo, self.imag_hi), (other.imag_lo, other.imag_hi))
        ri = _interval_mul((self.real_lo, self.real_hi), (other.imag_lo, other.imag_hi))
        ir = _interval_mul((self.imag_lo, self.imag_hi), (other.real_lo, other.real_hi))
        return ComplexBox(rr[0] - ii[1], rr[1] - ii[0], ri[0] + ir[0], ri[1] + ir[1])

    def modulus_squared_bounds(self) -> tuple[Fraction, Fraction]:
        """Exact bounds for |z|^2 over the box."""
        re_min = _abs_min(self.real_lo, self.real_hi)
        re_max = max(abs(self.real_lo), abs(self.real_hi))
        im_min = _abs_min(self.imag_lo, self.imag_hi)
        im_max = max(abs(self.imag_lo), abs(self.imag_hi))
        return re_min * re_min + im_min * im_min, re_max * re_max + im_max * im_max

    def midpoint(self) -> tuple[Fraction, Fraction]:
        return ((self.real_lo + self.real_hi) / 2, (self.imag_lo + self.imag_hi) / 2)

    def approx(self) -> complex:
        re, im = self.midpoint()
        return complex(re, im)


def _interval_mul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def _abs_min(lo: Fraction, hi: Fraction) -> Fraction:
    if lo <= 0 <= hi:
        return Fraction(0)
    return min(abs(lo), abs(hi))


def evaluate_poly_on_box(poly: RationalPolynomial, box: ComplexBox) -> ComplexBox:
    """Horner evaluation with box arithmetic; inclusion-monotone."""
    acc = ComplexBox.point(Fraction(0))
    for c in reversed(poly.coefficients):
        acc = acc * box + ComplexBox.point(c)
    return acc


def rational_sqrt_upper(q: Fraction, scale_bits: int = 64) -> Fraction:
    """A rational upper bound for sqrt(q), within 2^-scale_bits of exact."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0)
    m = 1 << scale_bits
    n = q.numerator * m * m
    # ceil division then ceil sqrt gives a certified upper bound
    quotient = -((-n) // q.denominator)
    s = isqrt(quotient)
    if s * s < quotient:
        s += 1
    return Fraction(s, m)
