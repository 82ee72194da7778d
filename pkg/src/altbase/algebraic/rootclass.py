"""Root-pattern classification of minimal polynomials (Pisot / Salem).

Deciding whether a conjugate sits exactly on the unit circle is not
possible by interval refinement alone, so the count of circle roots is
obtained algebraically: roots of p on the unit circle correspond one-to-one
(in conjugate pairs) to real roots in (-2, 2) of the transform
C(w) = p(z)p(1/z)-style polynomial with w = z + 1/z, which is exact
rational data.  The remaining roots are strictly off the circle, so
certified box refinement resolves each of them as inside or outside.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from ..errors import AltbaseError, NotGreaterThanOne, NotSquarefree
from .embeddings import certified_root_boxes
from .polynomial import RationalPolynomial, circle_root_transform
from .realroots import count_real_roots, sturm_sequence


class RootClass(str, Enum):
    PISOT_INTEGER = "PisotInteger"
    PISOT = "Pisot"
    SALEM = "Salem"
    NEITHER = "Neither"


def _count_roots_above_one(poly: RationalPolynomial) -> int:
    f = poly.squarefree_part()
    bound = f.root_bound() + 1
    lo = Fraction(1)
    while f.evaluate(lo) == 0:
        # 1 itself is a root; count only the open region beyond it.
        lo += Fraction(1, 10 ** 6)
    return count_real_roots(f, lo, bound)


def count_unit_circle_roots(poly: RationalPolynomial) -> int:
    """Exact number of roots of ``poly`` on the unit circle.

    Assumes p(1) != 0 and p(-1) != 0 (true for any irreducible polynomial of
    degree >= 2).  Conjugate pairs on the circle biject with real roots of
    the z + 1/z transform inside (-2, 2).
    """
    if poly.evaluate(Fraction(1)) == 0 or poly.evaluate(Fraction(-1)) == 0:
        raise ValueError("polynomial vanishes at +-1; not a minimal polynomial of degree >= 2")
    transform = circle_root_transform(poly).squarefree_part()
    chain = sturm_sequence(transform)
    return 2 * count_real_roots(transform, Fraction(-2), Fraction(2), chain)


def classify_root_pattern(minpoly: RationalPolynomial) -> RootClass:
    """Classify the dominant-root pattern of a minimal polynomial.

    PisotInteger: degree 1 with an integer root >= 2.  Pisot: monic integer,
    every non-dominant root strictly inside the unit disc.  Salem: monic
    integer, non-dominant roots in the closed disc with at least one on the
    boundary.  Neither otherwise.  Raises NotGreaterThanOne when no real
    root exceeds 1.
    """
    if minpoly.degree < 1:
        raise ValueError("expected a polynomial of degree >= 1")
    poly = minpoly.monic()
    if not poly.is_squarefree():
        raise NotSquarefree("minimal polynomials are squarefree")
    if _count_roots_above_one(poly) == 0:
        raise NotGreaterThanOne("no real root greater than 1")
    if not poly.has_integer_coefficients():
        return RootClass.NEITHER
    if poly.degree == 1:
        return RootClass.PISOT_INTEGER
    n_circle = count_unit_circle_roots(poly)
    width = Fraction(1, 4)
    for _ in range(60):
        boxes = certified_root_boxes(poly, width)
        inside = outside = 0
        for rb in boxes:
            lo2, hi2 = rb.box.modulus_squared_bounds()
            if hi2 < 1:
                inside += 1
            elif lo2 > 1:
                outside += 1
        if inside + outside == poly.degree - n_circle:
            if outside >= 2:
                return RootClass.NEITHER
            if outside == 0:
                raise AltbaseError("dominant root failed to resolve")
            return RootClass.SALEM if n_circle else RootClass.PISOT
        width /= 4
    raise AltbaseError("root classification did not converge")
