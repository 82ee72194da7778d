"""Certified enclosures for the complex roots of rational polynomials.

Numerical root finding (mpmath) only supplies starting points; every
certificate is exact.  For a monic squarefree polynomial p of degree d and
distinct rational-complex points z_1..z_d, the residuals

    W_j = p(z_j) / prod_{k != j} (z_j - z_k)

yield closed discs D(z_j, d*|W_j|) whose union contains every root of p,
and any connected component made of m discs contains exactly m roots
(the classical a-posteriori bound for simultaneous-iteration root methods).
We enforce pairwise-disjoint bounding boxes, so each box isolates exactly
one root.  Real roots are recognized exactly: a disjoint disc with real
center that held a non-real root would also hold its conjugate, so such a
disc certifies a real root; the real count is cross-checked by Sturm.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..errors import AltbaseError
from .boxes import ComplexBox, evaluate_poly_on_box, rational_sqrt_upper
from .field import FieldElement, RealAlgebraicField
from .polynomial import RationalPolynomial
from .realroots import count_all_real_roots


@dataclass(frozen=True)
class FieldEmbedding:
    """One embedding of Q(theta) into C, pinned by a certified root box."""

    field: RealAlgebraicField
    conjugate_box: ComplexBox
    is_identity: bool
    is_real: bool

    def embed(self, element: FieldElement) -> ComplexBox:
        """Certified enclosure of the image of ``element``."""
        if element.field is not self.field:
            raise AltbaseError("element belongs to a different field")
        return evaluate_poly_on_box(element.as_polynomial(), self.conjugate_box)

    def embed_polynomial(self, poly: RationalPolynomial) -> ComplexBox:
        return evaluate_poly_on_box(poly, self.conjugate_box)


def _fraction_from_mpf(x) -> Fraction:
    # mpmath stores an mpf as (sign, mantissa, exponent, bitcount).
    s, m, e, _ = x._mpf_
    if m == 0:
        return Fraction(0)
    value = Fraction(-m if s else m)
    return value * (1 << e) if e >= 0 else value / (1 << -e)


class _RetryPrecision(Exception):
    pass


def _approximate_points(poly: RationalPolynomial, n_real: int, dps: int) -> list[tuple[Fraction, Fraction]]:
    """Rationalized root approximations with exact conjugate symmetry."""
    coeffs = list(reversed(poly.coefficients))
    with mpmath.workdps(dps):
        mp_coeffs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in coeffs]
        try:
            roots = mpmath.polyroots(mp_coeffs, maxsteps=200, extraprec=4 * dps)
        except Exception as exc:  # noqa: BLE001 - NoConvergence and friends
            raise _RetryPrecision from exc
        roots = sorted(roots, key=lambda z: abs(mpmath.im(z)))
        real_part = roots[:n_real]
        complex_part = [z for z in roots[n_real:] if mpmath.im(z) > 0]
        if len(complex_part) * 2 != len(roots) - n_real:
            raise _RetryPrecision
        points: list[tuple[Fraction, Fraction]] = []
        for z in real_part:
            points.append((_fraction_from_mpf(mpmath.mpf(mpmath.re(z))), Fraction(0)))
        for z in complex_part:
            re = _fraction_from_mpf(mpmath.mpf(mpmath.re(z)))
            im = _fraction_from_mpf(mpmath.mpf(mpmath.im(z)))
            points.append((re, im))
            points.append((re, -im))
    if len(set(points)) != len(points):
        raise _RetryPrecision
    return points


def _complex_eval(poly: RationalPolynomial, re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    acc_re, acc_im = Fraction(0), Fraction(0)
    for c in reversed(poly.coefficients):
        acc_re, acc_im = acc_re * re - acc_im * im + c, acc_re * im + acc_im * re
    return acc_re, acc_im


@dataclass(frozen=True)
class RootBox:
    """A certified enclosure of exactly one root."""

    box: ComplexBox
    is_real: bool


def _attempt_boxes(poly: RationalPolynomial, n_real: int, max_width: Fraction,
                   dps: int) -> list[RootBox]:
    d = poly.degree
    points = _approximate_points(poly, n_real, dps)
    radii: list[Fraction] = []
    for j, (re_j, im_j) in enumerate(points):
        v_re, v_im = _complex_eval(poly, re_j, im_j)
        num = v_re * v_re + v_im * v_im
        den = Fraction(1)
        for k, (re_k, im_k) in enumerate(points):
            if k != j:
                den *= (re_j - re_k) ** 2 + (im_j - im_k) ** 2
        radii.append(rational_sqrt_upper(Fraction(d * d) * num / den))
    if any(2 * r > max_width for r in radii):
        raise _RetryPrecision
    for j in range(d):
        re_j, im_j = points[j]
        if im_j != 0 and abs(im_j) <= radii[j]:
            raise _RetryPrecision
        for k in range(j + 1, d):
            re_k, im_k = points[k]
            if not (abs(re_j - re_k) > radii[j] + radii[k]
                    or abs(im_j - im_k) > radii[j] + radii[k]):
                raise _RetryPrecision
    return [
        RootBox(ComplexBox.from_disc(re, im, r), is_real=(im == 0))
        for (re, im), r in zip(points, radii)
    ]


def certified_root_boxes(poly: RationalPolynomial, max_width) -> list[RootBox]:
    """Pairwise-disjoint certified root boxes, each of width <= max_width.

    Requires a squarefree polynomial.  Deterministic for a given input.
    """
    max_width = Fraction(max_width)
    p = poly.monic()
    if p.degree < 1:
        return []
    if not p.is_squarefree():
        raise AltbaseError("root certification requires a squarefree polynomial")
    if p.degree == 1:
        root = -p.coefficients[0]
        return [RootBox(ComplexBox.point(root), is_real=True)]
    n_real = count_all_real_roots(p)
    dps = 30
    for _ in range(24):
        try:
            return _attempt_boxes(p, n_real, max_width, dps)
        except _RetryPrecision:
            dps *= 2
    raise AltbaseError("root certification did not converge")


# Per-field cache of the finest enclosures computed so far.  Refinements
# intersect with the previous generation, so enclosures only ever shrink and
# results returned at different precisions nest.
_ENCLOSURE_CACHE: "weakref.WeakKeyDictionary[RealAlgebraicField, dict]" = weakref.WeakKeyDictionary()


def _root_enclosures(field: RealAlgebraicField, width: Fraction) -> list[RootBox]:
    entry = _ENCLOSURE_CACHE.get(field)
    if entry is not None and entry["width"] <= width:
        return entry["boxes"]
    p = field.minpoly
    if p.degree == 1:
        boxes = certified_root_boxes(p, width)
        _ENCLOSURE_CACHE[field] = {"width": Fraction(0), "boxes": boxes}
        return boxes
    n_real = count_all_real_roots(p)
    dps = entry.get("dps", 30) if entry else 30
    for _ in range(24):
        try:
            raw = _attempt_boxes(p.monic(), n_real, width, dps)
        except _RetryPrecision:
            dps *= 2
            continue
        if entry is None:
            boxes = raw
        else:
            boxes = _match_and_clip(entry["boxes"], raw)
            if boxes is None:
                dps *= 2
                continue
        _ENCLOSURE_CACHE[field] = {"width": width, "boxes": boxes, "dps": dps}
        return boxes
    raise AltbaseError("root enclosure refinement did not converge")


def _match_and_clip(old: list[RootBox], new: list[RootBox]) -> list[RootBox] | None:
    """Intersect each refined box with the old box holding the same root.

    Every new box meets the old box of its root; a new box small enough
    meets no other old box, so an ambiguous match just signals that more
    precision is needed (return None).
    """
    clipped: list[RootBox] = []
    used: set[int] = set()
    for nb in new:
        hits = [i for i, ob in enumerate(old) if nb.box.intersects(ob.box)]
        if len(hits) != 1 or hits[0] in used:
            return None
        i = hits[0]
        if old[i].is_real != nb.is_real:
            return None
        used.add(i)
        clipped.append(RootBox(nb.box.intersection(old[i].box), nb.is_real))
    return clipped


def conjugate_embeddings(field: RealAlgebraicField,
                         precision=Fraction(1, 1000)) -> list[FieldEmbedding]:
    """All d embeddings of the field into C as certified disjoint boxes.

    Exactly one embedding is the identity: the one whose box captures the
    root selected by the field's isolating interval.  Finer precision yields
    boxes nested inside those returned at coarser precision.
    """
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    roots = _root_enclosures(field, precision)
    # Shrink the field enclosure until exactly one box meets it; all other
    # boxes keep a positive distance from theta.
    identity_index = None
    for _ in range(100000):
        lo, hi = field.enclosure()
        segment = ComplexBox(lo, hi, Fraction(0), Fraction(0))
        hits = [i for i, rb in enumerate(roots) if rb.box.intersects(segment)]
        if len(hits) == 1:
            identity_index = hits[0]
            break
        field.refine()
    if identity_index is None:
        raise AltbaseError("could not identify the identity embedding")
    return [
        FieldEmbedding(field=field, conjugate_box=rb.box,
                       is_identity=(i == identity_index), is_real=rb.is_real)
        for i, rb in enumerate(roots)
    ]


def refine_embedding_box(embedding: FieldEmbedding, precision) -> ComplexBox:
    """A sub-box of the embedding's box with width <= precision."""
    fine = _root_enclosures(embedding.field, Fraction(precision))
    hits = [rb for rb in fine if rb.box.intersects(embedding.conjugate_box)]
    if len(hits) != 1:
        raise AltbaseError("embedding box refinement lost uniqueness")
    return hits[0].box.intersection(embedding.conjugate_box)


def identify_value_among_roots(value_poly: RationalPolynomial,
                               embedding: FieldEmbedding,
                               candidate_poly: RationalPolynomial) -> RootBox:
    """Pick the root of ``candidate_poly`` equal to value_poly(gamma).

    ``candidate_poly`` must vanish at the image, which holds whenever it is
    the minimal polynomial of the element the coordinates describe; the image
    enclosure then shrinks onto exactly one candidate box.
    """
    precision = Fraction(1, 16)
    for _ in range(60):
        targets = certified_root_boxes(candidate_poly, precision)
        gamma = refine_embedding_box(embedding, precision)
        image = evaluate_poly_on_box(value_poly, gamma)
        hits = [rb for rb in targets if rb.box.intersects(image)]
        if len(hits) == 1:
            return hits[0]
        precision /= 4
    raise AltbaseError("value identification did not converge")
