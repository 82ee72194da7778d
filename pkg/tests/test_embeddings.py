import math
from fractions import Fraction as F

import pytest

from altbase.algebraic.boxes import ComplexBox, evaluate_poly_on_box, rational_sqrt_upper
from altbase.algebraic.embeddings import (
    certified_root_boxes,
    conjugate_embeddings,
    identify_value_among_roots,
)
from altbase.algebraic.field import field_create
from altbase.algebraic.polynomial import RationalPolynomial as P


def poly(*coeffs):
    return P.from_coeffs(coeffs)


def box_contains_float(box: ComplexBox, re: float, im: float = 0.0, slack=1e-9) -> bool:
    return (float(box.real_lo) - slack <= re <= float(box.real_hi) + slack
            and float(box.imag_lo) - slack <= im <= float(box.imag_hi) + slack)


class TestBoxes:
    def test_interval_multiplication(self):
        a = ComplexBox(F(1), F(2), F(0), F(0))
        b = ComplexBox(F(-3), F(-1), F(0), F(0))
        prod = a * b
        assert (prod.real_lo, prod.real_hi) == (F(-6), F(-1))

    def test_complex_multiplication_contains_product(self):
        a = ComplexBox(F(1), F("1.1"), F(2), F("2.1"))
        b = ComplexBox(F(-1), F("-0.9"), F(3), F("3.1"))
        prod = a * b
        z = complex(1.05, 2.05) * complex(-0.95, 3.05)
        assert box_contains_float(prod, z.real, z.imag, slack=1e-6)

    def test_modulus_bounds(self):
        box = ComplexBox(F(-1), F(2), F(-1), F(1))
        lo, hi = box.modulus_squared_bounds()
        assert lo == 0
        assert hi == 5

    def test_sqrt_upper(self):
        for q in (F(2), F(1, 3), F(169), F(0)):
            s = rational_sqrt_upper(q)
            assert s * s >= q
            assert s * s <= q + F(1, 2 ** 32)

    def test_poly_box_evaluation_monotone(self):
        f = poly(-1, -3, 1)
        outer = ComplexBox(F(3), F(4), F(0), F(1))
        inner = ComplexBox(F("3.2"), F("3.4"), F(0), F("0.5"))
        assert evaluate_poly_on_box(f, outer).contains(evaluate_poly_on_box(f, inner))


class TestCertifiedRoots:
    def test_quadratic_real_pair(self):
        boxes = certified_root_boxes(poly(-13, 0, 1), F(1, 1000))
        assert len(boxes) == 2
        assert all(rb.is_real for rb in boxes)
        values = sorted(float((rb.box.real_lo + rb.box.real_hi) / 2) for rb in boxes)
        assert abs(values[0] + math.sqrt(13)) < 1e-3
        assert abs(values[1] - math.sqrt(13)) < 1e-3

    def test_salem_quartic_mixed(self):
        boxes = certified_root_boxes(poly(1, -1, -1, -1, 1), F(1, 10 ** 6))
        assert len(boxes) == 4
        assert sum(rb.is_real for rb in boxes) == 2
        for rb in boxes:
            assert rb.box.width <= F(1, 10 ** 6)

    def test_boxes_pairwise_disjoint(self):
        boxes = certified_root_boxes(poly(1, -1, -1, -1, 1), F(1, 1000))
        for i, a in enumerate(boxes):
            for b in boxes[i + 1:]:
                assert not a.box.intersects(b.box)

    def test_rational_root_polynomial(self):
        boxes = certified_root_boxes(poly(-6, 11, -6, 1), F(1, 100))
        mids = sorted(float((rb.box.real_lo + rb.box.real_hi) / 2) for rb in boxes)
        assert [round(v) for v in mids] == [1, 2, 3]


class TestConjugateEmbeddings:
    def test_quadratic(self, sqrt13_field):
        embs = conjugate_embeddings(sqrt13_field, F(1, 1000))
        assert len(embs) == 2
        assert sum(e.is_identity for e in embs) == 1
        ident = next(e for e in embs if e.is_identity)
        other = next(e for e in embs if not e.is_identity)
        assert box_contains_float(ident.conjugate_box, math.sqrt(13))
        assert box_contains_float(other.conjugate_box, -math.sqrt(13))

    def test_degree_one_single_identity(self):
        K = field_create(poly(-2, 1), (F(1), F(3)))
        embs = conjugate_embeddings(K, F(1, 10))
        assert len(embs) == 1
        assert embs[0].is_identity

    def test_non_identity_image(self, sqrt13_field, ex34_base):
        # psi(beta_1) = (1 - sqrt13)/2, around -1.3027756
        other = next(e for e in conjugate_embeddings(sqrt13_field, F(1, 10 ** 6))
                     if not e.is_identity)
        image = other.embed(ex34_base.betas[0])
        assert box_contains_float(image, (1 - math.sqrt(13)) / 2, 0.0)
        assert float(image.real_hi) < -1.3
        assert float(image.real_lo) > -1.31

    def test_identity_embed_consistent_with_interval(self, sqrt13_field, ex34_base):
        ident = next(e for e in conjugate_embeddings(sqrt13_field, F(1, 1000))
                     if e.is_identity)
        image = ident.embed(ex34_base.betas[0])
        lo, hi = ex34_base.betas[0].enclosure()
        # Both enclose the true value, so they must overlap.
        assert image.real_lo <= hi and lo <= image.real_hi

    def test_nesting_under_refinement(self, sqrt13_field):
        coarse = conjugate_embeddings(sqrt13_field, F(1, 100))
        fine = conjugate_embeddings(sqrt13_field, F(1, 10 ** 8))
        for fine_emb in fine:
            holders = [c for c in coarse if c.conjugate_box.contains(fine_emb.conjugate_box)]
            assert len(holders) == 1
            assert holders[0].is_identity == fine_emb.is_identity

    def test_quartic_embeddings(self):
        K = field_create(poly(1, -1, -1, -1, 1), (F("1.7"), F("1.8")))
        embs = conjugate_embeddings(K, F(1, 1000))
        assert len(embs) == 4
        assert sum(e.is_real for e in embs) == 2
        assert sum(e.is_identity for e in embs) == 1
        ident = next(e for e in embs if e.is_identity)
        assert box_contains_float(ident.conjugate_box, 1.7220838057390422)


class TestValueIdentification:
    def test_identifies_conjugate_value(self, sqrt13_field, ex34_base):
        from altbase.algebraic.field import minimal_polynomial

        other = next(e for e in conjugate_embeddings(sqrt13_field, F(1, 1000))
                     if not e.is_identity)
        beta1 = ex34_base.betas[0]
        m = minimal_polynomial(beta1)          # x^2 - x - 3
        q = beta1.as_polynomial()
        root = identify_value_among_roots(q, other, m)
        assert root.is_real
        mid = float((root.box.real_lo + root.box.real_hi) / 2)
        assert abs(mid - (1 - math.sqrt(13)) / 2) < 1e-3
