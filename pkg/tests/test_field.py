import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altbase.algebraic.field import (
    elem_compare,
    elem_floor,
    field_create,
    minimal_polynomial,
)
from altbase.algebraic.polynomial import RationalPolynomial as P
from altbase.errors import (
    AmbiguousInterval,
    DivisionByZero,
    FieldMismatch,
    NotIrreducible,
    NotSquarefree,
)

SQRT13 = math.sqrt(13)


def poly(*coeffs):
    return P.from_coeffs(coeffs)


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=12
)


class TestFieldCreate:
    def test_quadratic(self, sqrt13_field):
        assert sqrt13_field.degree == 2
        assert sqrt13_field.minpoly == poly(-13, 0, 1)
        assert sqrt13_field.irreducibility_verified

    def test_reducible_rejected(self):
        with pytest.raises(NotIrreducible):
            field_create(poly(-4, 0, 1), (F(1), F(3)))

    def test_non_squarefree_rejected(self):
        with pytest.raises(NotSquarefree):
            field_create(poly(1, 2, 1), (F(-2), F(0)))

    def test_ambiguous_interval_rejected(self):
        with pytest.raises(AmbiguousInterval):
            field_create(poly(-13, 0, 1), (F(-4), F(4)))

    def test_degree_one(self):
        K = field_create(poly(-5, 2), (F(2), F(3)))
        assert K.degree == 1
        assert K.generator.as_rational() == F(5, 2)

    def test_high_degree_accepted_on_trust(self):
        K = field_create(poly(-2, 0, 0, 0, 0, 1), (F(1), F(2)))
        assert not K.irreducibility_verified

    def test_non_monic_normalized(self):
        K = field_create(poly(-26, 0, 2), (F(3), F(4)))
        assert K.minpoly == poly(-13, 0, 1)


class TestArithmetic:
    def test_product_reduces(self, sqrt13_field):
        K = sqrt13_field
        b1 = K.element([F(1, 2), F(1, 2)])
        b2 = K.element([F(5, 6), F(1, 6)])
        # By hand: (1/2 + t/2)(5/6 + t/6) = (5 + 6t + t^2)/12 with t^2 = 13.
        assert (b1 * b2).coords == (F(3, 2), F(1, 2))

    def test_inverse(self, sqrt13_field):
        a = sqrt13_field.element([F(1, 2), F(1, 2)])
        assert (a * a.inverse()).coords == (F(1), F(0))

    def test_add_zero(self, sqrt13_field):
        a = sqrt13_field.element([F(1, 2), F(1, 2)])
        assert (a + 0).coords == a.coords

    def test_division_by_zero(self, sqrt13_field):
        with pytest.raises(DivisionByZero):
            sqrt13_field.one / sqrt13_field.zero

    def test_field_mismatch(self, sqrt13_field, golden_base):
        with pytest.raises(FieldMismatch):
            sqrt13_field.one + golden_base.field.one

    def test_pow(self, sqrt13_field):
        theta = sqrt13_field.generator
        assert (theta ** 2).coords == (F(13), F(0))
        assert (theta ** -2).coords == (F(1, 13), F(0))

    @given(small_fractions, small_fractions, small_fractions, small_fractions)
    @settings(max_examples=60, deadline=None)
    def test_mul_matches_float(self, a0, a1, b0, b1):
        K = field_create(poly(-13, 0, 1), (F("3.6"), F("3.61")))
        got = K.element([a0, a1]) * K.element([b0, b1])
        approx = (float(a0) + float(a1) * SQRT13) * (float(b0) + float(b1) * SQRT13)
        assert abs(float(got.coords[0]) + float(got.coords[1]) * SQRT13 - approx) < 1e-6


class TestComparisonsAndFloor:
    def test_compare_examples(self, sqrt13_field, ex34_base):
        b1, b2 = ex34_base.betas
        # Independent oracle: float evaluation, comfortably away from ties.
        assert ((1 + SQRT13) / 2) > ((5 + SQRT13) / 6)
        assert b1.compare(b2) == 1
        assert b1.compare(b1) == 0
        assert ex34_base.delta.compare(3) == 1

    def test_floor_examples(self, ex34_base):
        b1, _ = ex34_base.betas
        assert math.floor((1 + SQRT13) / 2) == 2
        assert b1.floor() == 2
        assert ex34_base.delta.floor() == 3
        assert ex34_base.field.from_rational(2).floor() == 2
        assert ex34_base.field.from_rational(F(-7, 2)).floor() == -4

    def test_floor_of_exact_near_integer(self, sqrt13_field):
        # (1+t)(t-1)/12 = 1 exactly: products that land on integers.
        K = sqrt13_field
        x = K.element([F(1, 12), F(1, 12)]) * K.element([F(-1), F(1)])
        assert x.coords == (F(1), F(0))
        assert x.floor() == 1

    @given(small_fractions, small_fractions, small_fractions, small_fractions,
           small_fractions, small_fractions)
    @settings(max_examples=40, deadline=None)
    def test_translation_invariance(self, a0, a1, b0, b1, c0, c1):
        K = field_create(poly(-13, 0, 1), (F("3.6"), F("3.61")))
        a, b, c = K.element([a0, a1]), K.element([b0, b1]), K.element([c0, c1])
        if a.compare(b) < 0:
            assert (a + c).compare(b + c) < 0

    @given(small_fractions, small_fractions)
    @settings(max_examples=40, deadline=None)
    def test_floor_bounds(self, a0, a1):
        K = field_create(poly(-13, 0, 1), (F("3.6"), F("3.61")))
        a = K.element([a0, a1])
        n = a.floor()
        assert a.compare(n) >= 0
        assert a.compare(n + 1) < 0


class TestMinimalPolynomial:
    def test_delta(self, ex34_base):
        assert minimal_polynomial(ex34_base.delta) == poly(-1, -3, 1)

    def test_generator(self, sqrt13_field):
        assert minimal_polynomial(sqrt13_field.generator) == poly(-13, 0, 1)

    def test_rational(self, sqrt13_field):
        assert minimal_polynomial(sqrt13_field.from_rational(F(5, 2))) == poly(F(-5, 2), 1)

    @given(small_fractions, small_fractions)
    @settings(max_examples=30, deadline=None)
    def test_annihilates(self, a0, a1):
        K = field_create(poly(-13, 0, 1), (F("3.6"), F("3.61")))
        a = K.element([a0, a1])
        m = minimal_polynomial(a)
        value = K.zero
        power = K.one
        for c in m.coefficients:
            value = value + power * c
            power = power * a
        assert value.is_zero()


class TestModuleHelpers:
    def test_elem_compare_and_floor(self, ex34_base):
        b1, b2 = ex34_base.betas
        assert elem_compare(b1, b2) == 1
        assert elem_floor(b1) == 2
