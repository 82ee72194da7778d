"""Shared fixtures: the worked two-entry bases and small reference fields."""

from fractions import Fraction as F

import pytest

from altbase import (
    RationalPolynomial,
    base_new_explicit,
    base_new_symbolic,
    field_create,
    parse_digit_string,
)


@pytest.fixture(scope="session")
def sqrt13_field():
    return field_create(RationalPolynomial.from_coeffs([-13, 0, 1]),
                        (F("3.6"), F("3.61")))


@pytest.fixture(scope="session")
def ex34_base(sqrt13_field):
    """The quadratic two-entry base ((1+sqrt13)/2, (5+sqrt13)/6)."""
    K = sqrt13_field
    return base_new_explicit(K, [
        K.element([F(1, 2), F(1, 2)]),
        K.element([F(5, 6), F(1, 6)]),
    ])


@pytest.fixture(scope="session")
def ex66_base():
    """Symbolic two-entry base with infinite expansions 34(21)^w, 52(12)^w."""
    return base_new_symbolic([parse_digit_string("34(21)"),
                              parse_digit_string("52(12)")])


@pytest.fixture(scope="session")
def golden_base():
    """Single-entry base (1+sqrt5)/2."""
    K = field_create(RationalPolynomial.from_coeffs([-5, 0, 1]), (F(2), F(3)))
    return base_new_explicit(K, [K.element([F(1, 2), F(1, 2)])])


@pytest.fixture(scope="session")
def base2():
    """Single-entry integer base 2 over a degree-1 field."""
    K = field_create(RationalPolynomial.from_coeffs([-2, 1]), (F(1), F(3)))
    return base_new_explicit(K, [K.from_rational(2)])


def w(text: str):
    return parse_digit_string(text)


@pytest.fixture(scope="session")
def word():
    return w
