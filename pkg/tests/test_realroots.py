from fractions import Fraction as F

import pytest

from altbase.algebraic.polynomial import RationalPolynomial as P
from altbase.algebraic.realroots import (
    count_all_real_roots,
    count_real_roots,
    evaluate_on_interval,
    isolate_real_roots,
    refine_sign_change,
    validate_isolating_interval,
)
from altbase.errors import AmbiguousInterval


def poly(*coeffs):
    return P.from_coeffs(coeffs)


class TestCounting:
    def test_quadratic(self):
        f = poly(-13, 0, 1)
        assert count_real_roots(f, F(0), F(4)) == 1
        assert count_real_roots(f, F(-4), F(4)) == 2
        assert count_all_real_roots(f) == 2

    def test_no_real_roots(self):
        assert count_all_real_roots(poly(1, 0, 1)) == 0

    def test_salem_quartic(self):
        assert count_all_real_roots(poly(1, -1, -1, -1, 1)) == 2

    def test_endpoint_root_rejected(self):
        with pytest.raises(ValueError):
            count_real_roots(poly(-1, 0, 1), F(1), F(2))


class TestIsolation:
    @pytest.mark.parametrize("coeffs,count", [
        ((-13, 0, 1), 2),
        ((1, -1, -1, -1, 1), 2),
        ((1, 0, 1), 0),
        ((-6, 11, -6, 1), 3),     # roots 1, 2, 3
    ])
    def test_counts(self, coeffs, count):
        intervals = isolate_real_roots(poly(*coeffs))
        assert len(intervals) == count
        f = poly(*coeffs)
        for lo, hi in intervals:
            assert count_real_roots(f, lo, hi) == 1
        # pairwise disjoint and ordered
        for (a, b), (c, d) in zip(intervals, intervals[1:]):
            assert b <= c

    def test_rational_roots_isolated(self):
        intervals = isolate_real_roots(poly(0, 1) * poly(-1, 2))
        assert len(intervals) == 2


class TestValidationAndRefinement:
    def test_validate_good(self):
        validate_isolating_interval(poly(-13, 0, 1), F("3.6"), F("3.61"))

    def test_validate_ambiguous(self):
        with pytest.raises(AmbiguousInterval):
            validate_isolating_interval(poly(-13, 0, 1), F(-4), F(4))
        with pytest.raises(AmbiguousInterval):
            validate_isolating_interval(poly(-13, 0, 1), F(0), F(1))

    def test_refinement_keeps_root(self):
        f = poly(-13, 0, 1)
        lo, hi = F("3.6"), F("3.61")
        for _ in range(20):
            lo, hi = refine_sign_change(f, lo, hi)
            assert f.evaluate(lo) * f.evaluate(hi) < 0
        assert hi - lo < F(1, 10 ** 6)
        # 13 - hi^2 < 0 < 13 - lo^2
        assert lo * lo < 13 < hi * hi

    def test_interval_evaluation_contains_value(self):
        f = poly(-1, -3, 1)
        lo, hi = evaluate_on_interval(f, F(3), F(4))
        assert lo <= f.evaluate(F("3.5")) <= hi
