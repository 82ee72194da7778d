from fractions import Fraction as F

import pytest

from altbase.bases import (
    approximate_betas,
    base_new_explicit,
    base_new_symbolic,
    shift,
)
from altbase.errors import (
    BetaNotGreaterThanOne,
    EmptyExpansion,
    FieldMismatch,
    LexInconsistent,
    SymbolicModeUnsupported,
)
from altbase.words import parse_digit_string as w


class TestExplicitConstruction:
    def test_worked_example(self, ex34_base):
        assert ex34_base.period == 2
        assert ex34_base.delta.coords == (F(3, 2), F(1, 2))

    def test_period_one(self, sqrt13_field):
        base = base_new_explicit(sqrt13_field, [sqrt13_field.element([F(1, 2), F(1, 2)])])
        assert base.period == 1

    def test_entry_not_greater_than_one(self, sqrt13_field):
        with pytest.raises(BetaNotGreaterThanOne) as err:
            base_new_explicit(sqrt13_field, [sqrt13_field.from_rational(1)])
        assert err.value.index == 1

    def test_second_entry_reported(self, sqrt13_field):
        good = sqrt13_field.element([F(1, 2), F(1, 2)])
        with pytest.raises(BetaNotGreaterThanOne) as err:
            base_new_explicit(sqrt13_field, [good, sqrt13_field.from_rational(F(1, 2))])
        assert err.value.index == 2

    def test_field_mismatch(self, sqrt13_field, golden_base):
        with pytest.raises(FieldMismatch):
            base_new_explicit(sqrt13_field, [golden_base.betas[0]])

    def test_empty_rejected(self, sqrt13_field):
        with pytest.raises(ValueError):
            base_new_explicit(sqrt13_field, [])

    def test_cyclic_indexing(self, ex34_base):
        assert ex34_base.beta(3) == ex34_base.beta(1)


class TestSymbolicConstruction:
    def test_worked_example(self, ex66_base):
        assert ex66_base.period == 2
        assert not ex66_base.is_explicit

    def test_finite_sequences(self):
        base = base_new_symbolic([w("2010"), w("110")])
        assert base.stored_t(1) == w("2010")
        assert base.stored_t(3) == w("2010")

    def test_zero_leading_digit(self):
        with pytest.raises(EmptyExpansion):
            base_new_symbolic([w("0110"), w("110")])

    def test_lex_inconsistent(self):
        with pytest.raises(LexInconsistent) as err:
            base_new_symbolic([w("120"), w("110")])
        assert (err.value.ell, err.value.shift) == (1, 2)

    def test_degenerate_all_units(self):
        with pytest.raises(EmptyExpansion):
            base_new_symbolic([w("1"), w("1")])

    def test_value_operations_unavailable(self, ex66_base):
        with pytest.raises(SymbolicModeUnsupported):
            ex66_base.beta(1)


class TestShift:
    def test_rotation(self, ex34_base):
        shifted = shift(ex34_base, 2)
        assert shifted.betas == (ex34_base.betas[1], ex34_base.betas[0])

    def test_identity_and_periodicity(self, ex34_base):
        assert shift(ex34_base, 1) is ex34_base
        assert shift(ex34_base, ex34_base.period + 1) is ex34_base

    def test_p_cycle(self, ex34_base):
        out = ex34_base
        for _ in range(ex34_base.period):
            out = shift(out, 2)
        assert out.betas == ex34_base.betas

    def test_delta_shared_exactly(self, ex34_base):
        for ell in range(1, ex34_base.period + 1):
            assert shift(ex34_base, ell).delta.coords == ex34_base.delta.coords

    def test_symbolic_rotation(self, ex66_base):
        shifted = shift(ex66_base, 2)
        assert shifted.t_seqs == (ex66_base.t_seqs[1], ex66_base.t_seqs[0])


class TestNumericRecovery:
    def test_diagnostic_solve_close_to_known_entries(self):
        # Sequences of the worked quadratic base; the solver should land on
        # approximations of (1+sqrt13)/2 and (5+sqrt13)/6.
        base = base_new_symbolic([w("2010"), w("110")])
        betas, residual = approximate_betas(base, dps=30)
        assert float(residual) < 1e-20
        assert abs(float(betas[0]) - 2.302775637731995) < 1e-9
        assert abs(float(betas[1]) - 1.4342585459106653) < 1e-9

    def test_requires_symbolic(self, ex34_base):
        with pytest.raises(SymbolicModeUnsupported):
            approximate_betas(ex34_base)
