import random
from fractions import Fraction as F

import pytest

from altbase.errors import (
    FuelExhausted,
    NegativeResult,
    NotAdmissible,
    NotSimpleParry,
    OutOfRange,
    PrefixNotZero,
    SumOutOfRange,
)
from altbase.expansion import admissible, greedy_expand, value_of
from altbase.rewrite.normalize import (
    add,
    add_with_trace,
    borrow_representation,
    find_violation,
    normalize,
    subtract,
    subtract_with_trace,
)
from altbase.rewrite.weights import build_weight
from altbase.words import (
    digitwise_add,
    lex_compare,
    make_word,
    pad_left,
    parse_digit_string as w,
    zero_word,
)


class TestFindViolation:
    def test_strict_case(self, ex34_base):
        witness = find_violation(ex34_base, w("000040010"))
        assert witness.index == 5
        assert witness.case == "strict"
        assert witness.rule.rule_id == "t1[1,1,0]"
        assert witness.x == w("0030")
        assert witness.j == 1
        assert witness.y == w("000010010")

    def test_pruned_case(self, ex34_base):
        witness = find_violation(ex34_base, w("000111010"))
        assert witness.index == 4
        assert witness.case == "pruned"
        assert witness.x == w("000110")
        assert witness.j == 0
        assert witness.y == w("000001010")

    def test_equality_case(self, ex34_base):
        witness = find_violation(ex34_base, w("00002010"))
        assert witness.case == "equality"
        assert witness.index == 5
        assert witness.rule.rule_id == "t2[1]"

    def test_admissible_returns_none(self, ex34_base):
        assert find_violation(ex34_base, w("010")) is None

    def test_decomposition_recomposes(self, ex34_base):
        for text in ("000040010", "000111010", "00002010"):
            s = w(text)
            witness = find_violation(ex34_base, s)
            rebuilt = digitwise_add(pad_left(witness.x, 2 * witness.j), witness.y)
            assert rebuilt == s

    def test_prefix_guard(self, ex34_base):
        with pytest.raises(PrefixNotZero):
            find_violation(ex34_base, w("30"))
        # Violation at position 2 = p: still undecomposable.
        with pytest.raises(PrefixNotZero):
            find_violation(ex34_base, w("02010"))

    def test_equality_at_value_one_over_delta(self, ex34_base):
        # val = 1/delta exactly: the non-admissible presentation 002010^w of
        # 010^w still decomposes, as a whole type 2 left-hand side.
        witness = find_violation(ex34_base, w("002010"))
        assert witness.case == "equality" and witness.j == 0
        assert witness.y == zero_word()

    def test_unpruned_uses_type1(self, ex34_base):
        witness = find_violation(ex34_base, w("000111010"), pruned=False)
        assert witness.case == "strict"
        assert witness.rule.rule_id == "t1[2,1,1]"


class TestNormalize:
    def test_worked_trace(self, ex34_base):
        result, trace = normalize(ex34_base, w("000040010"))
        assert result == w("001001010")
        assert len(trace) == 2
        assert trace.stripped_strings() == [
            ("000040010", "000111010"),
            ("000111010", "001001010"),
        ]
        assert [s.rule_id for s in trace.steps] == ["t1[1,1,0]", "t2[2]"]

    def test_admissible_is_fixed_point(self, ex34_base):
        result, trace = normalize(ex34_base, w("010"))
        assert result == w("010")
        assert len(trace) == 0

    def test_single_step(self, ex34_base):
        result, trace = normalize(ex34_base, w("0030"))
        assert result == w("01010")
        assert len(trace) == 1
        assert admissible(ex34_base, result)[0]

    def test_value_preserved(self, ex34_base):
        s = w("000040010")
        result, _ = normalize(ex34_base, s)
        assert value_of(ex34_base, result).compare(value_of(ex34_base, s)) == 0

    def test_value_must_be_below_one(self, ex34_base):
        with pytest.raises(OutOfRange):
            normalize(ex34_base, w("2010"))

    def test_fuel_exhaustion_carries_trace(self, ex34_base):
        with pytest.raises(FuelExhausted) as err:
            normalize(ex34_base, w("000040010"), fuel=1)
        assert len(err.value.partial.steps) == 1

    def test_trace_monotone(self, ex34_base):
        weight, _ = build_weight(ex34_base)
        _, trace = normalize(ex34_base, w("00304050"), weight=weight)
        for step in trace.steps:
            assert lex_compare(step.after, step.before) == 1
            assert step.weight_after <= step.weight_before

    def test_symbolic_normalization(self, ex66_base):
        # Value-blind run: 4 at position 3 exceeds the leading digit 3 of
        # the matching shift, so one rewrite fires and must land admissibly.
        result, trace = normalize(ex66_base, w("004"))
        assert result == w("01010")
        assert admissible(ex66_base, result)[0]
        assert len(trace) == 1

    def test_oracle_equivalence_sample(self, ex34_base):
        rng = random.Random(23)
        for _ in range(40):
            digits = [rng.randrange(0, 4) for _ in range(rng.randrange(1, 10))]
            s = make_word(digits)
            if value_of(ex34_base, s).compare(1) >= 0:
                continue
            expected = greedy_expand(ex34_base, value_of(ex34_base, s))
            got, _ = normalize(ex34_base, s)
            assert got == expected


class TestAdd:
    def test_worked_example(self, ex34_base):
        result, trace = add_with_trace(ex34_base, w("000020010"), w("000020"))
        assert result == w("001001010")
        assert len(trace) == 2

    def test_add_zero(self, ex34_base):
        s = w("0010")
        assert add(ex34_base, s, zero_word()) == s

    def test_already_admissible_sum(self, ex34_base):
        result, trace = add_with_trace(ex34_base, w("10"), w("010"))
        assert result == w("110")
        assert len(trace) == 0

    def test_sum_out_of_range(self, ex34_base):
        with pytest.raises(SumOutOfRange):
            add(ex34_base, w("2010"), w("0010"))

    def test_rejects_inadmissible_input(self, ex34_base):
        with pytest.raises(NotAdmissible):
            add(ex34_base, w("0030"), w("0"))

    def test_value_exact(self, ex34_base):
        a, b = w("0010"), w("00010")
        total = add(ex34_base, a, b)
        assert value_of(ex34_base, total).compare(
            value_of(ex34_base, a) + value_of(ex34_base, b)) == 0
        assert admissible(ex34_base, total)[0]

    def test_symbolic_add(self, ex66_base):
        result, _ = add_with_trace(ex66_base, w("0011"), w("00011"))
        assert admissible(ex66_base, result)[0]


class TestBorrow:
    def test_base_case(self, ex34_base):
        assert borrow_representation(ex34_base, 1, 0) == w("10")

    def test_one_borrow(self, ex34_base):
        # Splice 110^w at position 2: 1/b1 = 1/delta + 1/(delta*b1).
        assert borrow_representation(ex34_base, 1, 1) == w("0110")

    def test_shifted_splice(self, ex34_base):
        # Splice 2010^w at position 3.
        assert borrow_representation(ex34_base, 2, 1) == w("002010")

    def test_value_and_support(self, ex34_base):
        from altbase.words import unit_word

        for j in (1, 2, 3):
            for k in (0, 1, 2, 3):
                rep = borrow_representation(ex34_base, j, k)
                assert rep.digit(j + k) >= 1
                assert value_of(ex34_base, rep).compare(
                    value_of(ex34_base, unit_word(j))) == 0

    def test_needs_simple_parry(self, ex66_base):
        with pytest.raises(NotSimpleParry):
            borrow_representation(ex66_base, 1, 1)


class TestSubtract:
    def test_identity_cases(self, ex34_base):
        s = w("0010")
        assert subtract(ex34_base, s, zero_word()) == s
        assert subtract(ex34_base, s, s) == zero_word()

    def test_worked_case(self, ex34_base):
        # 1/b1 - 1/delta = 1/(delta*b1) via the borrow 0110^w.
        assert subtract(ex34_base, w("10"), w("010")) == w("0010")

    def test_negative(self, ex34_base):
        with pytest.raises(NegativeResult):
            subtract(ex34_base, w("010"), w("10"))

    def test_value_exact(self, ex34_base):
        a, b = w("110"), w("0010")
        diff = subtract(ex34_base, a, b)
        assert value_of(ex34_base, diff).compare(
            value_of(ex34_base, a) - value_of(ex34_base, b)) == 0
        assert admissible(ex34_base, diff)[0]

    def test_add_subtract_round_trip(self, ex34_base):
        rng = random.Random(31)
        done = 0
        for _ in range(30):
            da = [rng.randrange(0, 3) for _ in range(rng.randrange(1, 7))]
            db = [rng.randrange(0, 3) for _ in range(rng.randrange(1, 7))]
            a, _ = normalize(ex34_base, make_word(da))
            b, _ = normalize(ex34_base, make_word(db))
            total_value = value_of(ex34_base, a) + value_of(ex34_base, b)
            if total_value.compare(1) >= 0:
                continue
            total = add(ex34_base, a, b)
            assert subtract(ex34_base, total, b) == a
            done += 1
        assert done >= 10

    def test_needs_simple_parry(self, ex66_base):
        with pytest.raises(NotSimpleParry):
            subtract(ex66_base, w("01"), w("001"))

    def test_trace_rounds(self, ex34_base):
        _, steps = subtract_with_trace(ex34_base, w("110"), w("0010"))
        assert len(steps) == 1
        assert steps[0].j == 1 and steps[0].k == 2
