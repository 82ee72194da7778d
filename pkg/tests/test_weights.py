from fractions import Fraction as F

import pytest

from altbase.bases import base_new_symbolic
from altbase.errors import GfsViolated, NoWeightFound
from altbase.rewrite.rules import build_rules
from altbase.rewrite.weights import (
    WeightFunction,
    assemble_matrices,
    build_weight,
    column_sums,
    weight_of,
)
from altbase.words import parse_digit_string as w


def independent_kernel_2x2(M):
    """Closed-form kernel of a singular 2x2 integer matrix: independent of
    the library's elimination code."""
    a, b = M[0]
    if a == 0 and b == 0:
        return (1, 1)
    from math import gcd

    g = gcd(abs(a), abs(b))
    u = (abs(b) // g, abs(a) // g)
    # Fix signs so that a*u1 + b*u2 = 0.
    if a * u[0] + b * u[1] != 0:
        u = (u[0], -u[1])
    return u


class TestColumnSums:
    def test_worked_example(self, ex34_base):
        from altbase.expansion import require_parry_tseqs

        seqs = require_parry_tseqs(ex34_base)
        assert column_sums(seqs, 2) == [[3, 0], [1, 1]]

    def test_matrices(self):
        K, R, M = assemble_matrices([[3, 0], [1, 1]], 2)
        assert K == [[1, 1], [3, 0]]
        assert R == [[0, 1], [1, 0]]
        assert M == [[-3, 2], [3, -2]]


class TestWorkedExampleWeights:
    def test_kernel_vector(self, ex34_base):
        weight, construction = build_weight(ex34_base)
        assert weight.u == (2, 3)
        assert construction.kappa == 3
        assert construction.K == ((1, 1), (3, 0))
        assert construction.M == ((-3, 2), (3, -2))
        assert construction.column_sums == ((3, 0), (1, 1))

    def test_against_independent_solve(self, ex34_base):
        _, construction = build_weight(ex34_base)
        u = independent_kernel_2x2([list(r) for r in construction.M])
        assert u == (2, 3)

    def test_K_u_dominates(self, ex34_base):
        weight, construction = build_weight(ex34_base)
        Ku = [sum(a * b for a, b in zip(row, weight.u)) for row in construction.K]
        assert Ku == [5, 6]
        assert all(kv >= uv for kv, uv in zip(Ku, weight.u))

    def test_M_annihilates_u(self, ex34_base):
        weight, construction = build_weight(ex34_base)
        assert all(
            sum(a * b for a, b in zip(row, weight.u)) == 0 for row in construction.M
        )

    def test_K_column_property(self, ex34_base):
        _, construction = build_weight(ex34_base)
        for j in range(2):
            assert any(construction.K[i][j] >= 1 for i in range(2))


class TestOtherBases:
    def test_symbolic_all_ones(self, ex66_base):
        weight, construction = build_weight(ex66_base)
        assert weight.u == (1, 1)
        assert construction is None

    def test_golden(self, golden_base):
        weight, construction = build_weight(golden_base)
        assert weight.u == (1,)
        assert construction.K == ((2,),)
        assert construction.M == ((0,),)
        assert construction.kappa == 1

    def test_base2(self, base2):
        weight, construction = build_weight(base2)
        assert weight.u == (1,)
        assert construction.K == ((2,),)

    def test_gfs_required(self):
        bad = base_new_symbolic([w("2020"), w("110")])
        with pytest.raises(GfsViolated):
            build_weight(bad)


class TestWeightFunction:
    def test_weight_of_examples(self):
        wf = WeightFunction((2, 3))
        assert weight_of(wf, w("0030")) == 6          # digit 3 at position 3, w3 = 2
        assert weight_of(wf, w("0")) == 0
        assert wf.weight_of(w("110")) == 5

    def test_period_shift_invariance(self):
        wf = WeightFunction((2, 3))
        s = w("20103")
        padded = w("0020103")
        assert wf.weight_of(s) == wf.weight_of(padded)

    @pytest.mark.parametrize("base_fixture", ["ex34_base", "golden_base", "base2"])
    def test_type1_equal_type2_nonincreasing(self, base_fixture, request):
        base = request.getfixturevalue(base_fixture)
        weight, _ = build_weight(base)
        for rule in build_rules(base, prune=False):
            lw, rw = weight.weight_of(rule.lhs), weight.weight_of(rule.rhs)
            if rule.kind == "type1":
                assert lw == rw, rule.rule_id
            else:
                assert lw >= rw, rule.rule_id

    def test_symbolic_rules_never_increase(self, ex66_base):
        weight, _ = build_weight(ex66_base)
        for rule in build_rules(ex66_base, k_bound=4):
            assert weight.weight_of(rule.lhs) >= weight.weight_of(rule.rhs)


class TestSearchFallback:
    def test_search_respects_constraints(self):
        from altbase.rewrite.weights import _search_weight

        # u must satisfy -u1 + 2u2 >= 0 and u1 - u2 >= 0.
        found = _search_weight([(-1, 2), (1, -1)], 2)
        assert found is not None
        u1, u2 = found
        assert -u1 + 2 * u2 >= 0 and u1 - u2 >= 0

    def test_search_reports_failure(self):
        from altbase.rewrite.weights import _search_weight

        assert _search_weight([(-1, 0), (0, 1)], 2) is None
