import numpy as np
import pytest

from quditdeutsch import (
    BooleanOracle,
    BVOracle,
    CountedOracle,
    OracleClass,
    adversary_search,
    classical_bv,
    classical_classify,
    classify_boolean,
    enumerate_balanced,
)
from helpers import all_boolean_tables


def promise_oracles(d):
    return ([BooleanOracle(d, np.zeros(d, dtype=int)),
             BooleanOracle(d, np.ones(d, dtype=int))]
            + enumerate_balanced(d))


class TestClassicalClassify:
    def test_constant_d4_takes_three_queries(self):
        transcript = classical_classify(BooleanOracle(4, (0, 0, 0, 0)))
        assert transcript.verdict is OracleClass.CONSTANT
        assert transcript.count == 3  # d/2 + 1

    def test_early_mismatch(self):
        transcript = classical_classify(BooleanOracle(4, (0, 1, 0, 1)))
        assert transcript.verdict is OracleClass.BALANCED
        assert transcript.count == 2
        assert transcript.queries == ((0, 0), (1, 1))

    def test_worst_case_balanced(self):
        transcript = classical_classify(BooleanOracle(8, (1, 1, 1, 1, 0, 0, 0, 0)))
        assert transcript.verdict is OracleClass.BALANCED
        assert transcript.count == 5  # four equal values then the mismatch

    def test_arguments_distinct_and_ascending(self):
        transcript = classical_classify(BooleanOracle(8, (1, 1, 1, 1, 0, 0, 0, 0)))
        args = [x for x, _ in transcript.queries]
        assert args == sorted(set(args)) == list(range(transcript.count))

    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_exhaustive_correct_with_tight_worst_case(self, d):
        worst = 0
        worst_cases = []
        for oracle in promise_oracles(d):
            transcript = classical_classify(oracle)
            assert transcript.verdict is classify_boolean(oracle)
            assert transcript.count <= d // 2 + 1
            if transcript.count == d // 2 + 1:
                worst_cases.append(tuple(oracle.values))
            worst = max(worst, transcript.count)
        assert worst == d // 2 + 1
        # the worst case is hit by constants and by balanced tables whose
        # first d/2 values agree
        for values in worst_cases:
            prefix = values[: d // 2]
            assert len(set(prefix)) == 1

    def test_counts_via_shared_counter(self):
        counted = CountedOracle(BooleanOracle(4, (1, 1, 1, 1)))
        transcript = classical_classify(counted)
        assert counted.queries == transcript.count == 3


class TestAdversarySearch:
    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_threshold(self, d):
        assert not adversary_search(d, d // 2).distinguishable
        assert adversary_search(d, d // 2 + 1).distinguishable

    def test_d2_both_points_needed(self):
        assert not adversary_search(2, 1).distinguishable
        assert adversary_search(2, 2).distinguishable

    def test_budget_zero(self):
        report = adversary_search(4, 0)
        assert not report.distinguishable
        assert report.witness is not None

    def test_witness_pair_valid(self):
        report = adversary_search(4, 2)
        assert not report.distinguishable
        const_oracle, balanced_oracle = report.witness
        assert classify_boolean(const_oracle) is OracleClass.CONSTANT
        assert classify_boolean(balanced_oracle) is OracleClass.BALANCED
        # both agree on the queried branch (arguments 0..budget-1)
        for x in range(report.budget):
            assert const_oracle.value(x) == balanced_oracle.value(x)

    def test_no_witness_when_distinguishable(self):
        assert adversary_search(4, 3).witness is None

    def test_guards(self):
        with pytest.raises(ValueError):
            adversary_search(16, 2)
        with pytest.raises(ValueError):
            adversary_search(4, -1)

    def test_matches_brute_force_tree_count_d4(self):
        # Independent check at d=4: brute-force minimax without memo or the
        # root-symmetry restriction.
        tables = all_boolean_tables(4)
        constants = [t for t in tables if len(set(t)) == 1]
        balanced = [t for t in tables if sum(t) == 2]

        def solvable(assignment, q):
            live_c = [t for t in constants if all(t[x] == b for x, b in assignment)]
            live_b = [t for t in balanced if all(t[x] == b for x, b in assignment)]
            if not live_c or not live_b:
                return True
            if q == 0:
                return False
            queried = {x for x, _ in assignment}
            return any(
                all(solvable(assignment | {(x, bit)}, q - 1) for bit in (0, 1))
                for x in range(4) if x not in queried)

        for budget in range(5):
            assert adversary_search(4, budget).distinguishable == solvable(frozenset(), budget)


class TestClassicalBV:
    def test_recovers_five(self):
        transcript = classical_bv(BVOracle(3, 5))
        assert transcript.recovered == 5
        assert transcript.queries == ((1, 1), (2, 0), (4, 1))

    def test_zero(self):
        transcript = classical_bv(BVOracle(3, 0))
        assert transcript.recovered == 0
        assert transcript.count == 3

    def test_single_bit(self):
        transcript = classical_bv(BVOracle(1, 1))
        assert transcript.recovered == 1
        assert transcript.count == 1

    @pytest.mark.parametrize("n", range(1, 11))
    def test_exhaustive_exactly_n_queries(self, n):
        for a in range(1 << n):
            counted = CountedOracle(BVOracle(n, a))
            transcript = classical_bv(counted)
            assert transcript.recovered == a
            assert transcript.count == n == counted.queries
