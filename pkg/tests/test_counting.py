import pytest

from finpart.counting import (
    Mode, PartitionCounter, SolutionTuple, enumerate_solutions, identity_multiset, partition_count, pi
)
from finpart.multiset import EMPTY, canonicalize, min_distinct_sum
from finpart.verification.oracles import tally
from finpart.verification.suites import multisets_up_to


@pytest.mark.parametrize('n, k, expected', [
    (7, 3, 4),
    (5, 6, 0),
    (4, 2, 2),
    (0, 0, 1),
    (5, 0, 0),
    (10, 10, 1),
])
def test_pi(n, k, expected):
    assert pi(n, k) == expected


@pytest.mark.parametrize('n, expected', [(0, 1), (1, 1), (5, 7), (10, 42), (25, 1958)])
def test_partition_count(n, expected):
    assert partition_count(n) == expected


@pytest.mark.parametrize('n, values, expected', [
    (17, [1, 2, 2, 3], 18),
    (8, [1, 2, 2, 3], 1),
    (7, [1, 2], 3),
    (3, [1, 2], 1),
    (0, [], 1),
    (4, [], 0),
    (0, [1], 0),
    (5, [2, 3], 1),
])
def test_d(counter, n, values, expected):
    assert counter.d(n, canonicalize(values)) == expected


@pytest.mark.parametrize('n, values, expected', [
    (17, [1, 2, 2, 3], 72),
    (0, [1, 2, 2, 3], 1),
    (2, [1], 1),
])
def test_d0(counter, n, values, expected):
    assert counter.d0(n, canonicalize(values)) == expected


@pytest.mark.parametrize('n, values, expected', [
    (18, [1, 2, 2, 3], 3),
    (10, [1, 2, 2, 3], 0),
    (4, [1, 2], 1),
    (17, [1, 2, 2, 3], 1),
    (16, [1, 2, 2, 3], 0),
    (3, [1, 1], 1),
    (0, [], 1),
])
def test_delta(counter, n, values, expected):
    assert counter.delta(n, canonicalize(values)) == expected


@pytest.mark.parametrize('n, values, expected', [
    (10, [1, 2, 2, 3], 3),
    (0, [5], 1),
    (0, [1, 2], 0),
])
def test_delta0(counter, n, values, expected):
    assert counter.delta0(n, canonicalize(values)) == expected


def test_count_dispatches_on_mode(counter, example):
    assert counter.count(17, example, Mode.NATURAL) == 18
    assert counter.count(18, example, Mode.DISTINCT) == 3
    assert counter.count(17, example, Mode.ARITHMETIC) == 72
    assert counter.count(10, example, Mode.ARITHMETIC_DISTINCT) == 3


def test_identity_multiset_gives_pi(counter):
    for k in range(0, 9):
        for n in range(0, 61):
            assert counter.d(n, identity_multiset(k)) == pi(n, k)


def test_pivot_independence():
    by_max = PartitionCounter(pivot='max')
    by_min = PartitionCounter(pivot='min')
    for multiset in multisets_up_to(7):
        for n in range(0, 31):
            assert by_max.d(n, multiset) == by_min.d(n, multiset)


def test_unknown_pivot():
    with pytest.raises(ValueError):
        PartitionCounter(pivot='middle')


def test_memo_hit_equals_fresh_value(example):
    warm = PartitionCounter()
    first = warm.d(40, example)
    assert (40, example, Mode.NATURAL) in warm.memo
    assert warm.d(40, example) == first == PartitionCounter().d(40, example)


def test_large_target_does_not_exhaust_the_stack(counter):
    # warm-up keeps the recursion shallow
    assert counter.d(5000, canonicalize([1])) == 1
    assert counter.d(3001, canonicalize([1, 2])) == 1500


def test_min_distinct_sum_is_the_first_nonzero_delta(counter):
    for multiset in multisets_up_to(8):
        if multiset.is_empty():
            continue
        low = min_distinct_sum(multiset)
        assert counter.delta(low, multiset) >= 1
        assert all(counter.delta(n, multiset) == 0 for n in range(low))


def test_against_exhaustive_tally(counter):
    for multiset in multisets_up_to(6):
        natural = tally(multiset, 25)
        distinct = tally(multiset, 25, distinct=True)
        for n in range(26):
            assert counter.d(n, multiset) == natural[n]
            assert counter.delta(n, multiset) == distinct[n]


def test_distinct_solutions_of_example(example):
    solutions = enumerate_solutions(18, example, Mode.DISTINCT)
    assert {solution.values for solution in solutions} == {(3, 2, 4, 1), (5, 2, 3, 1), (4, 1, 3, 2)}


@pytest.mark.parametrize('n, values, mode, expected', [
    (8, [1, 2, 2, 3], Mode.NATURAL, [(1, 1, 1, 1)]),
    (7, [1, 2], Mode.NATURAL, [(1, 3), (3, 2), (5, 1)]),
    (0, [], Mode.NATURAL, [()]),
    (3, [1, 1], Mode.DISTINCT, [(1, 2)]),
    (0, [1, 2], Mode.ARITHMETIC, [(0, 0)]),
    (2, [1, 1], Mode.ARITHMETIC_DISTINCT, [(0, 2)]),
])
def test_enumerate_solutions(n, values, mode, expected):
    solutions = enumerate_solutions(n, canonicalize(values), mode)
    assert [solution.values for solution in solutions] == expected


@pytest.mark.parametrize('mode', list(Mode))
def test_enumeration_matches_counts(counter, mode):
    for multiset in multisets_up_to(5):
        for n in range(0, 16):
            solutions = enumerate_solutions(n, multiset, mode)
            assert len(solutions) == counter.count(n, multiset, mode)
            assert len(set(solutions)) == len(solutions)
            assert [s.values for s in solutions] == sorted(s.values for s in solutions)
            for solution in solutions:
                assert solution.weighted_sum() == n
                assert solution.is_admissible(mode)


def test_is_admissible(example):
    assert SolutionTuple(example, (3, 2, 4, 1)).is_admissible(Mode.DISTINCT)
    assert not SolutionTuple(example, (3, 4, 2, 1)).is_admissible(Mode.DISTINCT)
    assert not SolutionTuple(example, (1, 2, 2, 1)).is_admissible(Mode.DISTINCT)
    assert SolutionTuple(example, (1, 2, 2, 1)).is_admissible(Mode.NATURAL)
    assert not SolutionTuple(example, (0, 2, 2, 1)).is_admissible(Mode.NATURAL)
    assert SolutionTuple(example, (0, 2, 2, 1)).is_admissible(Mode.ARITHMETIC)
    assert not SolutionTuple(example, (1, 1, 1)).is_admissible(Mode.NATURAL)


@pytest.mark.parametrize('k, expected', [
    (1, ['1', '2', '3', '6']),
    (2, ['1,1', '1,2', '1,3', '1,4', '2,2']),
    (3, ['1,1,1']),
    (4, []),
])
def test_enumerate_coefficient_multisets(counter, k, expected):
    assert [m.to_text() for m in counter.enumerate_coefficient_multisets(6, k)] == expected


def test_coefficient_multisets_respect_triangular_bound(counter):
    for n in range(1, 21):
        for k in range(1, n + 1):
            if counter.enumerate_coefficient_multisets(n, k):
                assert k * (k + 1) // 2 <= n


def test_partition_cross_check(counter):
    for n in range(1, 26):
        total = sum(
            counter.delta(n, multiset)
            for k in range(1, n + 1)
            for multiset in counter.enumerate_coefficient_multisets(n, k)
        )
        assert total == partition_count(n)


def test_empty_multiset_counts(counter):
    assert counter.d(0, EMPTY) == 1
    assert counter.delta0(0, EMPTY) == 1
    assert counter.d0(3, EMPTY) == 0
