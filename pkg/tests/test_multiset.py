import pytest

from finpart.multiset import (
    EMPTY, Multiset, canonicalize, min_distinct_sum, parse_multiset, remove_copies
)
from finpart.utils import MultisetError


@pytest.mark.parametrize('values', [[2, 1, 3, 2], [1, 2, 2, 3], [3, 2, 2, 1]])
def test_canonicalize_ignores_order(values):
    assert canonicalize(values).entries == ((1, 1), (2, 2), (3, 1))


def test_canonicalize_empty():
    assert canonicalize([]) == EMPTY
    assert EMPTY.size == 0
    assert EMPTY.sigma == 0
    assert EMPTY.is_empty()


@pytest.mark.parametrize('values', [[0], [1, -2], [1.5]])
def test_canonicalize_rejects_non_positive(values):
    with pytest.raises(MultisetError):
        canonicalize(values)


def test_constructor_validates_entries():
    with pytest.raises(MultisetError):
        Multiset(((2, 1), (1, 1)))
    with pytest.raises(MultisetError):
        Multiset(((1, 0),))


def test_size_sigma_and_expand(example):
    assert example.size == 4
    assert example.sigma == 8
    assert example.expand() == [1, 2, 2, 3]
    assert example.support() == [1, 2, 3]
    assert example.multiplicity(2) == 2
    assert example.multiplicity(7) == 0
    assert str(example) == '{1,2,2,3}'


def test_canonicalize_of_expand_is_identity(example):
    assert canonicalize(example.expand()) == example
    assert canonicalize(canonicalize([4, 4, 1]).expand()) == canonicalize([1, 4, 4])


@pytest.mark.parametrize('text, expected', [
    ('1,2,2,3', [1, 2, 2, 3]),
    ('3, 2,1,2', [1, 2, 2, 3]),
    ('', []),
    ('5', [5]),
])
def test_parse_multiset(text, expected):
    assert parse_multiset(text).expand() == expected


@pytest.mark.parametrize('text', ['1,,2', 'a', '1,0', '2,-1'])
def test_parse_multiset_errors(text):
    with pytest.raises(MultisetError):
        parse_multiset(text)


def test_text_form_round_trips(example):
    assert parse_multiset(example.to_text()) == example
    assert EMPTY.to_text() == ''


def test_remove_copies(example):
    assert remove_copies(example, 2, 1).entries == ((1, 1), (2, 1), (3, 1))
    assert remove_copies(example, 2, 2).entries == ((1, 1), (3, 1))
    single = canonicalize([5])
    assert remove_copies(single, 5, 0) == single
    assert remove_copies(single, 5, 1) == EMPTY


def test_remove_all_copies_drops_support(example):
    assert 2 not in remove_copies(example, 2, 2).support()


def test_remove_copies_errors(example):
    with pytest.raises(MultisetError):
        remove_copies(example, 4, 1)
    with pytest.raises(MultisetError):
        remove_copies(example, 2, 3)


@pytest.mark.parametrize('values, expected', [
    ([1, 2, 2, 3], 17),
    ([1, 1], 3),
    ([], 0),
    ([4], 4),
])
def test_min_distinct_sum(values, expected):
    assert min_distinct_sum(canonicalize(values)) == expected


@pytest.mark.parametrize('values', [[1], [3], [1, 2], [2, 2, 5], [1, 1, 1]])
def test_min_distinct_sum_bounds_sigma(values):
    multiset = canonicalize(values)
    if multiset.size <= 1:
        assert min_distinct_sum(multiset) == multiset.sigma
    else:
        assert min_distinct_sum(multiset) > multiset.sigma


def test_multisets_are_hashable_keys(example):
    table = {example: 1}
    assert table[canonicalize([3, 2, 1, 2])] == 1
