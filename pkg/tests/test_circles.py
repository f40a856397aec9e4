import pytest
from io import StringIO

from Bio import Phylo

from finpart.circles import (
    NEWICK_MAX_DEPTH, CircleTable, canonical_form, circles_count, circles_count_terms, forest_to_newick,
    forest_to_tree_count_check, grow_forests, multichoose, parse_forest, render_forest, theorem_terms
)
from finpart.multiset import canonicalize
from finpart.utils import BudgetExceededError, ForestParseError
from finpart.verification.oracles import rooted_trees_euler


@pytest.mark.parametrize('s, r, expected', [(1, 6, 1), (3, 2, 6), (4, 0, 1), (0, 0, 1), (0, 3, 0), (2, 3, 4)])
def test_multichoose(s, r, expected):
    assert multichoose(s, r) == expected


def test_circle_counts():
    assert [circles_count(n) for n in range(10)] == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_circle_table_grows_monotonically():
    table = CircleTable()
    assert table.values == [1]
    assert table[12] == 12486
    assert len(table.values) == 13
    assert all(b >= a for a, b in zip(table.values, table.values[1:]))


def test_large_counts_are_exact():
    trees = rooted_trees_euler(50)
    assert trees[40] == circles_count(40)
    # beyond 64 bits
    assert trees[50] > 2 ** 64


def test_terms_for_six():
    terms = circles_count_terms(6)
    assert [term.term for term in terms] == [20, 3, 1, 1, 9, 4, 4, 2, 1, 1, 2]
    assert sum(term.term for term in terms) == 48
    first = terms[0]
    assert first.multiset == canonicalize([1])
    assert first.solution.values == (6,)


def test_terms_for_one_and_three():
    (only,) = circles_count_terms(1)
    assert (only.multiset, only.solution.values, only.term) == (canonicalize([1]), (1,), 1)
    assert sum(term.term for term in circles_count_terms(3)) == 4
    assert circles_count_terms(0) == []


def test_term_sums_match_counts():
    for n in range(1, 21):
        assert sum(term.term for term in circles_count_terms(n)) == circles_count(n)


def test_terms_are_solutions_of_their_multiset():
    for term in circles_count_terms(10):
        assert term.solution.weighted_sum() == 10
        assert len(set(term.solution.values)) == term.multiset.size


def test_triple_sum_matches_partition_grouping(counter):
    for n in range(1, 13):
        assert theorem_terms(n, counter) == circles_count_terms(n)


def test_parse_forest():
    forest = parse_forest('((~))(~)')
    assert [tree.size for tree in forest.trees] == [2, 1]
    assert forest.size == 3
    assert parse_forest('').trees == []
    assert parse_forest(' ( ( ) ) ').size == 2


@pytest.mark.parametrize('text, offset', [
    ('(()', 3), (')', 0), ('())', 2), ('(a)', 1), ('()x', 2),
    ('\u3000)', 3), ('\u3000(', 4), ('(\u3000x)', 4),
])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ForestParseError) as err:
        parse_forest(text)
    assert err.value.offset == offset
    assert 'offset {}'.format(offset) in str(err.value)


def test_deep_nesting_parses():
    depth = 5000
    forest = parse_forest('(' * depth + ')' * depth)
    assert forest.size == depth
    assert canonical_form(forest) == '(' * depth + ')' * depth


@pytest.mark.parametrize('first, second', [
    ('(())()', '()(())'),
    ('((())())', '(()(()))'),
    ('(()())((~))', '(())(()())'),
])
def test_canonical_form_ignores_sibling_order(first, second):
    assert canonical_form(parse_forest(first)) == canonical_form(parse_forest(second))


def test_canonical_form_values():
    assert canonical_form(parse_forest('()(())')) == '(())()'
    assert canonical_form(parse_forest('')) == ''
    assert canonical_form(parse_forest('(~)(~)')) == '()()'


def test_canonical_form_is_idempotent():
    for text in grow_forests(6):
        assert canonical_form(parse_forest(text)) == text


def test_render_with_glyph():
    assert render_forest(parse_forest('()(())'), glyph=True) == '((~))(~)'
    assert render_forest(parse_forest('()(())')) == '(())()'


def test_grow_forests():
    assert grow_forests(0) == ['']
    assert grow_forests(3) == sorted(['()()()', '(()())', '(())()', '((()))'])
    assert [len(grow_forests(n)) for n in range(8)] == [1, 1, 2, 4, 9, 20, 48, 115]


@pytest.mark.parametrize('n, expected', [(0, (1, 1, True)), (3, (4, 4, True)), (4, (9, 9, True))])
def test_forest_to_tree_count_check(n, expected):
    assert tuple(forest_to_tree_count_check(n)) == expected


def test_forest_check_budget():
    with pytest.raises(BudgetExceededError):
        forest_to_tree_count_check(11)
    with pytest.raises(BudgetExceededError):
        forest_to_tree_count_check(5, budget=4)


@pytest.mark.parametrize('text', ['', '()', '(())()', '((()())())()'])
def test_newick_has_a_virtual_root(text):
    forest = parse_forest(text)
    newick = forest_to_newick(forest)
    assert newick.endswith(';')
    if forest.size:
        tree = Phylo.read(StringIO(newick), 'newick')
        assert len(list(tree.find_clades())) == forest.size + 1


def test_newick_is_canonical():
    assert forest_to_newick(parse_forest('()(())')) == forest_to_newick(parse_forest('(())()'))


def test_newick_of_deep_diagram():
    depth = NEWICK_MAX_DEPTH
    newick = forest_to_newick(parse_forest('(' * depth + ')' * depth))
    assert newick.count('(') == depth
    assert newick.count(')') == depth


def test_newick_depth_limit():
    depth = 3000
    with pytest.raises(BudgetExceededError):
        forest_to_newick(parse_forest('(' * depth + ')' * depth))
