"""
Arrangements of n non-intersecting circles in the plane, counted up to
structural equivalence (C_n), and the nested-parentheses diagrams that
describe them.

A diagram is an unlabelled rooted forest: every circle is a node, the
circles directly inside it are its children. Attaching a virtual root
turns a forest on n nodes into a rooted tree on n + 1 vertices.
"""

import io
import logging
import math
from collections import namedtuple
from dataclasses import dataclass, field
from typing import List, Optional

from Bio import Phylo
from Bio.Phylo import BaseTree
from sympy.utilities.iterables import partitions

from finpart.counting import Mode, PartitionCounter, SolutionTuple, enumerate_solutions
from finpart.multiset import canonicalize
from finpart.utils import BudgetExceededError, ForestParseError

logger = logging.getLogger(__name__)

FOREST_BUDGET = 10
# Newick writing recurses once per level
NEWICK_MAX_DEPTH = 250

CircleTerm = namedtuple('CircleTerm', ['multiset', 'solution', 'term'])
ForestTreeCheck = namedtuple('ForestTreeCheck', ['forests', 'trees_with_n_plus_1', 'equal'])


def multichoose(s: int, r: int) -> int:
    """Weakly increasing r-tuples from {1..s}: binomial(r + s - 1, r)."""
    if r == 0:
        return 1
    if s == 0:
        return 0
    return math.comb(r + s - 1, r)


class CircleTable(object):
    """C_0, C_1, ... grown on demand; values[i] holds C_i."""

    def __init__(self):
        self.values = [1]

    def extend_to(self, n):
        while len(self.values) <= n:
            m = len(self.values)
            total = 0
            for partition in partitions(m):
                total += self._product(partition)
            self.values.append(total)
            logger.debug('C_%d = %d', m, total)

    def _product(self, partition):
        # partition maps part size x -> multiplicity a
        term = 1
        for x, a in partition.items():
            term *= multichoose(self.values[x - 1], a)
        return term

    def __getitem__(self, n):
        self.extend_to(n)
        return self.values[n]


TABLE = CircleTable()


def circles_count(n: int) -> int:
    return TABLE[n]


def _term_order(term):
    return (term.multiset.size, term.multiset.sort_key(), term.solution.values)


def circles_count_terms(n: int) -> List[CircleTerm]:
    """
    The terms of the triple sum for C_n, one per (A, x) pair.

    Each partition of n with distinct part sizes x_j taken a_j times is
    the pair A = {a_j}, x = (x_j), the x_j listed along the ascending
    expansion of A (strictly increasing inside equal a's).
    """
    if n < 1:
        return []
    TABLE.extend_to(n - 1)
    terms = []
    for partition in partitions(n):
        pairs = sorted((a, x) for x, a in partition.items())
        multiset = canonicalize([a for a, _ in pairs])
        solution = SolutionTuple(multiset, tuple(x for _, x in pairs))
        term = 1
        for a, x in pairs:
            term *= multichoose(TABLE.values[x - 1], a)
        terms.append(CircleTerm(multiset, solution, term))
    return sorted(terms, key=_term_order)


def theorem_terms(n: int, counter: Optional[PartitionCounter] = None) -> List[CircleTerm]:
    """
    The same terms evaluated literally: k with k(k+1)/2 <= n, A over the
    coefficient multisets of size k, x over the distinct solutions of A.
    """
    counter = counter or PartitionCounter()
    if n < 1:
        return []
    TABLE.extend_to(n - 1)
    terms = []
    k = 1
    while k * (k + 1) // 2 <= n:
        for multiset in counter.enumerate_coefficient_multisets(n, k):
            for solution in enumerate_solutions(n, multiset, Mode.DISTINCT):
                term = 1
                for a, x in zip(multiset.expand(), solution.values):
                    term *= multichoose(TABLE.values[x - 1], a)
                terms.append(CircleTerm(multiset, solution, term))
        k += 1
    return sorted(terms, key=_term_order)


###############################################################################
# Diagrams
###############################################################################


@dataclass
class Tree(object):
    children: List['Tree'] = field(default_factory=list)

    @property
    def size(self):
        total = 0
        stack = [self]
        while stack:
            node = stack.pop()
            total += 1
            stack.extend(node.children)
        return total


@dataclass
class Forest(object):
    trees: List[Tree] = field(default_factory=list)

    @property
    def size(self):
        return sum(tree.size for tree in self.trees)


def parse_forest(text: str) -> Forest:
    """
    Parse a balanced-parentheses diagram.

    forest := tree*, tree := '(' forest ')'. Whitespace and the '~' glyph
    are ignored; anything else is a ForestParseError carrying the byte
    offset into the UTF-8 encoded text.
    """
    roots: List[Tree] = []
    stack = [roots]
    opened = []
    offset = 0
    for char in text:
        if char == '(':
            node = Tree()
            stack[-1].append(node)
            stack.append(node.children)
            opened.append(offset)
        elif char == ')':
            if len(stack) == 1:
                raise ForestParseError('Unbalanced ")"', offset)
            stack.pop()
            opened.pop()
        elif char == '~' or char.isspace():
            pass
        else:
            raise ForestParseError('Unexpected character {!r}'.format(char), offset)
        offset += len(char.encode('utf-8'))
    if opened:
        raise ForestParseError(
            'Unclosed "(" opened at offset {}'.format(opened[-1]), offset
        )
    return Forest(roots)


def _sibling_key(text):
    # larger subtrees first, ties by string
    return (-len(text), text)


def _canonical_tree(root):
    done = {}
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            parts = sorted((done.pop(id(child)) for child in node.children), key=_sibling_key)
            done[id(node)] = '(' + ''.join(parts) + ')'
        else:
            stack.append((node, True))
            stack.extend((child, False) for child in node.children)
    return done[id(root)]


def canonical_form(forest: Forest) -> str:
    """Isomorphism-complete key: equal strings iff isomorphic unordered forests."""
    return ''.join(sorted((_canonical_tree(tree) for tree in forest.trees), key=_sibling_key))


def render_forest(forest: Forest, glyph: bool = False) -> str:
    text = canonical_form(forest)
    if glyph:
        # every '()' is a leaf circle
        text = text.replace('()', '(~)')
    return text


def forest_to_newick(forest: Forest) -> str:
    """
    Newick string of the rooted tree obtained by adding a virtual root.

    Children are written in canonical order, so isomorphic forests give
    the same string. Diagrams nested deeper than NEWICK_MAX_DEPTH raise
    BudgetExceededError.
    """
    built = {}
    stack = [(tree, False, 1) for tree in forest.trees]
    while stack:
        node, expanded, depth = stack.pop()
        if depth > NEWICK_MAX_DEPTH:
            raise BudgetExceededError(
                'Diagram nesting exceeds the Newick depth limit of {}'.format(NEWICK_MAX_DEPTH)
            )
        if expanded:
            children = sorted(
                (built.pop(id(child)) for child in node.children), key=lambda entry: _sibling_key(entry[0])
            )
            key = '(' + ''.join(text for text, _ in children) + ')'
            built[id(node)] = (key, BaseTree.Clade(clades=[clade for _, clade in children]))
        else:
            stack.append((node, True, depth))
            stack.extend((child, False, depth + 1) for child in node.children)

    trees = sorted(
        (built.pop(id(tree)) for tree in forest.trees), key=lambda entry: _sibling_key(entry[0])
    )
    root = BaseTree.Clade(clades=[clade for _, clade in trees])
    handle = io.StringIO()
    Phylo.write(BaseTree.Tree(root=root, rooted=True), handle, 'newick', plain=True)
    return handle.getvalue().strip()


def _grow(level):
    # every forest on m + 1 nodes is a forest on m nodes plus one leaf
    grown = set()
    for text in level:
        for position in range(len(text) + 1):
            grown.add(canonical_form(parse_forest(text[:position] + '()' + text[position:])))
    return grown


def grow_forests(n: int) -> List[str]:
    level = {''}
    for _ in range(n):
        level = _grow(level)
    return sorted(level)


def forest_to_tree_count_check(n: int, budget: int = FOREST_BUDGET) -> ForestTreeCheck:
    """
    Count canonical forests on n nodes and canonical single trees on
    n + 1 nodes by brute enumeration.
    """
    if n > budget:
        raise BudgetExceededError(
            'Forest enumeration for n={} exceeds the budget of {} nodes'.format(n, budget)
        )
    forests = set(grow_forests(n))
    trees = [text for text in _grow(forests) if len(parse_forest(text).trees) == 1]
    return ForestTreeCheck(len(forests), len(trees), len(forests) == len(trees))
