"""
Independent oracles for the counting and circle modules.

Nothing here calls into the recursions it checks: D and Delta are
counted by exhaustive search over tuples, C_n comes from the classical
recurrence for unlabelled rooted trees, and canonical forests are
generated from all Dyck words instead of by leaf insertion.
"""

import logging
from dataclasses import dataclass
from typing import List

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match
from sympy import divisors

from finpart.circles import Forest, canonical_form, parse_forest
from finpart.multiset import Multiset
from finpart.utils import BudgetExceededError, InexactDivisionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleBudget(object):
    max_sigma: int = 8
    max_n: int = 40
    max_forest_nodes: int = 10

    def check(self, n, multiset):
        if n > self.max_n:
            raise BudgetExceededError('n={} exceeds the oracle budget max_n={}'.format(n, self.max_n))
        if multiset.sigma > self.max_sigma:
            raise BudgetExceededError(
                'sigma({})={} exceeds the oracle budget max_sigma={}'
                .format(multiset, multiset.sigma, self.max_sigma)
            )

    def check_forest(self, n):
        if n > self.max_forest_nodes:
            raise BudgetExceededError(
                'n={} exceeds the forest budget max_forest_nodes={}'.format(n, self.max_forest_nodes)
            )


DEFAULT_BUDGET = OracleBudget()


def _tuples(coefficients, n_max, lowest, distinct):
    # Yields (tuple, weighted sum) for every admissible tuple with sum <= n_max.
    k = len(coefficients)
    values = []

    def place(i, total):
        if i == k:
            yield tuple(values), total
            return
        a = coefficients[i]
        x = lowest
        if i > 0 and coefficients[i - 1] == a:
            x = values[-1] + 1 if distinct else values[-1]
        while total + a * x <= n_max:
            if not (distinct and x in values):
                values.append(x)
                yield from place(i + 1, total + a * x)
                values.pop()
            x += 1

    yield from place(0, 0)


def tally(multiset: Multiset, n_max: int, lowest: int = 1, distinct: bool = False) -> List[int]:
    """
    Count admissible tuples by weighted sum in one pass: entry n of the
    result is the brute-force count for target n.
    """
    counts = [0] * (n_max + 1)
    for _, total in _tuples(multiset.expand(), n_max, lowest, distinct):
        counts[total] += 1
    return counts


def _count(n, multiset, lowest, distinct, budget):
    budget.check(n, multiset)
    return sum(1 for _, total in _tuples(multiset.expand(), n, lowest, distinct) if total == n)


def d_bruteforce(n: int, multiset: Multiset, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return _count(n, multiset, 1, False, budget)


def delta_bruteforce(n: int, multiset: Multiset, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return _count(n, multiset, 1, True, budget)


def d0_bruteforce(n: int, multiset: Multiset, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Non-negative tuples, weakly increasing inside runs of equal coefficients."""
    return _count(n, multiset, 0, False, budget)


def delta0_bruteforce(n: int, multiset: Multiset, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return _count(n, multiset, 0, True, budget)


def rooted_trees_euler(n_max: int) -> List[int]:
    """
    [C_0, ..., C_n_max] from the rooted tree recurrence.

    t(1) = 1 and t(m + 1) = (1/m) sum_{j=1}^{m} (sum_{d | j} d t(d)) t(m - j + 1);
    C_n is t(n + 1).
    """
    t = [0, 1]
    for m in range(1, n_max + 1):
        total = 0
        for j in range(1, m + 1):
            weight = sum(int(d) * t[int(d)] for d in divisors(j))
            total += weight * t[m - j + 1]
        if total % m:
            raise InexactDivisionError(
                'Rooted tree recurrence: {} is not divisible by {}'.format(total, m)
            )
        t.append(total // m)
    return t[1:n_max + 2]


def dyck_words(n: int) -> List[str]:
    """All balanced parenthesis strings with n pairs, lexicographically sorted."""
    words = []
    stack = [('', 0, 0)]
    while stack:
        prefix, opened, closed = stack.pop()
        if closed == n:
            words.append(prefix)
            continue
        if opened < n:
            stack.append((prefix + '(', opened + 1, closed))
        if closed < opened:
            stack.append((prefix + ')', opened, closed + 1))
    return sorted(words)


def enumerate_canonical_forests(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> List[str]:
    budget.check_forest(n)
    forms = {canonical_form(parse_forest(word)) for word in dyck_words(n)}
    logger.debug('%d canonical forests on %d nodes', len(forms), n)
    return sorted(forms)


def forest_graph(forest: Forest) -> nx.Graph:
    """Undirected tree on n + 1 vertices, vertex 0 the virtual root."""
    graph = nx.Graph()
    graph.add_node(0, root=True)
    stack = [(0, tree) for tree in forest.trees]
    while stack:
        parent, tree = stack.pop()
        node = graph.number_of_nodes()
        graph.add_node(node, root=False)
        graph.add_edge(parent, node)
        stack.extend((node, child) for child in tree.children)
    return graph


def forests_isomorphic(first: Forest, second: Forest) -> bool:
    return nx.is_isomorphic(
        forest_graph(first), forest_graph(second),
        node_match=categorical_node_match('root', False)
    )
