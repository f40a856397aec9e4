"""
Memoized recursions for Pi, D, D_0, Delta and Delta_0, and enumeration of
solution tuples and of coefficient multisets.

D(n, A) counts positive tuples (x_1, ..., x_k) with sum a_i * x_i = n and
x_i <= x_{i+1} whenever a_i = a_{i+1}. Delta(n, A) counts the tuples whose
entries are pairwise distinct and strictly increasing inside runs of equal
coefficients. The arithmetic variants allow x_i = 0 and follow from the
shift identities D_0(n, A) = D(n + sigma(A), A) and
Delta_0(n, A) = Delta(n + sigma(A), A).
"""

import enum
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from finpart.multiset import EMPTY, Multiset, canonicalize, min_distinct_sum, remove_copies

logger = logging.getLogger(__name__)


class Mode(enum.Enum):
    NATURAL = 'natural'
    DISTINCT = 'distinct'
    ARITHMETIC = 'arithmetic'
    ARITHMETIC_DISTINCT = 'arithmetic_distinct'

    @property
    def distinct(self):
        return self in (Mode.DISTINCT, Mode.ARITHMETIC_DISTINCT)

    @property
    def lowest(self):
        # smallest admissible x_i
        return 0 if self in (Mode.ARITHMETIC, Mode.ARITHMETIC_DISTINCT) else 1


@dataclass(frozen=True)
class SolutionTuple(object):
    multiset: Multiset
    values: Tuple[int, ...]

    def weighted_sum(self):
        return sum(a * x for a, x in zip(self.multiset.expand(), self.values))

    def is_admissible(self, mode):
        coefficients = self.multiset.expand()
        if len(coefficients) != len(self.values):
            return False
        if any(x < mode.lowest for x in self.values):
            return False
        if mode.distinct and len(set(self.values)) != len(self.values):
            return False
        for i in range(1, len(self.values)):
            if coefficients[i] == coefficients[i - 1]:
                if mode.distinct and not self.values[i - 1] < self.values[i]:
                    return False
                if not self.values[i - 1] <= self.values[i]:
                    return False
        return True


def pi(n: int, k: int) -> int:
    """
    Number of partitions of n into exactly k positive parts.

    Bottom-up evaluation of Pi(m, s) = sum_{t=0}^{s} Pi(m - s, t) with
    Pi(0, 0) = 1 and Pi(m, s) = 0 for m < s.
    """
    if n < 0 or k < 0:
        return 0
    if k > n:
        return 0
    # table[m][s] for m <= n, s <= k
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for s in range(1, min(m, k) + 1):
            table[m][s] = sum(table[m - s][t] for t in range(0, min(s, m - s) + 1))
    return table[n][k]


def partition_count(n: int) -> int:
    """Unrestricted partition number p(n) = sum_k Pi(n, k)."""
    return sum(pi(n, k) for k in range(0, n + 1))


class PartitionCounter(object):
    """
    Counting engine owning its memo table.

    The memo maps (n, multiset, mode) to a count, mode being NATURAL or
    DISTINCT; the arithmetic counts go through the shift identities.
    `pivot` selects the value a in the D recursion ('max' or 'min').
    One engine per thread or process.
    """

    def __init__(self, pivot='max'):
        if pivot not in ('max', 'min'):
            raise ValueError('pivot must be "max" or "min"')
        self.pivot = pivot
        self.memo: Dict[Tuple[int, Multiset, Mode], int] = {}

    def d(self, n: int, multiset: Multiset) -> int:
        self._warm(n, multiset, Mode.NATURAL, self._natural)
        return self._natural(n, multiset)

    def d0(self, n: int, multiset: Multiset) -> int:
        return self.d(n + multiset.sigma, multiset)

    def delta(self, n: int, multiset: Multiset) -> int:
        self._warm(n, multiset, Mode.DISTINCT, self._distinct)
        return self._distinct(n, multiset)

    def delta0(self, n: int, multiset: Multiset) -> int:
        return self.delta(n + multiset.sigma, multiset)

    def count(self, n, multiset, mode):
        if mode is Mode.NATURAL:
            return self.d(n, multiset)
        if mode is Mode.DISTINCT:
            return self.delta(n, multiset)
        if mode is Mode.ARITHMETIC:
            return self.d0(n, multiset)
        return self.delta0(n, multiset)

    def _warm(self, n, multiset, mode, recursion):
        # Fill the memo in ascending n so a deep query never recurses far.
        if (n, multiset, mode) in self.memo:
            return
        for m in range(multiset.sigma, n):
            recursion(m, multiset)

    def _natural(self, n, multiset):
        if multiset.is_empty():
            return 1 if n == 0 else 0
        if n < multiset.sigma:
            return 0
        key = (n, multiset, Mode.NATURAL)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        entry = multiset.entries[-1] if self.pivot == 'max' else multiset.entries[0]
        value, multiplicity = entry
        # x = 1 for the first l copies of `value`, all others shift down by one
        rest = n - value * multiplicity
        total = 0
        for removed in range(multiplicity + 1):
            total += self._natural(rest, remove_copies(multiset, value, removed))
        self.memo[key] = total
        return total

    def _distinct(self, n, multiset):
        if multiset.is_empty():
            return 1 if n == 0 else 0
        if n < min_distinct_sum(multiset):
            return 0
        key = (n, multiset, Mode.DISTINCT)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        # at most one x_i equals 1, it must be the first of its run
        rest = n - multiset.sigma
        total = self._distinct(rest, multiset)
        for value in multiset.support():
            total += self._distinct(rest, remove_copies(multiset, value, 1))
        self.memo[key] = total
        return total

    def enumerate_coefficient_multisets(self, n: int, k: int) -> List[Multiset]:
        """
        All multisets A of size k with Delta(n, A) >= 1, sorted by their
        ascending expansion.
        """
        if n < 1 or k < 1:
            return []
        found = []
        for values in _ascending_candidates(n, k):
            candidate = canonicalize(values)
            if self.delta(n, candidate) >= 1:
                found.append(candidate)
        logger.debug('%d coefficient multisets of size %d for n=%d', len(found), k, n)
        return found


def _ascending_candidates(n, k) -> Iterator[List[int]]:
    # Ascending sequences a_1 <= ... <= a_k with min_distinct_sum <= n.
    # The weight of position i is k - i (0-based); later a's are at least
    # the current one, which gives the lower bound used for pruning.
    tail_weight = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        tail_weight[i] = tail_weight[i + 1] + (k - i)

    def extend(prefix, used):
        i = len(prefix)
        if i == k:
            yield list(prefix)
            return
        lowest = prefix[-1] if prefix else 1
        value = lowest
        while used + value * tail_weight[i] <= n:
            prefix.append(value)
            yield from extend(prefix, used + (k - i) * value)
            prefix.pop()
            value += 1

    yield from extend([], 0)


def enumerate_solutions(n: int, multiset: Multiset, mode: Mode = Mode.NATURAL) -> List[SolutionTuple]:
    """
    Every admissible tuple for (n, A) in lexicographic order of the values.

    Backtracking over x_1, x_2, ... directly; it shares nothing with the
    counting recursions, so list lengths cross-check the counts.
    """
    coefficients = multiset.expand()
    k = len(coefficients)
    lowest = mode.lowest
    # least weight the positions i.. can still take
    floor_after = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        floor_after[i] = floor_after[i + 1] + coefficients[i] * lowest

    solutions = []
    values = []
    used = set()

    def place(i, remaining):
        if i == k:
            if remaining == 0:
                solutions.append(SolutionTuple(multiset, tuple(values)))
            return
        a = coefficients[i]
        start = lowest
        if i > 0 and coefficients[i - 1] == a:
            start = values[-1] + 1 if mode.distinct else values[-1]
        x = start
        while a * x + floor_after[i + 1] <= remaining:
            if not mode.distinct:
                values.append(x)
                place(i + 1, remaining - a * x)
                values.pop()
            elif x not in used:
                values.append(x)
                used.add(x)
                place(i + 1, remaining - a * x)
                used.discard(x)
                values.pop()
            x += 1

    place(0, n)
    return solutions


_DEFAULT = PartitionCounter()


def d(n, multiset):
    return _DEFAULT.d(n, multiset)


def d0(n, multiset):
    return _DEFAULT.d0(n, multiset)


def delta(n, multiset):
    return _DEFAULT.delta(n, multiset)


def delta0(n, multiset):
    return _DEFAULT.delta0(n, multiset)


def enumerate_coefficient_multisets(n, k):
    return _DEFAULT.enumerate_coefficient_multisets(n, k)


def identity_multiset(k):
    """I_k, k copies of 1."""
    return Multiset(((1, k),)) if k > 0 else EMPTY
