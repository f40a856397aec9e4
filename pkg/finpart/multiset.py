"""
Coefficient multisets A = {a_1, ..., a_k} with a_1 <= ... <= a_k.

A multiset is stored run-length encoded as (value, multiplicity) pairs in
strictly ascending value order. The empty multiset is a regular value
(k = 0, sigma = 0), since both recursions bottom out at the empty set.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from finpart.utils import MultisetError


@dataclass(frozen=True)
class Multiset(object):
    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = 0
        for value, multiplicity in self.entries:
            if value < 1 or multiplicity < 1:
                raise MultisetError(
                    'Invalid entry ({}, {}): values and multiplicities must be positive'
                    .format(value, multiplicity)
                )
            if value <= previous:
                raise MultisetError('Entries must be strictly ascending by value')
            previous = value

    @property
    def size(self):
        # k
        return sum(multiplicity for _, multiplicity in self.entries)

    @property
    def sigma(self):
        return sum(value * multiplicity for value, multiplicity in self.entries)

    def is_empty(self):
        return not self.entries

    def support(self):
        return [value for value, _ in self.entries]

    def multiplicity(self, value):
        for entry_value, multiplicity in self.entries:
            if entry_value == value:
                return multiplicity
        return 0

    def expand(self):
        """Ascending value list a_1 <= ... <= a_k."""
        values = []
        for value, multiplicity in self.entries:
            values.extend([value] * multiplicity)
        return values

    def to_text(self):
        return ','.join(str(value) for value in self.expand())

    def sort_key(self):
        return tuple(self.expand())

    def __str__(self):
        return '{' + self.to_text() + '}'


EMPTY = Multiset()


def canonicalize(values: Iterable[int]) -> Multiset:
    """Canonical multiset of the given positive integers, in any order."""
    values = list(values)
    for value in values:
        if not isinstance(value, int) or value < 1:
            raise MultisetError('Multiset values must be positive integers, got {!r}'.format(value))
    counts = Counter(values)
    return Multiset(tuple(sorted(counts.items())))


def parse_multiset(text: str) -> Multiset:
    """Parse the comma separated textual form ('1,2,2,3'; '' is the empty multiset)."""
    text = text.strip()
    if not text:
        return EMPTY
    values = []
    for token in text.split(','):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise MultisetError('Malformed multiset element "{}" in "{}"'.format(token, text))
    return canonicalize(values)


def remove_copies(multiset: Multiset, value: int, count: int) -> Multiset:
    """Remove `count` copies of `value`; entries reaching multiplicity 0 are dropped."""
    if count < 0:
        raise MultisetError('Cannot remove a negative number of copies')
    if count == 0:
        return multiset
    present = multiset.multiplicity(value)
    if present == 0:
        raise MultisetError('{} is not an element of {}'.format(value, multiset))
    if count > present:
        raise MultisetError(
            'Cannot remove {} copies of {} from {} (multiplicity {})'
            .format(count, value, multiset, present)
        )
    entries: List[Tuple[int, int]] = []
    for entry_value, multiplicity in multiset.entries:
        if entry_value == value:
            multiplicity -= count
            if multiplicity == 0:
                continue
        entries.append((entry_value, multiplicity))
    return Multiset(tuple(entries))


def min_distinct_sum(multiset: Multiset) -> int:
    """
    Least n with Delta(n, A) > 0: sum of (k + 1 - i) * a_i over the
    ascending expansion, i.e. the largest x goes with the smallest a.
    """
    values = multiset.expand()
    k = len(values)
    return sum((k - i) * value for i, value in enumerate(values))
