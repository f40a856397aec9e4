"""
Explicit floor-function formulas for D and Delta on small multisets, and
adjudication of each formula against the recursion engine.

Every formula is evaluated exactly as printed, with integer floor division
and Fraction for the halves; nothing is corrected here. validate_formula
records where a formula disagrees with the recursion and known_failure
describes the disagreement domains the sweeps established.
"""

import enum
import logging
import math
from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from finpart.counting import PartitionCounter, identity_multiset
from finpart.multiset import Multiset, canonicalize

logger = logging.getLogger(__name__)

PAIR_VALUE_MAX = 6


class FormulaId(enum.Enum):
    D_12 = 'D_12'
    D_122 = 'D_122'
    D_112 = 'D_112'
    D_123 = 'D_123'
    D_pair_equal = 'D_pair_equal'
    D_pair_distinct = 'D_pair_distinct'
    DELTA_11 = 'DELTA_11'
    DELTA_12 = 'DELTA_12'


# multiset each single-multiset formula is about
FORMULA_MULTISETS = {
    FormulaId.D_12: canonicalize([1, 2]),
    FormulaId.D_122: canonicalize([1, 2, 2]),
    FormulaId.D_112: canonicalize([1, 1, 2]),
    FormulaId.D_123: canonicalize([1, 2, 3]),
    FormulaId.DELTA_11: canonicalize([1, 1]),
    FormulaId.DELTA_12: canonicalize([1, 2]),
}

D_FORMULAS = (FormulaId.D_12, FormulaId.D_122, FormulaId.D_112, FormulaId.D_123)
DELTA_FORMULAS = (FormulaId.DELTA_11, FormulaId.DELTA_12)
PAIR_FORMULAS = (FormulaId.D_pair_equal, FormulaId.D_pair_distinct)

Mismatch = namedtuple('Mismatch', ['n', 'multiset', 'closed', 'recursion'])
TriangularCheck = namedtuple('TriangularCheck', ['lhs', 'rhs', 'equal'])


@dataclass
class ValidityReport(object):
    formula: FormulaId
    tested_range: Tuple[int, int]
    mismatches: List[Mismatch] = field(default_factory=list)
    variant: str = 'printed'

    @property
    def agrees(self):
        return not self.mismatches

    def to_dict(self):
        return {
            'formula': self.formula.value,
            'variant': self.variant,
            'range': list(self.tested_range),
            'mismatches': [
                {
                    'n': mismatch.n,
                    'multiset': mismatch.multiset.to_text(),
                    'closed': str(mismatch.closed),
                    'recursion': str(mismatch.recursion),
                }
                for mismatch in self.mismatches
            ],
        }


def _exact(value):
    # int when the expression came out integral, else the Fraction itself
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def d_closed(n: int, formula: FormulaId):
    """
    Evaluate one of the explicit D formulas for {1,2}, {1,2,2}, {1,1,2}
    and {1,2,3}.
    """
    if formula is FormulaId.D_12:
        return (n - 1) // 2
    if formula is FormulaId.D_122:
        return ((n - 1) // 4) * ((n + 1) // 2 - (n + 3) // 4)
    if formula is FormulaId.D_112:
        left = math.floor(Fraction(3, 2) * ((n - 1) // 3) + Fraction(1, 2))
        right = (
            (n - 1) // 2
            - Fraction(1, 2) * math.floor(Fraction(3, 2) * ((n + 2) // 3))
            + Fraction(1 + (-1) ** n, 2)
        )
        return _exact(left * right)
    if formula is FormulaId.D_123:
        half = (n - 4) // 2
        first = ((n - 4) // 6) * Fraction(2 * ((n - 3) // 2) - (n + 2) // 6, 2)
        second = Fraction(((2 * half) // 3) * ((2 * half - 3) // 3), 2)
        third = ((2 * half + 3) // 6) * Fraction(2 * ((n - 2) // 2) - (2 * half + 9) // 6, 2)
        return _exact(first - second + third)
    raise ValueError('{} is not a D formula for a fixed multiset'.format(formula.value))


def d123_proof_form(n: int, counter: Optional[PartitionCounter] = None) -> int:
    """D(n, {1,2,3}) through the identity D(n, {1,2,3}) = D(n - 3, I_3)."""
    counter = counter or PartitionCounter()
    if n < 3:
        return 0
    return counter.d(n - 3, identity_multiset(3))


def d_pair_closed(n: int, a1: int, a2: int) -> int:
    """
    D(n, {a1, a2}) as floor(n / (2 a1)) for a1 = a2 and
    floor((n - 1) / (a1 a2)) otherwise.
    """
    a1, a2 = sorted((a1, a2))
    if a1 == a2:
        return n // (2 * a1)
    return (n - 1) // (a1 * a2)


def delta_closed(n: int, formula: FormulaId) -> int:
    if formula is FormulaId.DELTA_11:
        return (n - 1) // 2
    if formula is FormulaId.DELTA_12:
        return (n - 1) // 3 + (n - 1) // 6
    raise ValueError('{} is not a Delta formula'.format(formula.value))


def check_triangular_identity(n: int, counter: Optional[PartitionCounter] = None) -> TriangularCheck:
    """D(n(n+3)/2, {1, ..., n}) against D(2n, I_n)."""
    counter = counter or PartitionCounter()
    lhs = counter.d(n * (n + 3) // 2, canonicalize(range(1, n + 1)))
    rhs = counter.d(2 * n, identity_multiset(n))
    return TriangularCheck(lhs, rhs, lhs == rhs)


def pair_multisets(formula: FormulaId):
    values = range(1, PAIR_VALUE_MAX + 1)
    if formula is FormulaId.D_pair_equal:
        return [canonicalize([a, a]) for a in values]
    return [canonicalize([a1, a2]) for a1 in values for a2 in values if a1 < a2]


def validate_formula(formula: FormulaId, n_max: int, counter: Optional[PartitionCounter] = None,
                     variant: str = 'printed') -> ValidityReport:
    """
    Compare a closed form with the recursion on n = 1..n_max.

    Parameters
    ----------
    formula : FormulaId
    n_max : INT
        Upper end of the tested range.
    counter : PartitionCounter
        Engine to compare against; a fresh one when omitted.
    variant : STR
        'printed' (default) or, for D_123 only, 'proof' to test the
        identity D(n, {1,2,3}) = D(n - 3, I_3) instead of the printed
        expression.

    Returns
    -------
    report : ValidityReport
        All disagreements, ordered by multiset then n.

    """
    counter = counter or PartitionCounter()
    if variant not in ('printed', 'proof'):
        raise ValueError('Unknown variant "{}"'.format(variant))
    if variant == 'proof' and formula is not FormulaId.D_123:
        raise ValueError('Only D_123 has a proof-line variant')
    report = ValidityReport(formula, (1, n_max), variant=variant)

    if formula in PAIR_FORMULAS:
        for multiset in pair_multisets(formula):
            a1, a2 = multiset.expand()
            for n in range(1, n_max + 1):
                closed = d_pair_closed(n, a1, a2)
                recursion = counter.d(n, multiset)
                if closed != recursion:
                    report.mismatches.append(Mismatch(n, multiset, closed, recursion))
    else:
        multiset = FORMULA_MULTISETS[formula]
        for n in range(1, n_max + 1):
            if formula in DELTA_FORMULAS:
                closed = delta_closed(n, formula)
                recursion = counter.delta(n, multiset)
            elif variant == 'proof':
                closed = d123_proof_form(n, counter)
                recursion = counter.d(n, multiset)
            else:
                closed = d_closed(n, formula)
                recursion = counter.d(n, multiset)
            if closed != recursion:
                report.mismatches.append(Mismatch(n, multiset, closed, recursion))

    logger.info(
        '%s (%s) on 1..%d: %d mismatches',
        formula.value, variant, n_max, len(report.mismatches)
    )
    return report


def known_failure(formula: FormulaId, n: int, multiset: Multiset, variant: str = 'printed'):
    """
    True where the printed formula is known to disagree with the
    recursion, False where it is known to agree, None where no exact
    description exists (the general distinct-pair case).
    """
    if variant == 'proof':
        return False
    if formula is FormulaId.DELTA_12:
        return n % 6 == 5
    if formula is FormulaId.D_123:
        return n % 6 in (0, 1, 3)
    if formula is FormulaId.D_pair_equal:
        a = multiset.support()[0]
        return a >= 2 and n % a != 0 and n >= 2 * a
    if formula is FormulaId.D_pair_distinct:
        if multiset.expand()[0] == 1:
            return False
        return None
    return False


def adjudicate(report: ValidityReport):
    """
    Check a report against the recorded failure domains.

    Returns (ok, message): ok is True when the formula disagrees exactly
    where known_failure says so (for the general distinct pair: only
    outside a1 = 1, with the (5, {2,3}) witness present when in range).
    """
    found = {(mismatch.n, mismatch.multiset) for mismatch in report.mismatches}
    low, high = report.tested_range
    if report.formula in PAIR_FORMULAS:
        cells = [(n, multiset) for multiset in pair_multisets(report.formula) for n in range(low, high + 1)]
    else:
        cells = [(n, FORMULA_MULTISETS[report.formula]) for n in range(low, high + 1)]

    unexpected = []
    missing = []
    for n, multiset in cells:
        expected = known_failure(report.formula, n, multiset, report.variant)
        if expected is None:
            continue
        if (n, multiset) in found and not expected:
            unexpected.append((n, multiset))
        elif (n, multiset) not in found and expected:
            missing.append((n, multiset))

    if report.formula is FormulaId.D_pair_distinct and high >= 5:
        witness = Mismatch(5, canonicalize([2, 3]), 0, 1)
        if witness not in report.mismatches:
            return False, 'witness (5, {2,3}, 0, 1) missing'
    if unexpected:
        n, multiset = unexpected[0]
        return False, '{} unexpected mismatches, first at n={} {}'.format(len(unexpected), n, multiset)
    if missing:
        n, multiset = missing[0]
        return False, '{} recorded failures did not occur, first at n={} {}'.format(len(missing), n, multiset)
    return True, '{} mismatches, all inside the recorded domain'.format(len(report.mismatches))
