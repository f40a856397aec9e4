"""
finVerify - acceptance suites for the finpart counting library
Copyright (C) 2026 finpart developers

finpart is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

finpart is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with finpart.  If not, see <http://www.gnu.org/licenses/>.
"""

import argparse
import dataclasses
import json
import logging
import math
import multiprocessing as mp
import sys
import time
from dataclasses import dataclass, field

from sympy import npartitions
from sympy.utilities.iterables import partitions

from finpart.circles import (
    circles_count, circles_count_terms, forest_to_tree_count_check, grow_forests, multichoose,
    parse_forest, canonical_form, theorem_terms
)
from finpart.closed_forms import FormulaId, adjudicate, check_triangular_identity, validate_formula
from finpart.counting import Mode, PartitionCounter, enumerate_solutions, partition_count, pi
from finpart.multiset import EMPTY, Multiset, canonicalize
from finpart.utils import (
    FinpartError, load_parameters, log_level, non_negative_int, positive_int, print_header,
    setup_logging
)
from finpart.verification.oracles import (
    OracleBudget, dyck_words, enumerate_canonical_forests, forests_isomorphic, rooted_trees_euler,
    tally
)

logger = logging.getLogger(__name__)

BUDGET_KEYS = ('max_sigma', 'max_n', 'max_forest_nodes')
SWEEP_KEYS = (
    'max_circles', 'closed_n_max', 'triangular_n_max', 'shift_sigma', 'shift_n',
    'partition_n_max', 'multichoose_max', 'isomorphism_nodes'
)


@dataclass(frozen=True)
class SuiteSettings(object):
    budget: OracleBudget = field(default_factory=OracleBudget)
    max_circles: int = 30
    closed_n_max: int = 500
    triangular_n_max: int = 12
    shift_sigma: int = 6
    shift_n: int = 25
    partition_n_max: int = 25
    multichoose_max: int = 20
    isomorphism_nodes: int = 7

    @classmethod
    def from_parameters(cls, path):
        """
        Settings from a parameters file with 'budget' and 'sweeps'
        documents; keys not given keep their defaults.
        """
        params = load_parameters(path)
        values = {}
        for in_type, entries in params.items():
            if in_type == 'budget':
                allowed = BUDGET_KEYS + ('max_circles',)
            elif in_type == 'sweeps':
                allowed = SWEEP_KEYS
            else:
                raise FinpartError('Unknown parameter type "{}" in {}'.format(in_type, path))
            for key, value in entries.items():
                if key not in allowed:
                    raise FinpartError('Unknown {} parameter "{}" in {}'.format(in_type, key, path))
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise FinpartError('{} must be a non-negative integer, got {!r}'.format(key, value))
                values[key] = value
        return cls().override(**values)

    def override(self, **values):
        """Copy with the given values replaced; None leaves a field as it is."""
        values = {key: value for key, value in values.items() if value is not None}
        budget_values = {key: values.pop(key) for key in BUDGET_KEYS if key in values}
        budget = dataclasses.replace(self.budget, **budget_values)
        return dataclasses.replace(self, budget=budget, **values)


@dataclass
class SuiteResult(object):
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'detail': self.detail,
            'seconds': round(self.seconds, 3),
        }


def multisets_up_to(max_sigma):
    """Every multiset with sigma <= max_sigma, the empty one included."""
    found = [EMPTY]
    for total in range(1, max_sigma + 1):
        for partition in partitions(total):
            found.append(Multiset(tuple(sorted(partition.items()))))
    return sorted(found, key=lambda multiset: (multiset.sigma, multiset.sort_key()))


def _summarize(failures, checked):
    if failures:
        shown = '; '.join(failures[:5])
        more = ' (+{} more)'.format(len(failures) - 5) if len(failures) > 5 else ''
        return False, '{} of {} checks failed: {}{}'.format(len(failures), checked, shown, more)
    return True, '{} checks passed'.format(checked)


def _compare(checks):
    failures = [
        '{}: got {}, expected {}'.format(label, got, expected)
        for label, got, expected in checks if got != expected
    ]
    return _summarize(failures, len(checks))


###############################################################################
# Suites
###############################################################################


def reference_values(settings, cpu):
    counter = PartitionCounter()
    example = canonicalize([1, 2, 2, 3])
    solutions = {solution.values for solution in enumerate_solutions(18, example, Mode.DISTINCT)}
    checks = [
        ('pi(7,3)', pi(7, 3), 4),
        ('d(17,{1,2,2,3})', counter.d(17, example), 18),
        ('d0(17,{1,2,2,3})', counter.d0(17, example), 72),
        ('delta(18,{1,2,2,3})', counter.delta(18, example), 3),
        ('solutions of delta(18,{1,2,2,3})', solutions, {(3, 2, 4, 1), (5, 2, 3, 1), (4, 1, 3, 2)}),
        ('C_0..C_6', [circles_count(n) for n in range(7)], [1, 1, 2, 4, 9, 20, 48]),
        ('terms of C_6', sorted(term.term for term in circles_count_terms(6)),
         sorted([20, 3, 1, 1, 9, 4, 4, 2, 1, 1, 2])),
    ]
    return _compare(checks)


def coefficient_multisets(settings, cpu):
    counter = PartitionCounter()
    expected = {
        1: ['1', '2', '3', '6'],
        2: ['1,1', '1,2', '1,3', '1,4', '2,2'],
        3: ['1,1,1'],
    }
    checks = [
        ('A(6,{})'.format(k), [m.to_text() for m in counter.enumerate_coefficient_multisets(6, k)], sets)
        for k, sets in expected.items()
    ]
    return _compare(checks)


def _oracle_cell(task):
    # runs inside a pool worker, one fresh engine per cell
    multiset, n_max = task
    counter = PartitionCounter()
    by_min = PartitionCounter(pivot='min')
    natural = tally(multiset, n_max)
    distinct = tally(multiset, n_max, distinct=True)
    failures = []
    for n in range(n_max + 1):
        value = counter.d(n, multiset)
        if value != natural[n]:
            failures.append('d({}, {}) = {}, oracle {}'.format(n, multiset, value, natural[n]))
        if by_min.d(n, multiset) != value:
            failures.append('d({}, {}) depends on the pivot'.format(n, multiset))
        value = counter.delta(n, multiset)
        if value != distinct[n]:
            failures.append('delta({}, {}) = {}, oracle {}'.format(n, multiset, value, distinct[n]))
    return failures


def oracle_equivalence(settings, cpu):
    budget = settings.budget
    tasks = [(multiset, budget.max_n) for multiset in multisets_up_to(budget.max_sigma)]
    logger.info('Checking %d multisets up to n=%d on %d cores', len(tasks), budget.max_n, cpu)
    if cpu > 1:
        with mp.Pool(cpu) as pool:
            results = pool.map(_oracle_cell, tasks)
    else:
        results = [_oracle_cell(task) for task in tasks]
    failures = [failure for cell in results for failure in cell]
    return _summarize(failures, len(tasks) * (budget.max_n + 1))


def closed_forms(settings, cpu):
    counter = PartitionCounter()
    failures = []
    notes = []
    for formula in FormulaId:
        report = validate_formula(formula, settings.closed_n_max, counter)
        ok, message = adjudicate(report)
        if ok:
            notes.append('{}: {}'.format(formula.value, len(report.mismatches)))
        else:
            failures.append('{}: {}'.format(formula.value, message))
    proof = validate_formula(FormulaId.D_123, settings.closed_n_max, counter, variant='proof')
    if not proof.agrees:
        first = proof.mismatches[0]
        failures.append('D_123 proof form disagrees at n={}'.format(first.n))
    if failures:
        return _summarize(failures, len(FormulaId) + 1)
    return True, 'mismatches inside the recorded domains: {}'.format(', '.join(notes))


def triangular(settings, cpu):
    counter = PartitionCounter()
    failures = []
    for n in range(1, settings.triangular_n_max + 1):
        check = check_triangular_identity(n, counter)
        if not check.equal:
            failures.append('n={}: {} != {}'.format(n, check.lhs, check.rhs))
    return _summarize(failures, settings.triangular_n_max)


def shift_identities(settings, cpu):
    counter = PartitionCounter()
    failures = []
    checked = 0
    for multiset in multisets_up_to(settings.shift_sigma):
        natural = tally(multiset, settings.shift_n, lowest=0)
        distinct = tally(multiset, settings.shift_n, lowest=0, distinct=True)
        for n in range(settings.shift_n + 1):
            checked += 2
            if counter.d0(n, multiset) != natural[n]:
                failures.append('d0({}, {}) = {}, oracle {}'.format(n, multiset, counter.d0(n, multiset), natural[n]))
            if counter.delta0(n, multiset) != distinct[n]:
                failures.append(
                    'delta0({}, {}) = {}, oracle {}'.format(n, multiset, counter.delta0(n, multiset), distinct[n])
                )
    return _summarize(failures, checked)


def circles(settings, cpu):
    budget = settings.budget
    counter = PartitionCounter()
    checks = [
        ('C_0..C_{}'.format(settings.max_circles),
         [circles_count(n) for n in range(settings.max_circles + 1)],
         rooted_trees_euler(settings.max_circles)),
    ]
    for n in range(budget.max_forest_nodes + 1):
        forests = enumerate_canonical_forests(n, budget)
        checks.append(('forests on {} nodes'.format(n), len(forests), circles_count(n)))
        checks.append(('leaf insertion on {} nodes'.format(n), grow_forests(n), forests))
        check = forest_to_tree_count_check(n, budget.max_forest_nodes)
        checks.append(('trees on {} nodes'.format(n + 1), check.trees_with_n_plus_1, check.forests))
    for n in range(1, 21):
        checks.append(('sum of terms for C_{}'.format(n),
                       sum(term.term for term in circles_count_terms(n)), circles_count(n)))
        widest = max((k for k in range(1, n + 1) if counter.enumerate_coefficient_multisets(n, k)), default=0)
        checks.append(('k(k+1)/2 <= {} for k={}'.format(n, widest), widest * (widest + 1) // 2 <= n, True))
    for n in range(1, 13):
        checks.append(('triple sum terms for C_{}'.format(n), theorem_terms(n, counter), circles_count_terms(n)))
    return _compare(checks)


def partition_cross_check(settings, cpu):
    counter = PartitionCounter()
    checks = []
    for n in range(1, settings.partition_n_max + 1):
        total = 0
        k = 1
        while k * (k + 1) // 2 <= n:
            total += sum(counter.delta(n, multiset) for multiset in counter.enumerate_coefficient_multisets(n, k))
            k += 1
        checks.append(('p({}) via pi'.format(n), total, partition_count(n)))
        checks.append(('p({}) via npartitions'.format(n), total, int(npartitions(n))))
    return _compare(checks)


def multichoose_identity(settings, cpu):
    checks = []
    top = settings.multichoose_max
    for r in range(1, top + 1):
        for s in range(1, top + 1):
            lhs = sum(math.comb(r - 1, i - 1) * math.comb(s, i) for i in range(1, r + 1))
            checks.append(('r={} s={}'.format(r, s), lhs, multichoose(s, r)))
    return _compare(checks)


def forest_isomorphism(settings, cpu):
    failures = []
    checked = 0
    for n in range(settings.isomorphism_nodes + 1):
        classes = {}
        for word in dyck_words(n):
            checked += 1
            forest = parse_forest(word)
            form = canonical_form(forest)
            if canonical_form(parse_forest(form)) != form:
                failures.append('{} does not round-trip'.format(word))
            representative = classes.setdefault(form, forest)
            if not forests_isomorphic(forest, representative):
                failures.append('{} shares a canonical form with a non-isomorphic forest'.format(word))
        representatives = list(classes.values())
        for i, first in enumerate(representatives):
            for second in representatives[i + 1:]:
                checked += 1
                if forests_isomorphic(first, second):
                    failures.append('isomorphic forests with different canonical forms on {} nodes'.format(n))
    return _summarize(failures, checked)


SUITES = {
    'reference_values': reference_values,
    'coefficient_multisets': coefficient_multisets,
    'oracle_equivalence': oracle_equivalence,
    'closed_forms': closed_forms,
    'triangular': triangular,
    'shift_identities': shift_identities,
    'circles': circles,
    'partition_cross_check': partition_cross_check,
    'multichoose_identity': multichoose_identity,
    'forest_isomorphism': forest_isomorphism,
}


def run_suites(names=None, settings=None, cpu=1):
    settings = settings or SuiteSettings()
    results = []
    for name in names or list(SUITES):
        if name not in SUITES:
            raise FinpartError('Unknown suite "{}"'.format(name))
        logger.info('Running suite %s', name)
        start = time.perf_counter()
        passed, detail = SUITES[name](settings, cpu)
        result = SuiteResult(name, passed, detail, time.perf_counter() - start)
        if passed:
            logger.info('%s passed in %.2f s', name, result.seconds)
        else:
            logger.warning('%s failed: %s', name, detail)
        results.append(result)
    return results


def report(results):
    return {
        'passed': all(result.passed for result in results),
        'suites': [result.to_dict() for result in results],
    }


def add_verify_arguments(parser):
    """Arguments shared by finVerify and 'finpart verify'."""
    selection = parser.add_mutually_exclusive_group()
    selection.add_argument(
        '--all', action='store_true',
        help='Run every suite (Default when no --suite is given)'
    )
    selection.add_argument(
        '--suite', metavar='NAME', action='append', choices=list(SUITES),
        help='Run only this suite, may be repeated. One of: {}'.format(', '.join(SUITES))
    )
    budget = parser.add_argument_group('Budget Arguments')
    budget.add_argument(
        '--max-sigma', metavar='int', type=positive_int, default=None,
        help='Largest multiset mass for the oracle sweep (Default: 8)'
    )
    budget.add_argument(
        '--max-n', metavar='int', type=positive_int, default=None,
        help='Largest target n for the oracle sweep (Default: 40)'
    )
    budget.add_argument(
        '--max-forest', metavar='int', type=non_negative_int, default=None,
        help='Largest forest size for exhaustive forest enumeration (Default: 10)'
    )
    budget.add_argument(
        '--max-circles', metavar='int', type=non_negative_int, default=None,
        help='Compare C_n with the rooted tree recurrence up to this n (Default: 30)'
    )
    optional = parser.add_argument_group('Optional Arguments')
    optional.add_argument(
        '-p', '--parameters', metavar='<.yaml>', type=str, default=None,
        help='Path to a parameters file with budget and sweeps documents'
    )
    # cpu, use maximum number of available cpus unless specified otherwise
    optional.add_argument(
        '--cpu', metavar='int', type=positive_int, nargs='?',
        const=mp.cpu_count(), default=mp.cpu_count(),
        help='Number of CPU cores to use (Default: all available)'
    )


def run_verify(args, out=None):
    """Run the selected suites for parsed arguments; returns the exit status."""
    out = out or sys.stdout
    available_cpu = mp.cpu_count()
    if args.cpu > available_cpu:
        logger.error(
            'The provided number of CPU cores is higher than the number available on this system'
        )
        return 1

    settings = SuiteSettings()
    if args.parameters:
        settings = SuiteSettings.from_parameters(args.parameters)
    settings = settings.override(
        max_sigma=args.max_sigma, max_n=args.max_n,
        max_forest_nodes=args.max_forest, max_circles=args.max_circles
    )

    print_header('finVerify - acceptance suites for finpart', logger)
    results = run_suites(args.suite, settings, args.cpu)
    summary = report(results)
    if args.format == 'json':
        print(json.dumps(summary, indent=2), file=out)
    else:
        for result in results:
            print('{}\t{}\t{:.2f}s\t{}'.format(
                'PASS' if result.passed else 'FAIL', result.name, result.seconds, result.detail
            ), file=out)
        print('passed' if summary['passed'] else 'FAILED', file=out)
    return 0 if summary['passed'] else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        description='Run the finpart acceptance suites against the independent oracles.'
    )
    add_verify_arguments(parser)
    output = parser.add_argument_group('Output Arguments')
    output.add_argument(
        '--format', choices=('text', 'json'), default='text',
        help='Report format on standard output (Default: text)'
    )
    output.add_argument('-v', '--verbose', action='store_true', help='Log debug messages')
    output.add_argument('-q', '--quiet', action='store_true', help='Only log errors')
    args = parser.parse_args(argv)

    setup_logging(log_level(args.verbose, args.quiet, default=logging.INFO))
    try:
        status = run_verify(args)
    except FinpartError as err:
        logger.error(str(err))
        status = 1
    sys.exit(status)


if __name__ == '__main__':
    main()
