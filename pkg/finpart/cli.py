"""
finpart - restricted partition numbers and circle arrangements
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
import json
import logging
import sys

from finpart.circles import (
    circles_count, circles_count_terms, forest_to_newick, parse_forest, render_forest
)
from finpart.closed_forms import (
    DELTA_FORMULAS, D_FORMULAS, FormulaId, d_closed, d_pair_closed, delta_closed, validate_formula
)
from finpart.counting import Mode, PartitionCounter, enumerate_solutions, pi
from finpart.multiset import parse_multiset
from finpart.utils import (
    FinpartError, MultisetError, log_level, non_negative_int, positive_int, setup_logging
)
from finpart.verification.oracles import OracleBudget, enumerate_canonical_forests
from finpart.verification.suites import add_verify_arguments, run_verify

logger = logging.getLogger('finpart')

COUNT_MODES = {
    'd': Mode.NATURAL,
    'd0': Mode.ARITHMETIC,
    'delta': Mode.DISTINCT,
    'delta0': Mode.ARITHMETIC_DISTINCT,
}


def multiset_arg(text):
    try:
        return parse_multiset(text)
    except MultisetError as err:
        raise argparse.ArgumentTypeError(str(err))


def pair_arg(text):
    multiset = multiset_arg(text)
    if multiset.size != 2:
        raise argparse.ArgumentTypeError('Exactly two values expected, got "{}"'.format(text))
    return multiset


def _emit(args, payload, lines):
    if args.format == 'json':
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _tuple_text(values):
    return '(' + ','.join(str(x) for x in values) + ')'


def cmd_pi(args, parser):
    count = pi(args.n, args.k)
    _emit(args, {'n': args.n, 'k': args.k, 'count': str(count)}, [count])
    return 0


def cmd_count(args, parser):
    mode = COUNT_MODES[args.command]
    multiset = args.multiset
    logger.info('Multiset: %s', multiset.to_text())
    count = PartitionCounter().count(args.n, multiset, mode)
    payload = {'function': args.command, 'n': args.n, 'multiset': multiset.to_text(), 'count': str(count)}
    lines = [count]
    if args.list:
        solutions = enumerate_solutions(args.n, multiset, mode)
        payload['solutions'] = [list(solution.values) for solution in solutions]
        lines.extend(_tuple_text(solution.values) for solution in solutions)
    _emit(args, payload, lines)
    return 0


def cmd_multisets(args, parser):
    found = PartitionCounter().enumerate_coefficient_multisets(args.n, args.k)
    payload = {'n': args.n, 'k': args.k, 'multisets': [multiset.to_text() for multiset in found]}
    _emit(args, payload, [str(multiset) for multiset in found])
    return 0


def cmd_circles(args, parser):
    count = circles_count(args.n)
    payload = {'n': args.n, 'count': str(count)}
    lines = [count]
    if args.terms:
        terms = circles_count_terms(args.n)
        payload['terms'] = [
            {'A': term.multiset.to_text(), 'x': list(term.solution.values), 'term': str(term.term)}
            for term in terms
        ]
        lines.extend(
            '{}\t{}\t{}'.format(term.multiset, _tuple_text(term.solution.values), term.term)
            for term in terms
        )
    _emit(args, payload, lines)
    return 0


def cmd_forest_parse(args, parser):
    forest = parse_forest(args.text)
    canonical = render_forest(forest)
    payload = {
        'input': args.text,
        'canonical': canonical,
        'size': forest.size,
        'trees': len(forest.trees),
    }
    _emit(args, payload, [render_forest(forest, glyph=args.glyph)])
    return 0


def cmd_forest_enum(args, parser):
    budget = OracleBudget(max_forest_nodes=args.max_forest)
    forests = enumerate_canonical_forests(args.n, budget)
    payload = {'n': args.n, 'count': str(len(forests)), 'forests': forests}
    if args.glyph:
        lines = [render_forest(parse_forest(text), glyph=True) for text in forests]
    else:
        lines = forests
    _emit(args, payload, lines)
    return 0


def cmd_forest_newick(args, parser):
    forest = parse_forest(args.text)
    newick = forest_to_newick(forest)
    _emit(args, {'canonical': render_forest(forest), 'newick': newick}, [newick])
    return 0


def _formula(parser, text):
    try:
        return FormulaId(text)
    except ValueError:
        parser.error('unknown formula "{}" (choose from {})'.format(
            text, ', '.join(formula.value for formula in FormulaId)
        ))


def cmd_closed(args, parser):
    words = args.words
    if words[0] == 'validate':
        if len(words) != 2:
            parser.error('usage: closed validate <formula-id> --max N')
        if args.max is None:
            parser.error('closed validate requires --max')
        formula = _formula(parser, words[1])
        if args.variant == 'proof' and formula is not FormulaId.D_123:
            parser.error('--variant proof only applies to D_123')
        report = validate_formula(formula, args.max, variant=args.variant)
        payload = report.to_dict()
        payload['agrees'] = report.agrees
        lines = ['{} ({}) on 1..{}: {} mismatches'.format(
            formula.value, report.variant, args.max, len(report.mismatches)
        )]
        lines.extend(
            'n={}\t{}\tclosed={}\trecursion={}'.format(m.n, m.multiset, m.closed, m.recursion)
            for m in report.mismatches
        )
        _emit(args, payload, lines)
        return 0

    if len(words) != 2:
        parser.error('usage: closed <formula-id> <n>')
    formula = _formula(parser, words[0])
    try:
        n = positive_int(words[1])
    except argparse.ArgumentTypeError as err:
        parser.error(str(err))
    payload = {'formula': formula.value, 'n': n}
    if formula in D_FORMULAS:
        value = d_closed(n, formula)
    elif formula in DELTA_FORMULAS:
        value = delta_closed(n, formula)
    else:
        if args.pair is None:
            parser.error('{} requires --pair a1,a2'.format(formula.value))
        a1, a2 = args.pair.expand()
        if formula is FormulaId.D_pair_equal and a1 != a2:
            parser.error('D_pair_equal needs two equal values')
        if formula is FormulaId.D_pair_distinct and a1 == a2:
            parser.error('D_pair_distinct needs two different values')
        value = d_pair_closed(n, a1, a2)
        payload['pair'] = [a1, a2]
    payload['value'] = str(value)
    _emit(args, payload, [value])
    return 0


def cmd_verify(args, parser):
    return run_verify(args)


def _output_parser(default):
    # given before or after the subcommand; a SUPPRESS default keeps the earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', choices=('text', 'json'), default='text' if default else argparse.SUPPRESS,
        help='Output format on standard output (Default: text)'
    )
    common.add_argument(
        '-v', '--verbose', action='store_true', default=False if default else argparse.SUPPRESS,
        help='Log debug messages'
    )
    common.add_argument(
        '-q', '--quiet', action='store_true', default=False if default else argparse.SUPPRESS,
        help='Only log errors'
    )
    return common


def build_parser():
    common = _output_parser(default=False)
    parser = argparse.ArgumentParser(
        prog='finpart', parents=[_output_parser(default=True)],
        description='Restricted partition numbers D, Delta and circle arrangement counts C_n.'
    )
    commands = parser.add_subparsers(dest='command', metavar='<command>')

    sub = commands.add_parser('pi', parents=[common], help='Partitions of n into exactly k parts')
    sub.add_argument('n', type=non_negative_int)
    sub.add_argument('k', type=non_negative_int)
    sub.set_defaults(handler=cmd_pi)

    for name, mode in COUNT_MODES.items():
        sub = commands.add_parser(name, parents=[common], help='{} count of (n, A)'.format(name))
        sub.add_argument('n', type=non_negative_int)
        sub.add_argument('multiset', metavar='A', type=multiset_arg,
                         help='Comma separated coefficients in any order, e.g. 1,2,2,3')
        sub.add_argument('--list', action='store_true', help='Also print every solution tuple')
        sub.set_defaults(handler=cmd_count)

    sub = commands.add_parser('multisets', parents=[common], help='Coefficient multisets A(n, k)')
    sub.add_argument('n', type=positive_int)
    sub.add_argument('k', type=positive_int)
    sub.set_defaults(handler=cmd_multisets)

    sub = commands.add_parser('circles', parents=[common], help='Arrangements of n circles')
    sub.add_argument('n', type=non_negative_int)
    sub.add_argument('--terms', action='store_true', help='Print the term expansion of the triple sum')
    sub.set_defaults(handler=cmd_circles)

    forest = commands.add_parser('forest', help='Nested parentheses diagrams')
    forest_commands = forest.add_subparsers(dest='forest_command', metavar='<action>')
    forest_commands.required = True
    sub = forest_commands.add_parser('parse', parents=[common], help='Canonical form of a diagram')
    sub.add_argument('text')
    sub.add_argument('--glyph', action='store_true', help='Render leaf circles as (~)')
    sub.set_defaults(handler=cmd_forest_parse)
    sub = forest_commands.add_parser('enum', parents=[common], help='All canonical diagrams on n circles')
    sub.add_argument('n', type=non_negative_int)
    sub.add_argument('--glyph', action='store_true', help='Render leaf circles as (~)')
    sub.add_argument('--max-forest', metavar='int', type=non_negative_int, default=10,
                     help='Enumeration budget in nodes (Default: 10)')
    sub.set_defaults(handler=cmd_forest_enum)
    sub = forest_commands.add_parser('newick', parents=[common], help='Newick string of the rooted tree')
    sub.add_argument('text')
    sub.set_defaults(handler=cmd_forest_newick)

    sub = commands.add_parser(
        'closed', parents=[common],
        usage='finpart closed <formula-id> <n> [--pair a1,a2] | finpart closed validate <formula-id> --max N',
        help='Evaluate or validate a closed form'
    )
    sub.add_argument('words', nargs='+', metavar='ARG')
    sub.add_argument('--pair', type=pair_arg, default=None, help='Coefficients a1,a2 for D_pair_*')
    sub.add_argument('--max', type=positive_int, default=None, help='Upper end of the validation range')
    sub.add_argument('--variant', choices=('printed', 'proof'), default='printed',
                     help='D_123 only: validate the identity D(n,{1,2,3}) = D(n-3,I_3) (Default: printed)')
    sub.set_defaults(handler=cmd_closed)

    sub = commands.add_parser('verify', parents=[common], help='Run the acceptance suites')
    add_verify_arguments(sub)
    sub.set_defaults(handler=cmd_verify)

    return parser


def _subparser(parser, args):
    # the parser that owns args.command, for usage errors raised after parsing
    actions = [action for action in parser._actions if isinstance(action, argparse._SubParsersAction)]
    sub = actions[0].choices[args.command]
    if args.command == 'forest':
        nested = [action for action in sub._actions if isinstance(action, argparse._SubParsersAction)]
        sub = nested[0].choices[args.forest_command]
    return sub


def run(argv=None):
    """Run the command line; returns the exit status."""
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    if not argv:
        parser.print_help(sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
        if args.command is None or not hasattr(args, 'handler'):
            parser.print_help(sys.stderr)
            return 2
        setup_logging(log_level(args.verbose, args.quiet, default=logging.INFO))
        return args.handler(args, _subparser(parser, args))
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    except FinpartError as err:
        logger.error(str(err))
        return 1


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
