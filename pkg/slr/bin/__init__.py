# coding: utf-8
from argparse import ArgumentParser
from collections import OrderedDict
import logging
import sys

import si_prefix as si

from .. import pformat_dict
from ..commands import (build_surjection, cmd_classify, cmd_count, cmd_pell,
                        cmd_schur, cmd_table, cmd_verify, get_config_path,
                        load_config, load_rational_table, load_source,
                        write_report)
from ..errors import exit_code
from ..groups import build_group

logger = logging.getLogger(__name__)

# Parsers that may be reused by other modules.
LOG_PARSER = ArgumentParser(add_help=False)
LOG_PARSER.add_argument('-l', '--log-level', default='error',
                        choices=['error', 'debug', 'info'])
CONFIG_PARSER = ArgumentParser(add_help=False)
CONFIG_PARSER.add_argument('-c', '--config-file', help='Configuration file '
                           '(default: $SLR_CONFIG or ~/.slr/slr.ini).')

JSON_PARSER = ArgumentParser(add_help=False)
JSON_PARSER.add_argument('--json', metavar='PATH', help='Write the report '
                         'as JSON ("-" for stdout).')

JOB_PARSER = ArgumentParser(add_help=False)
JOB_PARSER.add_argument('--tower', required=True, help='Tower spec file or '
                        'builtin:NAME.')
JOB_PARSER.add_argument('--group', required=True, help='Group spec file or '
                        'builtin:NAME.')

TABLE_PARSER = ArgumentParser(add_help=False)
TABLE_PARSER.add_argument('--rational-table', metavar='SRC',
                          help='Character table of G over K = Q (file or '
                          'builtin:NAME).')

BUDGET_PARSER = ArgumentParser(add_help=False)
BUDGET_PARSER.add_argument('--budget', type=int, help='Candidate budget for '
                           'exhaustive searches.')

SLR_PARSER = ArgumentParser(add_help=False, parents=[LOG_PARSER,
                                                     CONFIG_PARSER])

subparsers = SLR_PARSER.add_subparsers(help='help for subcommand',
                                       dest='command')
subparsers.add_parser('classify', help='Classify irreducible semilinear '
                      'representations.',
                      parents=[JOB_PARSER, TABLE_PARSER, BUDGET_PARSER,
                               JSON_PARSER])

verify_parser = subparsers.add_parser('verify', help='Check a semilinear '
                                      'representation and match it to the '
                                      'classification.',
                                      parents=[JOB_PARSER, JSON_PARSER])
verify_parser.add_argument('--rep', required=True, help='Representation '
                           'file (generator matrices).')
verify_parser.add_argument('--against', metavar='REP', help='Second '
                           'representation file to test for isomorphism.')

schur_parser = subparsers.add_parser('schur', help='Schur indices with '
                                     'evidence.',
                                     parents=[JOB_PARSER, TABLE_PARSER,
                                              BUDGET_PARSER, JSON_PARSER])
schur_parser.add_argument('--orbit', type=int, help='Report one orbit only.')

count_parser = subparsers.add_parser('count', help='Count irreducibles by '
                                     'class orbits.',
                                     parents=[JOB_PARSER, JSON_PARSER])
count_parser.add_argument('--conductor', type=int, help='n with L = K(mu_n) '
                          '(default: from the tower).')

table_parser = subparsers.add_parser('table', help='Splitting-field '
                                     'character table.',
                                     parents=[JSON_PARSER])
table_parser.add_argument('--group', required=True, help='Group spec file '
                          'or builtin:NAME.')

pell_parser = subparsers.add_parser('pell', help='Negative Pell equation '
                                    'x^2 - d y^2 = -1 over Q.',
                                    parents=[JSON_PARSER])
pell_parser.add_argument('d', type=int)
pell_parser.add_argument('--height', type=int, help='Certificate height '
                         'bound.')


def parse_args(args=None):
    '''Parses arguments, returns ``(options, args)``.'''
    if args is None:
        args = sys.argv[1:]

    parser = ArgumentParser(description='Semilinear representations of '
                            'finite groups over Galois extensions.',
                            parents=[SLR_PARSER])

    return parser.parse_args(args)


def validate_args(args):
    '''
    Apply custom validation and actions based on parsed arguments.

    Parameters
    ----------
    args : argparse.Namespace
        Result from ``parse_args`` method of ``argparse.ArgumentParser``
        instance.

    Returns
    -------
    argparse.Namespace
        Reference to input ``args``, which have been validated/updated.
    '''
    logging.basicConfig(level=getattr(logging, args.log_level.upper()))

    if args.command is None:
        print('A subcommand is required (see --help).', file=sys.stderr)
        raise SystemExit(2)
    for name in ('budget', 'height', 'conductor'):
        value = getattr(args, name, None)
        if value is not None and value <= 0:
            print('--{} must be positive, got {}.'.format(name, value),
                  file=sys.stderr)
            raise SystemExit(2)
    args.config_file = get_config_path(args.config_file)
    return args


def _format_m(report):
    if report['status'] == 'exact':
        return str(report['value'])
    return '|'.join(map(str, report['divisors']))


def format_report(command, report):
    '''Human-readable rendering of a command report.'''
    lines = []
    if 'tower' in report:
        lines.append('G = {} (order {}), |H| = {}, tower {}'.format(
            report['group']['name'] or '?', report['group']['order'],
            report['H_order'], dict(report['tower'])))
    if command == 'classify':
        descriptors = report['descriptors']
        lines.append(pformat_dict(OrderedDict([
            ('orbit', [d['index'] for d in descriptors]),
            ('rows', [d['orbit'] for d in descriptors]),
            ('|Gamma_W|', [d['stabilizer_order'] for d in descriptors]),
            ('m', [_format_m(d['schur_index']) for d in descriptors]),
            ('dim_L', [d['dimension'] for d in descriptors]),
            ('dim_K End', [d['endo_dimension'] for d in descriptors])])))
        if report['count'] is not None:
            lines.append('Class orbits: {}'.format(report['count']))
    elif command == 'schur':
        for entry in report['orbits']:
            schur = entry['schur_index']
            lines.append('orbit {} (rows {}): m = {} [{}]'.format(
                entry['orbit'], entry['rows'], _format_m(schur),
                schur['status']))
            for evidence in schur['evidence']:
                lines.append('  - {}: {}'.format(evidence['criterion'],
                                                 evidence['statement']))
    elif command == 'count':
        if report['count'] is None:
            lines.append('Counting disabled: {}'.format(report['disabled']))
        else:
            lines.append('|Cl(H)/Gamma| = {} (n = {})'.format(
                report['count'], report['conductor']))
            lines.extend('  {}'.format(', '.join(orbit))
                         for orbit in report['orbits'])
    elif command == 'table':
        columns = OrderedDict([('class', report['classes']),
                               ('size', report['sizes'])])
        for i, row in enumerate(report['rows']):
            columns['chi{}'.format(i)] = row
        lines.append(pformat_dict(columns))
    elif command == 'pell':
        lines.append('x^2 - {}*y^2 = -1: {}'.format(
            report['d'], 'solvable' if report['solvable'] else
            'not solvable (obstruction at {})'.format(report['obstruction'])))
        if report['certificate'] is not None:
            lines.append('certificate (x, y) = ({}, {})'.format(
                *report['certificate']))
        symbols = report['hilbert_symbols']
        lines.append(pformat_dict(OrderedDict([
            ('place', list(symbols)), ('(-1, d)', list(symbols.values()))])))
        lines.append('squarefree criterion: {}'.format(
            report['pell_criterion']))
    elif command == 'verify':
        if not report['valid']:
            lines.append('INVALID: cocycle relation fails at ({}, {})'.format(
                *report['witness']))
        elif report.get('matches') is None:
            lines.append('valid; {}'.format(report['disabled']))
        else:
            if 'isomorphic' in report:
                lines.append('isomorphic to --against: {}'.format(
                    report['isomorphic']))
            lines.append('valid; restricted character: {}'.format(
                ', '.join(report['character'])))
            lines.append(pformat_dict(OrderedDict([
                ('orbit', [m['orbit'] for m in report['matches']]),
                ('multiplicity', [m['multiplicity']
                                  for m in report['matches']]),
                ('copies', [m['copies'] for m in report['matches']])])))
    return '\n'.join(lines)


def run(args):
    '''Dispatch a validated namespace; returns ``(report, exit code)``.'''
    config = load_config(args.config_file)
    limits = config['limits']
    if args.command == 'pell':
        return cmd_pell(args.d, args.height or limits['height']), 0
    if args.command == 'table':
        group = build_group(load_source(args.group, 'groups'),
                            max_order=limits['max_order'],
                            max_degree=limits['max_degree'])
        return cmd_table(group), 0
    surjection = build_surjection(args.tower, args.group, config)
    if args.command == 'count':
        return cmd_count(surjection, args.conductor), 0
    if args.command == 'verify':
        against = None
        if args.against is not None:
            against = load_source(args.against, 'reps')
        report = cmd_verify(surjection, load_source(args.rep, 'reps'),
                            config, against)
        return report, 0 if report['valid'] else 2
    rational_table = None
    if args.rational_table is not None:
        rational_table = load_rational_table(args.rational_table, surjection)
    budget = args.budget
    if budget is not None:
        logger.info('Search budget: %s candidates',
                    si.si_format(budget, precision=0))
    if args.command == 'classify':
        return cmd_classify(surjection, rational_table, config, budget), 0
    return cmd_schur(surjection, args.orbit, rational_table, config,
                     budget), 0


def main(args=None):
    if args is None:
        args = parse_args()
    args = validate_args(args)
    logger.debug('Arguments: %s', args)
    try:
        report, code = run(args)
    except (ValueError, RuntimeError) as exception:
        print('[{}] {}'.format(type(exception).__name__, exception),
              file=sys.stderr)
        raise SystemExit(exit_code(exception))
    if args.json is not None:
        write_report(report, args.json)
    if args.json != '-':
        print(format_report(args.command, report))
    if code:
        raise SystemExit(code)
