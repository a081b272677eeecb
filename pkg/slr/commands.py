# coding: utf-8
'''
Command implementations behind the ``slr`` console script.

::

    slr classify --tower builtin:sqrt5 --group builtin:S3
    slr verify --tower builtin:sqrt-3 --group builtin:S3 --rep rep.yml
    slr schur --tower builtin:sqrt3 --group builtin:C4
    slr count --tower builtin:zeta3 --group builtin:S3
    slr table --group builtin:Q8
    slr pell 34

Each ``cmd_*`` function returns a JSON-serializable report dictionary.
'''
from collections import OrderedDict
import json
import logging
import os
import sys

from path_helpers import path
import configobj
import yaml

from .characters import char_table_splitting, ingest_rational_table
from .classify import (classify_irreducibles, count_irreducibles,
                       decompose_character, galois_orbits)
from .errors import (InconsistencyError, InternalError, PreconditionError,
                     SpecError, UnsupportedError)
from .fields import (CyclotomicTower, FiniteTower, QuadraticTower,
                     format_rational, tower_from_spec)
from .groups import TwoSidedClassAction, surjection_from_spec
from .local_global import norm_equation
from .semilinear import (is_isomorphic, rep_from_spec, semilinear_character,
                         verify_cocycle)
from .skew_ring import WedderburnFactor

logger = logging.getLogger(__name__)

DATA_DIRECTORY = path(__file__).realpath().parent.joinpath('data')
BUILTIN_PREFIX = 'builtin:'
CONFIG_ENVIRONMENT_VARIABLE = 'SLR_CONFIG'

DEFAULT_CONFIG = OrderedDict([('limits', OrderedDict([
    ('budget', 10 ** 7),
    ('height', 10 ** 4),
    ('coefficient_range', 3),
    ('max_order', 128),
    ('max_degree', 16)]))])


def home_dir():
    '''
    Returns
    -------
    path_helpers.path
        Home directory of the current user.
    '''
    return path('~').expand()


def get_config_path(config_path=None):
    '''
    Resolve the configuration file path.

    Resolved as follows, highest-priority first:

     1. :data:`config_path` argument.
     2. ``SLR_CONFIG`` environment variable.
     3. ``<home directory>/.slr/slr.ini``.

    Returns
    -------
    path_helpers.path
    '''
    if config_path is not None:
        resolved_by = 'config_path argument'
        config_path = path(config_path).expand()
    elif CONFIG_ENVIRONMENT_VARIABLE in os.environ:
        resolved_by = '{} environment variable'.format(
            CONFIG_ENVIRONMENT_VARIABLE)
        config_path = path(os.environ[CONFIG_ENVIRONMENT_VARIABLE])\
            .realpath()
    else:
        resolved_by = 'default'
        config_path = home_dir().joinpath('.slr', 'slr.ini')
    logger.info('Resolved configuration path by %s: %s', resolved_by,
                config_path)
    return config_path


def load_config(config_path=None):
    '''
    Read limits from an INI file, merged over :data:`DEFAULT_CONFIG`.

    A missing or malformed file falls back to the defaults.

    Returns
    -------
    OrderedDict
        ``{'limits': {name: int}}``.
    '''
    config_path = get_config_path(config_path)
    config = OrderedDict((section, OrderedDict(values))
                         for section, values in DEFAULT_CONFIG.items())
    if not config_path.isfile():
        logger.info('No configuration file at %s; using defaults.',
                    config_path)
        return config
    try:
        stored = configobj.ConfigObj(str(config_path))
    except configobj.ConfigObjError as why:
        logger.warning('%s.  Using default configuration.', why)
        return config
    for key, value in stored.get('limits', {}).items():
        if key not in config['limits']:
            logger.warning('Ignoring unknown limit "%s" in %s', key,
                           config_path)
            continue
        try:
            config['limits'][key] = int(value)
        except (TypeError, ValueError):
            logger.warning('Limit "%s" = %r is not an integer; using %s.',
                           key, value, config['limits'][key])
    return config


# Spec loading #################################################################
def load_yaml(yaml_path):
    '''
    Parse a YAML (or JSON) file.

    Raises
    ------
    SpecError
        If the file is missing or malformed (with the line number).
    '''
    yaml_path = path(yaml_path)
    try:
        with yaml_path.open('r', encoding='utf-8') as input_:
            return yaml.safe_load(input_)
    except IOError as exception:
        raise SpecError('Cannot read {}: {}'.format(yaml_path,
                                                    exception.strerror),
                        str(yaml_path))
    except yaml.YAMLError as exception:
        mark = getattr(exception, 'problem_mark', None)
        location = ('line {}'.format(mark.line + 1) if mark is not None
                    else str(yaml_path))
        raise SpecError('Malformed YAML in {}: {}'.format(
            yaml_path, getattr(exception, 'problem', exception)), location)


def builtin_names(kind):
    return sorted(load_yaml(DATA_DIRECTORY.joinpath('{}.yml'.format(kind))))


def load_source(source, kind):
    '''
    Load a spec from a file path or ``builtin:NAME``.

    Parameters
    ----------
    source : str
    kind : str
        ``'groups'``, ``'towers'`` or ``'tables'`` (builtin data file).
    '''
    source = str(source)
    if source.startswith(BUILTIN_PREFIX):
        name = source[len(BUILTIN_PREFIX):]
        data = load_yaml(DATA_DIRECTORY.joinpath('{}.yml'.format(kind)))
        if name not in data:
            raise SpecError('Unknown builtin "{}"; available: {}'
                            .format(name, ', '.join(sorted(data))), kind)
        spec = dict(data[name])
        spec.setdefault('name', name)
        return spec
    spec = load_yaml(source)
    if not isinstance(spec, dict):
        raise SpecError('{} must contain a mapping.'.format(source), kind)
    return spec


def build_surjection(tower_source, group_source, config=None):
    '''
    :class:`slr.groups.GaloisSurjection` from tower and group sources.

    The group spec's ``sigma_images`` index the tower's ``Γ``.
    '''
    limits = (config or DEFAULT_CONFIG)['limits']
    tower = tower_from_spec(load_source(tower_source, 'towers'))
    group_spec = load_source(group_source, 'groups')
    surjection = surjection_from_spec(group_spec, tower,
                                      max_order=limits['max_order'],
                                      max_degree=limits['max_degree'])
    logger.info('Loaded %s with |G| = %d, |H| = %d over %r',
                group_spec.get('name', group_source), surjection.group.order,
                surjection.kernel.order, tower)
    return surjection


def load_rational_table(source, surjection):
    return ingest_rational_table(load_source(source, 'tables'),
                                 surjection.group)


def write_report(report, output_path):
    '''Dump ``report`` as indented JSON (``output_path`` ``-`` is stdout).'''
    if str(output_path) == '-':
        json.dump(report, sys.stdout, indent=4)
        sys.stdout.write('\n')
        return
    with path(output_path).open('w', encoding='utf-8') as output:
        json.dump(report, output, indent=4)
    logger.info('Wrote report to %s', output_path)


# Commands #####################################################################
def _header(surjection):
    group = surjection.group
    return OrderedDict([('tower', surjection.tower.to_spec()),
                        ('group', OrderedDict([('name', group.name),
                                               ('order', group.order)])),
                        ('H_order', surjection.kernel.order)])


def default_conductor(surjection):
    '''
    ``n`` with ``L = K(μ_n)`` suggested by the tower, or ``None``.
    '''
    tower = surjection.tower
    if isinstance(tower, CyclotomicTower):
        return tower.n
    if isinstance(tower, QuadraticTower):
        return {-1: 4, -3: 6}.get(tower.d)
    if isinstance(tower, FiniteTower):
        return tower.p ** tower.k - 1
    return None


def wedderburn_from_descriptors(surjection, descriptors):
    '''
    ``(n_i, dim_K D_i)`` from exact descriptors, or ``None`` while some
    Schur index or descent is bounded.

    Raises
    ------
    InternalError
        If ``Σ n_i²·dim_K D_i ≠ [L:K]·|G|``.
    '''
    if any(d.endo_dimension is None for d in descriptors):
        return None
    degree = surjection.tower.degree
    profile = []
    for d in descriptors:
        n, remainder = divmod(degree * d.dimension, d.endo_dimension)
        if remainder:
            raise InternalError('dim_K End = {} does not divide [L:K]*dim = '
                                '{} for descriptor {}.'.format(
                                    d.endo_dimension, degree * d.dimension,
                                    d.index))
        profile.append(WedderburnFactor(n, d.endo_dimension))
    total = sum(f.n ** 2 * f.division_dimension for f in profile)
    if total != degree * surjection.group.order:
        raise InternalError('Descriptors account for dimension {} of {}.'
                            .format(total, degree * surjection.group.order))
    return profile


def cmd_classify(surjection, rational_table=None, config=None, budget=None):
    '''
    Classification report: one entry per irreducible, the Wedderburn
    profile and the counting cross-check.

    An explicit budget also runs the finite-field extension searches
    that witness each orbit.
    '''
    limits = (config or DEFAULT_CONFIG)['limits']
    witnesses = budget is not None
    budget = limits['budget'] if budget is None else budget
    descriptors = classify_irreducibles(surjection,
                                        rational_table=rational_table,
                                        budget=budget,
                                        height=limits['height'],
                                        witnesses=witnesses)
    report = _header(surjection)
    report['descriptors'] = [d.to_dict() for d in descriptors]
    profile = wedderburn_from_descriptors(surjection, descriptors)
    report['wedderburn'] = (None if profile is None else
                            [list(f) for f in profile])
    n = default_conductor(surjection)
    try:
        if n is None:
            raise PreconditionError('No conductor n with L = K(mu_n).')
        count = count_irreducibles(surjection, n)
    except PreconditionError as exception:
        logger.info('Counting cross-check disabled: %s', exception)
        count = None
    if count is not None and count != len(descriptors):
        raise InternalError('{} descriptors but {} diagonal class orbits.'
                            .format(len(descriptors), count))
    report['count'] = count
    return report


def cmd_schur(surjection, orbit=None, rational_table=None, config=None,
              budget=None):
    '''Full Schur index reports, for one orbit or all of them.'''
    limits = (config or DEFAULT_CONFIG)['limits']
    budget = limits['budget'] if budget is None else budget
    descriptors = classify_irreducibles(surjection,
                                        rational_table=rational_table,
                                        budget=budget,
                                        height=limits['height'],
                                        witnesses=True)
    if orbit is not None:
        if not 0 <= orbit < len(descriptors):
            raise SpecError('Orbit {} does not exist; there are {}.'
                            .format(orbit, len(descriptors)), 'orbit')
        descriptors = [descriptors[orbit]]
    report = _header(surjection)
    report['orbits'] = [OrderedDict([('orbit', d.index),
                                     ('rows', list(d.rows)),
                                     ('stabilizer_order', d.stabilizer_order),
                                     ('gcd_bound', d.gcd_bound),
                                     ('schur_index', d.schur.to_dict())])
                        for d in descriptors]
    return report


def cmd_count(surjection, n=None):
    '''``|Cl(H)/Γ|`` with the orbits of class representatives.'''
    report = _header(surjection)
    n = default_conductor(surjection) if n is None else n
    report['conductor'] = n
    try:
        if n is None:
            raise PreconditionError('No conductor n with L = K(mu_n); pass '
                                    '--conductor.')
        report['count'] = count_irreducibles(surjection, n)
    except PreconditionError as exception:
        report['count'] = None
        report['disabled'] = str(exception)
        return report
    action = TwoSidedClassAction(surjection, n)
    H = surjection.kernel
    classes = action.classes
    report['orbits'] = [[H.label(classes.representatives[t]) for t in orbit]
                        for orbit in action.diagonal_orbits()]
    return report


def cmd_table(group):
    '''Splitting-field character table of ``group``.'''
    table = char_table_splitting(group)
    classes = table.classes
    return OrderedDict([
        ('group', OrderedDict([('name', group.name),
                               ('order', group.order)])),
        ('conductor', table.conductor),
        ('classes', [group.label(r) for r in classes.representatives]),
        ('sizes', list(classes.sizes)),
        ('rows', [[str(v) for v in row] for row in table])])


def cmd_pell(d, height=None):
    '''Negative Pell equation ``x² − d·y² = −1`` over ``Q``.'''
    report = (norm_equation(d) if height is None else
              norm_equation(d, height=height))
    certificate = report.certificate
    return OrderedDict([
        ('d', report.d),
        ('solvable', report.solvable),
        ('hilbert_symbols', report.symbols.to_dict()),
        ('obstruction', (None if report.obstruction is None else
                         str(report.obstruction))),
        ('certificate', (None if certificate is None else
                         [format_rational(certificate.x),
                          format_rational(certificate.y)])),
        ('pell_criterion', report.criterion)])


def cmd_verify(surjection, rep_spec, config=None, against=None):
    '''
    Cocycle verdict for a rep file and, when valid, the decomposition of its
    restricted character over the classified irreducibles.

    With ``against`` (a second rep spec) the report also says whether the
    two representations are isomorphic; the witness search uses the
    ``coefficient_range`` limit.
    '''
    limits = (config or DEFAULT_CONFIG)['limits']
    report = _header(surjection)
    rep = rep_from_spec(rep_spec, surjection, validate=False)
    verdict = verify_cocycle(rep)
    report['dimension'] = rep.dim
    report['valid'] = verdict.holds
    if not verdict:
        a, b = verdict.witness
        report['witness'] = [surjection.group.label(a),
                             surjection.group.label(b)]
        return report
    if against is not None:
        other = rep_from_spec(against, surjection, validate=False)
        if not verify_cocycle(other):
            raise SpecError('Comparison representation violates the cocycle '
                            'identity.', 'against')
        report['isomorphic'] = is_isomorphic(
            rep, other, coefficient_range=limits['coefficient_range'],
            budget=limits['budget'])
    character = semilinear_character(rep)
    report['character'] = [str(v) for v in character]
    galois = galois_orbits(surjection)
    try:
        coefficients = decompose_character(surjection, character, galois)
    except UnsupportedError as exception:
        report['matches'] = None
        report['disabled'] = str(exception)
        return report
    descriptors = classify_irreducibles(surjection, table=galois.table,
                                        budget=limits['budget'],
                                        height=limits['height'])
    matches = []
    for k, a in coefficients.items():
        m = descriptors[k].m
        if m is not None and a % m:
            raise InconsistencyError('Orbit {} occurs {} times, not a '
                                     'multiple of m = {}.'.format(k, a, m))
        matches.append(OrderedDict([('orbit', k), ('multiplicity', a),
                                    ('copies', None if m is None
                                     else a // m)]))
    report['matches'] = matches
    report['irreducible'] = (len(matches) == 1 and
                             matches[0]['copies'] == 1)
    return report


__all__ = ['DEFAULT_CONFIG', 'build_surjection', 'builtin_names',
           'cmd_classify', 'cmd_count', 'cmd_pell', 'cmd_schur', 'cmd_table',
           'cmd_verify', 'default_conductor', 'get_config_path',
           'load_config', 'load_rational_table', 'load_source', 'load_yaml',
           'wedderburn_from_descriptors', 'write_report']
