# coding: utf-8
'''
Schur indices ``m_K^L(W)``.

Each criterion returns a :class:`SchurIndexReport`: either an exact value
or a set of admissible divisors, with :class:`Evidence` records whose
certificates can be checked independently.  :func:`combine` intersects all
applicable criteria.
'''
from collections import OrderedDict, namedtuple
import logging
import math

from sympy import divisors, isprime, primefactors

from .characters import (cyclic_subgroups, frobenius_schur, inner_product,
                         linear_order, permutation_character)
from .cohomology import transgression, cyclic_class
from .errors import (BudgetExceededError, InternalError, PreconditionError,
                     UnsupportedError)
from .fields import FiniteTower, format_rational, unit_residue
from .local_global import NormCertificate, quaternion_class
from .semilinear import DEFAULT_BUDGET, extension_search_finite

logger = logging.getLogger(__name__)

Evidence = namedtuple('Evidence', ['criterion', 'statement', 'certificate'])


def _lcm(values):
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v)
    return result


class SchurIndexReport(object):
    '''
    Exact value or divisor set for a Schur index.

    Attributes
    ----------
    divisors : list
        Admissible values, ascending.
    exact : int or None
        Value fixed by a criterion (always a member of ``divisors``).
    evidence : list
        :class:`Evidence` records.
    relations : list
        Informational relations ``m | m_E·[E:K]``.
    '''
    def __init__(self, divisors, evidence=(), exact=None, relations=()):
        self.divisors = sorted(set(divisors))
        self.evidence = list(evidence)
        self.exact = exact
        self.relations = list(relations)

    @classmethod
    def exactly(cls, value, criterion, statement, certificate=None):
        return cls([value], [Evidence(criterion, statement, certificate)],
                   exact=value)

    @property
    def status(self):
        return 'exact' if self.value is not None else 'bounded'

    @property
    def value(self):
        if self.exact is not None:
            return self.exact
        if len(self.divisors) == 1:
            return self.divisors[0]
        return None

    @property
    def is_exact(self):
        return self.value is not None

    def to_dict(self):
        report = OrderedDict([('status', self.status)])
        if self.is_exact:
            report['value'] = self.value
        report['divisors'] = self.divisors
        report['evidence'] = [OrderedDict([('criterion', e.criterion),
                                           ('statement', e.statement),
                                           ('certificate',
                                            _render(e.certificate))])
                              for e in self.evidence]
        if self.relations:
            report['relations'] = self.relations
        return report

    def __repr__(self):
        if self.is_exact:
            return '<SchurIndexReport m={}>'.format(self.value)
        return '<SchurIndexReport m in {}>'.format(self.divisors)


def _render(certificate):
    if certificate is None:
        return None
    if hasattr(certificate, 'to_dict'):
        return certificate.to_dict()
    if hasattr(certificate, '_fields'):
        return OrderedDict((k, _render(v)) for k, v in
                           zip(certificate._fields, certificate))
    if isinstance(certificate, (list, tuple)):
        return [_render(v) for v in certificate]
    if isinstance(certificate, dict):
        return OrderedDict((str(k), _render(v)) for k, v in
                           certificate.items())
    if isinstance(certificate, (int, str, bool)):
        return certificate
    try:
        return format_rational(certificate)
    except TypeError:
        return str(certificate)


# Classical indices ############################################################
def _classical_rules(surjection, chi, base):
    tower = surjection.tower
    if chi.degree == 1 or isinstance(tower, FiniteTower):
        return 1
    e = chi.field.n
    action = tower.value_action(e)
    nu = frobenius_schur(chi)
    if tower.archimedean:
        if not base:
            return 1
        return 2 if nu == -1 else 1
    fixing = action.base_fixing if base else action.fixing
    if all(unit_residue(j, e) == 1 for j in fixing):
        return 1
    c = action.conductor
    if unit_residue(c - 1, c) in fixing and nu == -1:
        return 2
    return None


def permutation_bound(chi):
    '''
    ``hcf`` of ``⟨1_U^H, χ⟩`` over the cyclic subgroups ``U`` of ``H``.

    Permutation characters are rational, so the classical index of ``chi``
    over any field of characteristic zero divides this bound.  The trivial
    subgroup contributes ``χ(1)``.
    '''
    H = chi.group
    bound = 0
    for subgroup in cyclic_subgroups(H):
        value = inner_product(permutation_character(H, subgroup),
                              chi).rational()
        bound = math.gcd(bound, int(value.numerator))
    return bound


def classical_index(surjection, chi, base=False):
    '''
    Classical Schur index of ``chi`` over ``L`` (or over ``K`` when
    ``base``), where it follows from:

     - ``chi`` linear, or a finite field (index 1);
     - formal ``C/R`` semantics (1 over ``C``; over ``R`` 2 iff the
       Frobenius-Schur indicator is ``-1``);
     - the field containing ``Q(ζ_e)`` (index 1);
     - a real field and indicator ``-1`` (index 2);
     - ``chi`` occurring once in a permutation character (index 1, see
       :func:`permutation_bound`).

    Returns
    -------
    int or None
        ``None`` when none of the rules applies.
    '''
    value = _classical_rules(surjection, chi, base)
    if value is None and permutation_bound(chi) == 1:
        return 1
    return value


def classical_report(surjection, chi, base=False):
    '''
    :class:`SchurIndexReport` for the classical index of ``chi`` over ``L``
    (``K`` when ``base``).

    Where :func:`classical_index` is silent the index is bounded: it divides
    :func:`permutation_bound`, and a real-valued ``chi`` has index at most 2.
    '''
    field = 'K' if base else 'L'
    value = _classical_rules(surjection, chi, base)
    if value is not None:
        return SchurIndexReport.exactly(value, 'classical',
                                        'Classical index over {} is {}.'
                                        .format(field, value))
    bound = permutation_bound(chi)
    admissible = divisors(bound)
    evidence = [Evidence('permutation-character',
                         'Classical index over {} divides hcf of permutation '
                         'multiplicities = {}.'.format(field, bound), bound)]
    nu = frobenius_schur(chi)
    if nu != 0:
        admissible = [s for s in admissible if s <= 2]
        evidence.append(Evidence('real-valued', 'chi is real-valued '
                                 '(indicator {}), so the classical index is '
                                 'at most 2.'.format(nu), str(nu)))
    report = SchurIndexReport(admissible, evidence)
    logger.debug('Classical index over %s of a degree %d row: %s', field,
                 chi.degree, report)
    return report


# Criteria #####################################################################
def m_finite_field(surjection, W=None, budget=DEFAULT_BUDGET):
    '''
    ``m = 1`` over finite ``L``; with a linear rep ``W`` (the full orbit
    sum) an explicit extension is searched for as a witness.

    Raises
    ------
    PreconditionError
        If ``L`` is not finite.
    '''
    if not isinstance(surjection.tower, FiniteTower):
        raise PreconditionError('Finite field criterion needs a finite L.')
    report = SchurIndexReport.exactly(1, 'finite-field',
                                      'Over a finite field every orbit sum '
                                      'extends, so m = 1.')
    if W is not None:
        try:
            result = extension_search_finite(surjection, W, budget)
        except BudgetExceededError as exception:
            logger.info('Skipping extension witness: %s', exception)
        else:
            if result:
                report.evidence.append(Evidence('extension-search',
                                                'Exhaustive search found an '
                                                'extension of the orbit sum.',
                                                result.to_spec()))
            else:
                logger.warning('No extension among %d candidates; W is not '
                               'a Gamma-stable orbit sum.', result.candidates)
    return report


def twisted_indicator(surjection, chi):
    '''``(1/|H|)·Σ_{g ∈ G∖H} χ(g²)``.'''
    group = surjection.group
    total = chi.field.zero
    for g in range(group.order):
        if surjection.sigma[g] == 0:
            continue
        total = total + chi(surjection.kernel_element(group.multiply(g, g)))
    return total / surjection.kernel.order


def m_fs_indicator(surjection, chi):
    '''
    Real-closed criterion on a tower with formal ``C/R`` semantics:
    ``m = 2`` iff the twisted indicator is ``-1``; ``0`` means ``W`` is not
    ``Γ``-fixed (so ``m = 1``).

    Raises
    ------
    UnsupportedError
        Unless the tower is flagged ``archimedean``.
    InternalError
        If the indicator leaves ``{-1, 0, 1}``.
    '''
    if not surjection.tower.archimedean:
        raise UnsupportedError('The indicator criterion needs a tower with '
                               'archimedean semantics.')
    value = twisted_indicator(surjection, chi)
    rational = value.rational()
    if rational not in (-1, 0, 1):
        raise InternalError('Twisted indicator {} is not in {{-1, 0, 1}}; '
                            'check sigma.'.format(value))
    rational = int(rational.numerator)
    if rational == 0:
        return SchurIndexReport.exactly(1, 'fs-indicator',
                                        'Twisted indicator 0: W is moved by '
                                        'conjugation, stabilizer trivial.', 0)
    m = 2 if rational == -1 else 1
    return SchurIndexReport.exactly(m, 'fs-indicator',
                                    'Twisted indicator {} gives m = {}.'
                                    .format(rational, m), rational)


def m_1dim_norm(surjection, chi, height=None):
    '''
    Linear ``chi`` whose ``L``-orbit is ``Γ``-fixed, with ``Γ`` cyclic of
    prime order ``p``: ``W`` extends iff the transgression class is a norm.
    When ``chi`` is not ``L``-valued the class lives over ``L(χ)``.  Exact
    for quadratic ``L/Q`` (Hilbert symbols, with a rational point as
    certificate) and wherever :func:`slr.cohomology.cyclic_class` decides;
    bounded ``{1, p}`` otherwise.

    Raises
    ------
    PreconditionError
        If ``Γ`` is not cyclic of prime order, or ``chi`` is not linear and
        ``Γ``-fixed.
    '''
    tower = surjection.tower
    p = tower.degree
    if not isprime(p):
        raise PreconditionError('Norm criterion needs Gamma cyclic of prime '
                                'order, not of order {}.'.format(p))
    cocycle = transgression(surjection, chi, enlarge=True)
    cls = cyclic_class(cocycle, chi_order=linear_order(chi), height=height)
    target = cls.representative
    d = None if cocycle.action.enlarged else tower.as_quadratic()
    if d is not None:
        criterion = 'norm-equation'
        statement = 'x^2 - {}*y^2 = {}'.format(
            d, format_rational(target.rational()))
        certificate = cls.certificate
        if target == 1:
            certificate = NormCertificate(1, 0)
    else:
        criterion = 'cohomology'
        statement = 'Transgression class of {}'.format(target)
        certificate = str(target)
    if cls.trivial is None:
        return SchurIndexReport([1, p], [Evidence(
            criterion, statement + ' is undecided: {}.'.format(cls.reason),
            None)])
    m = 1 if cls.trivial else p
    verdict = 'a norm' if cls.trivial else 'not a norm'
    return SchurIndexReport.exactly(m, criterion, '{} is {} ({}).'.format(
        statement, verdict, cls.reason), certificate)


def m_prime_support(surjection, chi):
    '''
    Prime factors of ``m`` divide ``ord(chi)``; ``m | [L:K]``.
    '''
    order = linear_order(chi)
    degree = surjection.tower.degree
    primes = set(primefactors(order))
    admissible = [m for m in divisors(degree)
                  if set(primefactors(m)) <= primes]
    return SchurIndexReport(admissible, [Evidence(
        'prime-support', 'Primes of m divide ord(chi) = {} and m | [L:K] = {}.'
        .format(order, degree), order)])


def local_reports(surjection, chi, height=None):
    '''
    Local indices at every place of the support for a linear ``Γ``-fixed
    ``chi`` on a quadratic tower over ``Q``: 2 where
    ``(r, d)_v = -1`` for the transgression representative ``r``.
    '''
    d = surjection.tower.as_quadratic()
    if d is None or not surjection.tower.rational_base:
        raise UnsupportedError('Local indices are implemented for quadratic '
                               'L/Q only.')
    cls = cyclic_class(transgression(surjection, chi), height=height)
    vector = quaternion_class(cls.representative.rational(), d)
    return OrderedDict((place, SchurIndexReport.exactly(
        2 if symbol == -1 else 1, 'hilbert-symbol',
        '({}, {})_{} = {}'.format(format_rational(vector.a), d, place,
                                  symbol), symbol))
        for place, symbol in vector.symbols.items())


def m_local_global(surjection, chi, reports=None):
    '''
    ``m = lcm_v m_v`` over the places of ``K = Q``.

    Parameters
    ----------
    reports : dict, optional
        Place → local :class:`SchurIndexReport`; computed with
        :func:`local_reports` when omitted.

    Raises
    ------
    UnsupportedError
        If ``K ≠ Q``.
    PreconditionError
        If ``chi`` is not absolutely irreducible.
    '''
    if not surjection.tower.rational_base:
        raise UnsupportedError('Local-global criterion needs K = Q.')
    if inner_product(chi, chi) != 1:
        raise PreconditionError('Local-global criterion needs an absolutely '
                                'irreducible W.')
    if reports is None:
        reports = local_reports(surjection, chi)
    exact = {place: r.value for place, r in reports.items() if r.is_exact}
    ramified = [str(place) for place, m in exact.items() if m > 1]
    if len(exact) == len(reports):
        m = _lcm(exact.values())
        return SchurIndexReport.exactly(m, 'local-global',
                                        'lcm of local indices is {}.'
                                        .format(m),
                                        ramified or None)
    lower = _lcm(exact.values())
    upper = _lcm(max(r.divisors) for r in reports.values())
    admissible = [m for m in divisors(upper) if m % lower == 0]
    return SchurIndexReport(admissible, [Evidence(
        'local-global', 'Local indices are not all exact.', ramified or None)])


def relations(surjection):
    '''
    ``m | m_E·[E:K]`` for the fixed fields ``E`` of the nontrivial proper
    cyclic subgroups of ``Γ``.
    '''
    tower = surjection.tower
    seen = set()
    found = []
    for g in range(1, tower.degree):
        subgroup = tuple(tower.closure([g]))
        if subgroup in seen or len(subgroup) == tower.degree:
            continue
        seen.add(subgroup)
        labels = ','.join(tower.gamma[i].label for i in subgroup if i)
        found.append('m | m_E * {} for E = L^<{}>'
                     .format(tower.degree // len(subgroup), labels))
    return found


# Combination ##################################################################
def _split_extension(classical, descent):
    '''``m = m_K(χ) / m_L(χ)`` for ``G = H x Γ`` over admissible ``m_L``.'''
    candidates = sorted(set(classical // s for s in descent
                            if classical % s == 0))
    if not candidates:
        raise InternalError('Classical index {} over K is not a multiple of '
                            'any admissible index over L {}.'
                            .format(classical, list(descent)))
    statement = ('G = H x Gamma: m is the classical index over K ({}) '
                 'divided by the index over L ({}).'
                 .format(classical, ' or '.join(str(s) for s in descent)))
    if len(candidates) == 1:
        return SchurIndexReport.exactly(candidates[0], 'split-extension',
                                        statement)
    return SchurIndexReport(candidates, [Evidence('split-extension',
                                                  statement, classical)])


def combine(surjection, chi, stabilizer_order, gcd_bound=None, descent=(1, ),
            witness=None, budget=DEFAULT_BUDGET, height=None):
    '''
    Intersect every applicable criterion for the orbit of ``chi``.

    Parameters
    ----------
    surjection : slr.groups.GaloisSurjection
    chi : slr.characters.ClassFunction
        A splitting-field row in the orbit.
    stabilizer_order : int
        ``|Γ_W|``.
    gcd_bound : int, optional
        ``hcf`` of the multiplicities ``a_{U,O}`` from a rational table.
    descent : sequence, optional
        Admissible classical indices of ``chi`` over ``L`` (a single value
        when it is known).
    witness : slr.semilinear.LinearRep, optional
        Orbit-sum representation searched for an explicit extension over a
        finite ``L``.

    Returns
    -------
    SchurIndexReport

    Raises
    ------
    InternalError
        If exact criteria disagree or the divisor set becomes empty.
    '''
    tower = surjection.tower
    admissible = set(divisors(stabilizer_order))
    evidence = [Evidence('stabilizer', 'm divides |Gamma_W| = {}.'
                         .format(stabilizer_order), stabilizer_order)]
    exact = []

    def merge(report):
        admissible.intersection_update(report.divisors)
        evidence.extend(report.evidence)
        if report.exact is not None:
            exact.append(report.exact)

    if gcd_bound is not None:
        merge(SchurIndexReport(divisors(gcd_bound), [Evidence(
            'gcd-bound', 'm divides hcf of rational multiplicities = {}.'
            .format(gcd_bound), gcd_bound)]))
    fixed = stabilizer_order == tower.degree
    if all(v == 1 for v in chi.values):
        merge(SchurIndexReport.exactly(1, 'trivial-character',
                                       'The trivial character extends.'))
    if isinstance(tower, FiniteTower):
        merge(m_finite_field(surjection, witness, budget))
    if tower.archimedean:
        merge(m_fs_indicator(surjection, chi))
    if chi.degree == 1 and fixed:
        merge(m_prime_support(surjection, chi))
    # C/R semantics: K plays R, so rational norm criteria do not apply.
    if chi.degree == 1 and fixed and not tower.archimedean:
        try:
            merge(m_1dim_norm(surjection, chi, height=height))
        except PreconditionError as exception:
            logger.debug('Norm criterion skipped: %s', exception)
        if tower.as_quadratic() is not None and tower.rational_base:
            try:
                merge(m_local_global(surjection, chi))
            except PreconditionError as exception:
                logger.debug('Local-global criterion skipped: %s', exception)
    if surjection.is_split and fixed:
        classical = classical_index(surjection, chi, base=True)
        if classical is not None:
            merge(_split_extension(classical, descent))
    if len(set(exact)) > 1:
        raise InternalError('Exact criteria disagree: {}'.format(exact))
    if not admissible:
        raise InternalError('No admissible Schur index remains.')
    value = exact[0] if exact else None
    if value is not None and value not in admissible:
        raise InternalError('Exact value {} violates the divisor bounds {}.'
                            .format(value, sorted(admissible)))
    report = SchurIndexReport(admissible if value is None else [value],
                              evidence, exact=value,
                              relations=relations(surjection))
    if report.is_exact and tower.degree % report.value:
        raise InternalError('m = {} does not divide [L:K] = {}.'
                            .format(report.value, tower.degree))
    if report.is_exact:
        logger.info('Schur index %d by %s', report.value,
                    ', '.join(sorted(set(e.criterion for e in evidence))))
    else:
        logger.warning('Schur index bounded to %s', report.divisors)
    return report


__all__ = ['Evidence', 'SchurIndexReport', 'classical_index',
           'classical_report', 'combine', 'local_reports', 'm_1dim_norm',
           'm_finite_field', 'm_fs_indicator',
           'm_local_global', 'm_prime_support', 'permutation_bound',
           'relations', 'twisted_indicator']
