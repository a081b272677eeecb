# coding: utf-8
'''
Transgression of ``Γ``-fixed linear characters of ``H`` to 2-cocycles
``f: Γ×Γ → L^×`` and their classes modulo norms for cyclic ``Γ``.

Cocycle values are computed in the cyclotomic value model ``Q(ζ_c)`` of the
tower (see :meth:`slr.fields.FieldTower.value_action`); ``γ`` acts there
through its lift.
'''
from collections import namedtuple
import logging
import math

from .characters import galois_twist, linear_order
from .errors import (InternalError, PreconditionError, TowerMismatchError,
                     UnsupportedError)
from .fields import CyclotomicNumber, FiniteTower, ValueAction, unit_residue
from .local_global import norm_equation

logger = logging.getLogger(__name__)


class TwoCocycle(object):
    '''
    Normalized 2-cocycle ``f`` on ``Γ`` with values in ``Q(ζ_c)``.

    Attributes
    ----------
    table : tuple
        ``table[a][b] = f(γ_a, γ_b)`` (indices into ``tower.gamma``).
    '''
    def __init__(self, tower, action, table):
        self.tower = tower
        self.action = action
        self.field = action.field
        self.table = tuple(tuple(row) for row in table)

    def __call__(self, a, b):
        return self.table[a][b]

    def act(self, gamma, x):
        return self.field.galois(self.action.lifts[gamma], x)

    def check(self):
        '''
        First triple failing
        ``γ1(f(γ2,γ3))·f(γ1,γ2γ3) = f(γ1γ2,γ3)·f(γ1,γ2)``, or a pair
        breaking normalization, else ``None``.
        '''
        n = self.tower.degree
        compose = self.tower.compose
        for a in range(n):
            if self.table[0][a] != 1 or self.table[a][0] != 1:
                return (0, a)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    lhs = self.act(a, self.table[b][c]) * \
                        self.table[a][compose(b, c)]
                    rhs = self.table[compose(a, b)][c] * self.table[a][b]
                    if lhs != rhs:
                        return (a, b, c)
        return None

    @property
    def is_trivial(self):
        return all(v == 1 for row in self.table for v in row)

    def to_list(self):
        return [[str(v) for v in row] for row in self.table]


def check_linear_fixed(surjection, chi, action):
    '''
    Raise unless ``chi`` is linear, ``L``-valued and ``Γ``-fixed.

    Raises
    ------
    PreconditionError
    '''
    if chi.degree != 1:
        raise PreconditionError('Transgression needs a linear character, got '
                                'degree {}.'.format(chi.degree))
    field = action.field
    lifted = [field.lift(v) for v in chi.values]
    for j in action.fixing:
        if any(field.galois(j, v) != v for v in lifted):
            raise PreconditionError('Character values do not lie in L.')
    for gamma in range(surjection.tower.degree):
        if list(galois_twist(surjection, action, chi, gamma)) != lifted:
            raise PreconditionError('Character is moved by {}; not '
                                    'Gamma-fixed.'.format(
                                        surjection.tower.gamma[gamma].label))


def _value_action(surjection, chi, enlarge=False):
    if not isinstance(chi.values[0], CyclotomicNumber):
        raise TowerMismatchError('Characters must take cyclotomic values.')
    action = surjection.tower.value_action(chi.field.n)
    if enlarge and chi.degree == 1:
        return _fixing_action(surjection, chi, action)
    return action


def _fixing_action(surjection, chi, action):
    '''
    Value model of ``L(χ)``: residues in ``action.fixing`` that fix ``χ``,
    and lifts of ``Γ`` chosen so that each twist fixes ``χ`` exactly.

    ``action`` is returned unchanged when ``χ`` is already ``L``-valued, or
    when some ``γ`` moves the ``L``-orbit of ``χ`` (the strict check then
    reports it).
    '''
    field = action.field
    lifted = [field.lift(v) for v in chi.values]
    fixing = frozenset(j for j in action.fixing
                       if all(field.galois(j, v) == v for v in lifted))
    if fixing == action.fixing:
        return action
    lifts = []
    for gamma, lift in enumerate(action.lifts):
        candidates = sorted(unit_residue(lift * j, action.conductor)
                            for j in action.fixing)
        for k in candidates:
            trial = list(action.lifts)
            trial[gamma] = k
            twisted = ValueAction(action.conductor, fixing, trial)
            if list(galois_twist(surjection, twisted, chi, gamma)) == lifted:
                lifts.append(k)
                break
        else:
            return action
    logger.debug('Enlarged value model: fixing %s, lifts %s', sorted(fixing),
                 lifts)
    return ValueAction(action.conductor, fixing, lifts, action.embed,
                       enlarged=True)


def transgression(surjection, chi, section=None, enlarge=False):
    '''
    ``f_χ(γ1, γ2) = (γ1γ2)(χ(h(γ1, γ2)))^{-1}`` from the section cocycle.

    Parameters
    ----------
    surjection : slr.groups.GaloisSurjection
    chi : slr.characters.ClassFunction
        Linear, ``L``-valued, ``Γ``-fixed character of ``H``.
    section : slr.groups.CosetSection, optional
        Defaults to ``surjection.section``.
    enlarge : bool, optional
        Accept ``chi`` whose values generate ``L(χ) ⊋ L`` when ``Γ`` fixes
        its ``L``-orbit; the cocycle then takes values in ``L(χ)``.

    Raises
    ------
    PreconditionError
        If ``chi`` is not linear and ``Γ``-fixed.
    InternalError
        If the result is not a normalized 2-cocycle.
    '''
    section = surjection.section if section is None else section
    action = _value_action(surjection, chi, enlarge=enlarge)
    check_linear_fixed(surjection, chi, action)
    tower = surjection.tower
    field = action.field
    n = tower.degree
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            h = surjection.kernel_element(section.h[a][b])
            value = field.galois(action.lifts[tower.compose(a, b)],
                                 field.lift(chi(h)))
            row.append(value.inverse())
        table.append(row)
    cocycle = TwoCocycle(tower, action, table)
    failure = cocycle.check()
    if failure is not None:
        raise InternalError('Transgression fails the cocycle identity at {}.'
                            .format(failure))
    return cocycle


CyclicClass = namedtuple('CyclicClass', ['representative', 'generator',
                                         'trivial', 'reason', 'certificate'])


def cyclic_class(cocycle, chi_order=None, height=None):
    '''
    Class of ``f`` in ``K^×/N(L^×)`` for cyclic ``Γ = ⟨σ⟩`` of order ``n``:
    the representative ``∏_{i=0}^{n-1} f(σ^i, σ)``.

    Triviality is decided when the representative is 1, when ``chi_order``
    is coprime to ``n``, for finite towers (norms are surjective) and for
    quadratic towers over ``Q`` (Hilbert symbols); elsewhere ``trivial`` is
    ``None``.

    Raises
    ------
    UnsupportedError
        If ``Γ`` is not cyclic.
    '''
    tower = cocycle.tower
    if not tower.is_cyclic:
        raise UnsupportedError('Cyclic class needs a cyclic Gamma.')
    sigma = tower.generator()
    n = tower.degree
    representative = cocycle.field.one
    for i in range(n):
        representative = representative * cocycle(tower.power(sigma, i), sigma)
    for j in cocycle.action.base_fixing:
        if cocycle.field.galois(j, representative) != representative:
            raise InternalError('Cyclic class representative {} is not in K.'
                                .format(representative))

    def result(trivial, reason, certificate=None):
        logger.info('Cyclic class of %s: %s (%s)', representative, trivial,
                    reason)
        return CyclicClass(representative, sigma, trivial, reason, certificate)

    if representative == 1:
        return result(True, 'representative is 1')
    if chi_order is not None and math.gcd(chi_order, n) == 1:
        return result(True, 'character order {} coprime to [L:K] = {}'
                      .format(chi_order, n))
    if isinstance(tower, FiniteTower):
        return result(True, 'norms of finite fields are surjective')
    d = None if cocycle.action.enlarged else tower.as_quadratic()
    if d is not None:
        target = representative.rational()
        if target is None:
            raise InternalError('Representative {} is not rational.'
                                .format(representative))
        kwargs = {} if height is None else {'height': height}
        report = norm_equation(d, target, **kwargs)
        if report.solvable:
            return result(True, 'norm from Q(sqrt({}))'.format(d),
                          report.certificate)
        return result(False, 'not a local norm at {}'.format(
            report.obstruction), report.symbols)
    source = 'L(chi)' if cocycle.action.enlarged else tower.L
    logger.warning('Cannot decide whether %s is a norm from %s.',
                   representative, source)
    return result(None, 'no norm decision procedure for {}'.format(source))


def _is_norm(tower, value, height=None):
    '''Whether ``value`` is a norm from ``L``; ``None`` if undecided.'''
    if value == 1 or isinstance(tower, FiniteTower):
        return True
    d = tower.as_quadratic()
    target = value.rational()
    if d is None or target is None:
        return None
    kwargs = {} if height is None else {'height': height}
    return norm_equation(d, target, **kwargs).solvable


def homomorphism_check(surjection, characters, height=None):
    '''
    Check that ``χ ↦ [T(χ)]`` multiplies modulo norms on a list of linear
    ``Γ``-fixed characters closed under products.

    For each pair ``χ, ψ`` the quotient of cyclic class representatives
    ``rep(χψ) / (rep(χ)·rep(ψ))`` must be a norm, and the triviality
    verdicts of :func:`cyclic_class` must be compatible: trivial times
    trivial is trivial, trivial times non-trivial is not, and for
    ``[L:K] = 2`` two non-trivial classes multiply to the trivial one.

    Returns
    -------
    bool or None
        ``None`` when some norm question has no decision procedure.

    Raises
    ------
    PreconditionError
        If the list is not closed under products.
    '''
    characters = list(characters)
    classes = [cyclic_class(transgression(surjection, chi),
                            chi_order=linear_order(chi), height=height)
               for chi in characters]
    tower = surjection.tower
    n = tower.degree
    decided = True
    for i, chi in enumerate(characters):
        for j, psi in enumerate(characters):
            product = chi * psi
            try:
                k = next(k for k, phi in enumerate(characters)
                         if phi == product)
            except StopIteration:
                raise PreconditionError('Characters are not closed under '
                                        'products.')
            quotient = classes[k].representative / \
                (classes[i].representative * classes[j].representative)
            is_norm = _is_norm(tower, quotient, height)
            if is_norm is False:
                logger.info('Classes of characters %d, %d and %d differ by '
                            '%s, not a norm.', i, j, k, quotient)
                return False
            flags = classes[i].trivial, classes[j].trivial, classes[k].trivial
            if is_norm is None or None in flags:
                decided = False
                continue
            a, b, c = flags
            if a and b:
                expected = True
            elif a or b:
                expected = False
            elif n == 2:
                expected = True
            else:
                continue
            if c != expected:
                logger.info('Classes of characters %d and %d are %s and %s '
                            'but their product %d is %s.', i, j, a, b, k, c)
                return False
    if not decided:
        logger.warning('Some classes could not be decided; homomorphism '
                       'check is inconclusive.')
        return None
    return True


def transgression_class(surjection, chi, height=None):
    ''':func:`cyclic_class` of :func:`transgression` for ``chi``.'''
    return cyclic_class(transgression(surjection, chi),
                        chi_order=linear_order(chi), height=height)
