# coding: utf-8
'''
Classification of irreducible semilinear representations.

Rows of the splitting-field table of ``H`` first fuse into ``L``-irreducibles
(orbits of the Galois group of ``Q(ζ_c)/L``), then into ``Γ``-orbits under the
twisted action ``(γ*χ)(h) = γ(χ(g_γ^{-1}·h·g_γ))``.  Each ``Γ``-orbit is one
irreducible semilinear representation.
'''
from collections import OrderedDict
import logging
import math

from sympy import primefactors

from .characters import (char_table_splitting, galois_twist, inner_product,
                         restrict_character)
from .errors import (InternalError, PreconditionError, SpecError,
                     TowerMismatchError, UnsupportedError)
from .fields import CyclotomicNumber, FiniteTower
from .groups import TwoSidedClassAction
from .schur import classical_report, combine
from .semilinear import DEFAULT_BUDGET, LinearRep

logger = logging.getLogger(__name__)


def _orbits(size, permutations):
    '''Orbits of ``range(size)`` under ``permutations``, by least element.'''
    seen = set()
    orbits = []
    for i in range(size):
        if i in seen:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            j = frontier.pop()
            for permutation in permutations:
                k = permutation[j]
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


class GaloisActionOnIrr(object):
    '''
    Action of ``Γ`` on the rows of a splitting-field table of ``H``.

    Attributes
    ----------
    action : slr.fields.ValueAction
        Value model the rows are compared in.
    field_permutations : OrderedDict
        Residue ``j`` fixing ``L`` → row permutation induced by ``σ_j``.
    permutations : tuple
        Row permutation of the twist by each element of ``Γ``.
    field_orbits : list
        Row orbits under ``field_permutations`` (the ``L``-irreducibles).
    orbits : list
        ``Γ``-orbits, each a tuple of ``field_orbits`` entries.

    Raises
    ------
    InternalError
        If a twisted row is not a row, or the twists do not compose
        modulo the ``L``-fusion.
    '''
    def __init__(self, surjection, table):
        if table.classes is not surjection.kernel.conjugacy_classes():
            raise TowerMismatchError('Table is not a table of ker(sigma).')
        self.surjection = surjection
        self.table = table
        tower = surjection.tower
        self.action = tower.value_action(table.conductor)
        field = self.action.field
        lifted = [tuple(field.lift(v) for v in row) for row in table]
        index = {values: i for i, values in enumerate(lifted)}

        def locate(values, label):
            i = index.get(tuple(values))
            if i is None:
                raise InternalError('{} does not map characters to '
                                    'characters.'.format(label))
            return i

        self.field_permutations = OrderedDict(
            (j, tuple(locate([field.galois(j, v) for v in values],
                             'sigma_{}'.format(j)) for values in lifted))
            for j in sorted(self.action.fixing))
        self.permutations = tuple(
            tuple(locate(galois_twist(surjection, self.action, row, a),
                         tower.gamma[a].label) for row in table)
            for a in range(tower.degree))
        self.field_orbits = _orbits(len(table),
                                    list(self.field_permutations.values()))
        self._field_orbit_of = {}
        for k, orbit in enumerate(self.field_orbits):
            for i in orbit:
                self._field_orbit_of[i] = k
        self._descents = {}
        self._check_composition()
        joined = _orbits(len(table), list(self.field_permutations.values()) +
                         list(self.permutations))
        self.orbits = [tuple(orbit for orbit in self.field_orbits
                             if orbit[0] in rows) for rows in joined]
        logger.debug('L-irreducibles %s fuse into Gamma-orbits %s',
                     self.field_orbits, self.orbits)

    def _check_composition(self):
        tower = self.surjection.tower
        for a in range(tower.degree):
            for b in range(tower.degree):
                ab = self.permutations[tower.compose(a, b)]
                for i in range(len(self.table)):
                    left = self.permutations[a][self.permutations[b][i]]
                    if self._field_orbit_of[left] != \
                            self._field_orbit_of[ab[i]]:
                        raise InternalError('Twists by {} and {} do not '
                                            'compose on row {}.'
                                            .format(tower.gamma[a].label,
                                                    tower.gamma[b].label, i))

    def field_orbit_of(self, row):
        return self.field_orbits[self._field_orbit_of[row]]

    def stabilizer_order(self, k):
        '''``|Γ_W|`` for the ``L``-irreducibles ``W`` of orbit ``k``.'''
        orbit = self.orbits[k]
        first = orbit[0][0]
        stabilizer = [a for a, permutation in enumerate(self.permutations)
                      if self._field_orbit_of[permutation[first]] ==
                      self._field_orbit_of[first]]
        if len(stabilizer) * len(orbit) != self.surjection.tower.degree:
            raise InternalError('Orbit-stabilizer fails for orbit {}.'
                                .format(k))
        return len(stabilizer)

    def descent_report(self, k):
        '''
        Classical index over ``L`` of the rows of orbit ``k``, as a
        :class:`slr.schur.SchurIndexReport` (bounded when no rule fixes it).
        '''
        if k not in self._descents:
            row = self.orbits[k][0][0]
            self._descents[k] = classical_report(self.surjection,
                                                 self.table[row])
        return self._descents[k]

    def descent(self, k):
        '''Classical index over ``L`` of orbit ``k``, or ``None``.'''
        return self.descent_report(k).value

    def rows(self, k):
        return tuple(sorted(i for orbit in self.orbits[k] for i in orbit))

    def row_sum(self, k):
        '''``Σ χ`` over the rows of orbit ``k``.'''
        rows = [self.table[i] for i in self.rows(k)]
        total = rows[0]
        for row in rows[1:]:
            total = total + row
        return total

    def orbit_sum(self, k):
        '''``s·Σ χ`` for descent ``s``; ``None`` while ``s`` is bounded.'''
        descent = self.descent(k)
        return None if descent is None else self.row_sum(k) * descent

    def orbit_of(self, row):
        return next(k for k, orbit in enumerate(self.orbits)
                    if any(row in o for o in orbit))


def galois_orbits(surjection, table=None):
    '''
    :class:`GaloisActionOnIrr` for ``table`` (the splitting-field table of
    ``H`` when omitted).
    '''
    if table is None:
        table = char_table_splitting(surjection.kernel)
    return GaloisActionOnIrr(surjection, table)


class SemilinearIrrDescriptor(object):
    '''
    One irreducible semilinear representation ``V``.

    Attributes
    ----------
    orbit : tuple
        ``L``-irreducibles of ``V|_H`` (tuples of table rows).
    stabilizer_order : int
        ``|Γ_W|``.
    descent : slr.schur.SchurIndexReport
        Classical index ``s`` of the rows over ``L``.
    schur : slr.schur.SchurIndexReport
    row_sum : slr.characters.ClassFunction
        ``Σ χ`` over all rows of the orbit.

    Quantities that depend on a bounded ``m`` or ``s`` are ``None``.
    '''
    def __init__(self, index, orbit, stabilizer_order, descent, schur,
                 row_sum, gcd_bound=None):
        self.index = index
        self.orbit = orbit
        self.stabilizer_order = stabilizer_order
        self.descent = descent
        self.schur = schur
        self.row_sum = row_sum
        self.gcd_bound = gcd_bound

    @property
    def rows(self):
        return tuple(sorted(i for o in self.orbit for i in o))

    @property
    def m(self):
        return self.schur.value

    @property
    def s(self):
        return self.descent.value

    @property
    def orbit_sum(self):
        '''``χ_O = s·Σ χ``.'''
        return None if self.s is None else self.row_sum * self.s

    @property
    def character(self):
        '''``ψ = m·χ_O``.'''
        if self.m is None or self.s is None:
            return None
        return self.row_sum * (self.m * self.s)

    @property
    def dimension(self):
        '''``dim_L V``.'''
        if self.m is None or self.s is None:
            return None
        return self.m * self.s * self.row_sum.degree

    @property
    def self_product(self):
        '''``⟨χ_W, χ_W⟩ = s²·(rows per L-irreducible)``.'''
        if self.s is None:
            return None
        return self.s ** 2 * len(self.orbit[0])

    @property
    def endo_dimension(self):
        '''``dim_K End(V) = m²·|O|·⟨χ_W, χ_W⟩``.'''
        if self.m is None or self.s is None:
            return None
        return self.m ** 2 * len(self.orbit) * self.self_product

    def to_dict(self):
        report = OrderedDict([('index', self.index),
                              ('orbit', [list(o) for o in self.orbit]),
                              ('stabilizer_order', self.stabilizer_order),
                              ('descent', self.s),
                              ('schur_index', self.schur.to_dict())])
        if self.s is None:
            report['descent_divisors'] = self.descent.divisors
        if self.gcd_bound is not None:
            report['gcd_bound'] = self.gcd_bound
        character = self.character
        report['character'] = (None if character is None else
                               [str(v) for v in character])
        report['row_sum'] = [str(v) for v in self.row_sum]
        report['dimension'] = self.dimension
        report['endo_dimension'] = self.endo_dimension
        return report

    def __repr__(self):
        return '<SemilinearIrrDescriptor {} rows={} m={}>'.format(
            self.index, self.rows, self.m if self.m is not None else
            self.schur.divisors)


def _primitive_element(field):
    order = field.order - 1
    for x in field.elements():
        if x.is_zero:
            continue
        if all(x ** (order // p) != 1 for p in primefactors(order)):
            return x
    raise InternalError('{} has no primitive element.'.format(field))


def finite_orbit_rep(galois, k):
    '''
    Orbit sum of orbit ``k`` as a diagonal :class:`LinearRep` of ``H`` over a
    finite ``L``: ``ζ_c ↦ g^{(q-1)/c}`` for a primitive ``g``.

    Returns ``None`` unless every row of the orbit is linear with values in
    ``L``.
    '''
    surjection = galois.surjection
    L = surjection.tower.L
    orbit = galois.orbits[k]
    if any(len(o) != 1 for o in orbit):
        return None
    rows = [galois.table[o[0]] for o in orbit]
    if any(row.degree != 1 for row in rows):
        return None
    c = galois.action.conductor
    if (L.order - 1) % c:
        return None
    root = _primitive_element(L) ** ((L.order - 1) // c)
    field = galois.action.field
    powers = [field.zeta(j) for j in range(c)]

    def reduce(value):
        return root ** powers.index(field.lift(value))

    H = surjection.kernel
    matrices = []
    for h in range(H.order):
        diagonal = [reduce(row(h)) for row in rows]
        matrices.append([[diagonal[i] if i == j else L.zero
                          for j in range(len(rows))]
                         for i in range(len(rows))])
    return LinearRep(H, L, matrices)


def _check_invertible(surjection):
    H = surjection.kernel
    if not surjection.group_invertible(H.order):
        raise PreconditionError('|H| = {} is not invertible in {}.'
                                .format(H.order, surjection.tower.L))


def classify_irreducibles(surjection, table=None, rational_table=None,
                          budget=DEFAULT_BUDGET, height=None, witnesses=False):
    '''
    One :class:`SemilinearIrrDescriptor` per ``Γ``-orbit, ordered by least
    table row.

    Parameters
    ----------
    table : slr.characters.CharacterTable, optional
        Splitting-field table of ``H`` (computed when omitted).
    rational_table : slr.characters.CharacterTable, optional
        Table of ``G`` over ``K = Q``; adds the ``hcf`` bound per orbit.
    witnesses : bool, optional
        Over finite ``L``, search explicit extensions of the orbit sums.

    Raises
    ------
    PreconditionError
        If ``|H|`` is not invertible in ``L``.
    '''
    _check_invertible(surjection)
    galois = galois_orbits(surjection, table)
    bounds = {}
    if rational_table is not None:
        bounds = schur_bound_gcd(surjection, rational_table, galois)
    finite = isinstance(surjection.tower, FiniteTower)
    descriptors = []
    for k, orbit in enumerate(galois.orbits):
        chi = galois.table[orbit[0][0]]
        stabilizer = galois.stabilizer_order(k)
        descent = galois.descent_report(k)
        witness = finite_orbit_rep(galois, k) if finite and witnesses \
            else None
        report = combine(surjection, chi, stabilizer,
                         gcd_bound=bounds.get(k), descent=descent.divisors,
                         witness=witness, budget=budget, height=height)
        descriptors.append(SemilinearIrrDescriptor(
            k, orbit, stabilizer, descent, report, galois.row_sum(k),
            gcd_bound=bounds.get(k)))
    logger.info('%d irreducible semilinear representations',
                len(descriptors))
    return descriptors


def count_irreducibles(surjection, n):
    '''
    ``|Cl(H)/Γ|`` under the diagonal two-sided class action for
    ``L = K(μ_n)``.

    Raises
    ------
    PreconditionError
        If ``exp(H)`` does not divide ``n``, ``L ≠ K(μ_n)``, or ``|G|`` is
        not invertible in ``L``.
    '''
    if not surjection.group_invertible():
        raise PreconditionError('|G| is not invertible in {}.'
                                .format(surjection.tower.L))
    action = TwoSidedClassAction(surjection, n)
    if not action.is_action():
        raise InternalError('Two-sided class action is not an action.')
    orbits = action.diagonal_orbits()
    logger.debug('Diagonal class orbits: %s', orbits)
    return len(orbits)


def _orbit_products(surjection, chi, galois):
    '''
    ``⟨chi, χ⟩`` per orbit, checked equal across the rows of each orbit and
    checked to rebuild ``chi`` as ``Σ ⟨chi, χ⟩·Σ χ``.
    '''
    if chi.classes is not galois.table.classes:
        raise TowerMismatchError('Class function is not on ker(sigma).')
    if not isinstance(chi.values[0], CyclotomicNumber):
        embed = galois.action.embed
        if embed is None or chi.field != surjection.tower.L:
            raise UnsupportedError('Decomposition of {}-valued class '
                                   'functions is not supported.'
                                   .format(chi.field))
        chi = chi.map(embed)
    products = OrderedDict()
    total = None
    for k in range(len(galois.orbits)):
        found = set()
        for row in galois.rows(k):
            value = inner_product(chi, galois.table[row]).rational()
            if value is None or value.denominator != 1:
                raise PreconditionError('Class function has non-integral '
                                        'multiplicity {} on row {}.'
                                        .format(value, row))
            found.add(int(value.numerator))
        if len(found) != 1:
            raise PreconditionError('Class function is not Gamma-fixed: '
                                    'orbit {} has multiplicities {}.'
                                    .format(k, sorted(found)))
        product = found.pop()
        if product:
            products[k] = product
            term = galois.row_sum(k) * product
            total = term if total is None else total + term
    if total is None or total != chi:
        raise PreconditionError('Class function is not a combination of '
                                'orbit sums.')
    return products


def decompose_character(surjection, chi, galois=None):
    '''
    Write a ``Γ``-fixed class function on ``H`` as ``Σ a_O·χ_O`` over the
    orbit sums ``χ_O = s·Σ χ``.

    Parameters
    ----------
    chi : slr.characters.ClassFunction
        Cyclotomic values, or values in a characteristic-zero ``L`` (embedded
        through the tower's value model).
    galois : GaloisActionOnIrr, optional

    Returns
    -------
    OrderedDict
        Orbit index → integer ``a_O`` (zero coefficients omitted).

    Raises
    ------
    UnsupportedError
        For values in a finite field, or when an orbit occurring in ``chi``
        has an undetermined descent.
    PreconditionError
        If ``chi`` is not an integer combination of orbit sums.
    '''
    galois = galois_orbits(surjection) if galois is None else galois
    coefficients = OrderedDict()
    for k, product in _orbit_products(surjection, chi, galois).items():
        descent = galois.descent(k)
        if descent is None:
            raise UnsupportedError('Descent of orbit {} is only bounded by '
                                   '{}.'.format(k, galois.descent_report(k)
                                                .divisors))
        a, remainder = divmod(product, descent)
        if remainder:
            raise PreconditionError('Multiplicity {} on orbit {} is not a '
                                    'multiple of the descent {}.'
                                    .format(product, k, descent))
        coefficients[k] = a
    return coefficients


def schur_bound_gcd(surjection, rational_table, galois=None):
    '''
    ``m_K^L(O) | hcf{a_{U,O}}`` from ``ψ_U|_H = Σ a_{U,O}·χ_O`` over the
    rows ``ψ_U`` of a table of ``G`` over ``K = Q``.

    The bound is a divisor of ``m``'s admissible values, not ``m`` itself.
    Where the descent ``s`` of an orbit is undetermined the bound is taken
    on ``s·a_{U,O}`` instead, which ``m`` still divides.

    Returns
    -------
    OrderedDict
        Orbit index → bound.

    Raises
    ------
    PreconditionError
        Unless ``K = Q``.
    SpecError
        If a restriction is not a combination of orbit sums (table and
        overgroup do not match).
    '''
    tower = surjection.tower
    if not tower.rational_base or tower.archimedean:
        raise PreconditionError('The hcf bound needs K = Q.')
    if rational_table.group is not surjection.group:
        raise TowerMismatchError('Rational table is not a table of G.')
    galois = galois_orbits(surjection) if galois is None else galois
    H = surjection.kernel
    bounds = OrderedDict((k, 0) for k in range(len(galois.orbits)))
    for i, psi in enumerate(rational_table):
        restricted = restrict_character(psi, H)
        try:
            products = _orbit_products(surjection, restricted, galois)
        except PreconditionError as exception:
            raise SpecError('Restriction of row {} does not decompose: {}'
                            .format(i, exception), 'rows.{}'.format(i))
        for k, product in products.items():
            descent = galois.descent(k)
            if descent is not None:
                if product % descent:
                    raise SpecError('Restriction of row {} meets orbit {} '
                                    '{} times, not a multiple of the '
                                    'descent {}.'.format(i, k, product,
                                                         descent),
                                    'rows.{}'.format(i))
                product //= descent
            bounds[k] = math.gcd(bounds[k], product)
    if not all(bounds.values()):
        raise InternalError('Some orbit is missing from every restriction.')
    logger.debug('hcf bounds per orbit: %s', dict(bounds))
    return bounds


__all__ = ['GaloisActionOnIrr', 'SemilinearIrrDescriptor',
           'classify_irreducibles', 'count_irreducibles',
           'decompose_character', 'finite_orbit_rep', 'galois_orbits',
           'schur_bound_gcd']
