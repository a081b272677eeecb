# coding: utf-8
'''
Class functions and exact character tables.

Splitting-field tables of ``H`` are computed with Dixon's method: the class
multiplication matrices are simultaneously diagonalized over ``GF(p)`` for a
prime ``p ≡ 1 (mod e)``, ``e = exp(H)``, and each character value is lifted
to ``Q(ζ_e)`` from its eigenvalue multiplicities.  Rational tables of ``G``
over ``K`` are ingested, not computed.
'''
import logging
import math
import re

from sympy import ZZ, isprime
from sympy.ntheory import primitive_root
from sympy.polys.domains import GF
from sympy.polys.galoistools import gf_eval

from .errors import (InternalError, PreconditionError, SpecError,
                     TowerMismatchError)
from .fields import CyclotomicField, CyclotomicNumber, _lcm
from .linalg import prime_matrix, prime_nullspace, prime_rref, trace

logger = logging.getLogger(__name__)


class ClassFunction(object):
    '''
    Function on the conjugacy classes of a group.

    Parameters
    ----------
    classes : slr.groups.ConjugacyData
    values : list
        One field element per class (cyclotomic for splitting-field
        characters, elements of ``L`` for traces of representations).
    '''
    def __init__(self, classes, values):
        values = tuple(values)
        if len(values) != len(classes):
            raise SpecError('Expected {} class values, got {}.'
                            .format(len(classes), len(values)))
        self.classes = classes
        self.values = values

    @property
    def group(self):
        return self.classes.group

    @property
    def field(self):
        return self.values[0].field

    def __call__(self, g):
        return self.values[self.classes.class_of[g]]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, t):
        return self.values[t]

    def _check(self, other):
        if other.classes is not self.classes:
            raise TowerMismatchError('Class functions live on different '
                                     'groups.')

    def __add__(self, other):
        self._check(other)
        a, b = _common(self, other)
        return ClassFunction(self.classes, (x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        self._check(other)
        a, b = _common(self, other)
        return ClassFunction(self.classes, (x - y for x, y in zip(a, b)))

    def __mul__(self, c):
        if isinstance(c, ClassFunction):
            self._check(c)
            a, b = _common(self, c)
            return ClassFunction(self.classes, (x * y for x, y in zip(a, b)))
        return ClassFunction(self.classes, (c * x for x in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction) or \
                other.classes is not self.classes:
            return False
        a, b = _common(self, other)
        return a == b

    def __hash__(self):
        return hash(self.values)

    def map(self, function):
        return ClassFunction(self.classes, (function(v) for v in self.values))

    @property
    def degree(self):
        value = self.values[0]
        rational = value.rational()
        if rational is None or rational.denominator != 1:
            return None
        return int(rational.numerator)

    def lift(self, conductor):
        '''Values lifted into ``Q(ζ_conductor)`` (cyclotomic values only).'''
        field = CyclotomicField(conductor)
        return self.map(field.lift)

    def __repr__(self):
        return '<ClassFunction ({})>'.format(', '.join(str(v) for v in
                                                       self.values))


def _common(a, b):
    '''Values of ``a`` and ``b`` in a common field.'''
    fa, fb = a.field, b.field
    if fa == fb:
        return a.values, b.values
    if isinstance(a.values[0], CyclotomicNumber) and \
            isinstance(b.values[0], CyclotomicNumber):
        target = CyclotomicField(_lcm(fa.n, fb.n))
        return (tuple(target.lift(v) for v in a.values),
                tuple(target.lift(v) for v in b.values))
    raise TowerMismatchError('Class functions take values in {} and {}.'
                             .format(fa, fb))


def inner_product(a, b):
    '''
    ``⟨a, b⟩ = (1/|H|) Σ_h a(h)·b(h^{-1})``.

    Raises
    ------
    PreconditionError
        If the characteristic of the coefficient field divides ``|H|``.
    '''
    a._check(b)
    classes = a.classes
    order = classes.group.order
    values_a, values_b = _common(a, b)
    p = values_a[0].field.characteristic
    if p and order % p == 0:
        raise PreconditionError('|H| = {} is not invertible in characteristic '
                                '{}.'.format(order, p))
    total = values_a[0].field.zero
    for t, size in enumerate(classes.sizes):
        total = total + size * values_a[t] * values_b[classes.inverse_class[t]]
    return total / order


def frobenius_schur(chi):
    '''Classical indicator ``(1/|H|) Σ_h χ(h²)``.'''
    group = chi.group
    total = chi.field.zero
    for h in range(group.order):
        total = total + chi(group.multiply(h, h))
    return total / group.order


def restrict_character(chi, subgroup):
    '''
    Restrict a class function on ``G`` to the subgroup ``H`` (a
    :class:`slr.groups.Group` with ``parent_index``).
    '''
    classes = subgroup.conjugacy_classes()
    return ClassFunction(classes, (chi(subgroup.parent_index[r])
                                   for r in classes.representatives))


def permutation_character(group, subgroup):
    '''
    ``1_U^G`` on the cosets of ``U`` (an iterable of element indices).

    ``1_U^G(x) = |{t : t^{-1}·x·t ∈ U}| / |U|``; the values are rational, so
    the character belongs to a ``Q``-representation.
    '''
    members = frozenset(subgroup)
    classes = group.conjugacy_classes()
    field = CyclotomicField(1)
    values = []
    for r in classes.representatives:
        fixed, remainder = divmod(sum(1 for t in range(group.order)
                                      if group.conjugate(r, t) in members),
                                  len(members))
        if remainder:
            raise PreconditionError('Elements do not form a subgroup.')
        values.append(field(fixed))
    return ClassFunction(classes, values)


def cyclic_subgroups(group):
    '''Distinct cyclic subgroups, as sorted tuples of element indices.'''
    found = set()
    for a in range(group.order):
        powers = {0}
        x = a
        while x != 0:
            powers.add(x)
            x = group.multiply(x, a)
        found.add(tuple(sorted(powers)))
    return sorted(found, key=lambda subgroup: (len(subgroup), subgroup))


class CharacterTable(object):
    '''
    Irreducible characters as :class:`ClassFunction` rows.

    Attributes
    ----------
    conductor : int
        Values lie in ``Q(ζ_conductor)``.
    '''
    def __init__(self, classes, rows, conductor=1):
        self.classes = classes
        self.rows = tuple(rows)
        self.conductor = conductor

    @property
    def group(self):
        return self.classes.group

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    @property
    def degrees(self):
        return [row.degree for row in self.rows]

    def index(self, values):
        '''Row index whose values equal ``values`` (``None`` if absent).'''
        values = tuple(values)
        for i, row in enumerate(self.rows):
            if row.values == values:
                return i
        return None

    def verify(self):
        '''
        Check both orthogonality relations exactly.

        Raises
        ------
        InternalError
            On any failure.
        '''
        order = self.group.order
        classes = self.classes
        for i, chi in enumerate(self.rows):
            for j in range(i, len(self.rows)):
                value = inner_product(chi, self.rows[j])
                if value != (1 if i == j else 0):
                    raise InternalError('Row orthogonality fails for rows '
                                        '{} and {}: {}'.format(i, j, value))
        for s in range(len(classes)):
            for t in range(s, len(classes)):
                total = self.rows[0].field.zero
                for chi in self.rows:
                    total = total + chi[s] * chi[classes.inverse_class[t]]
                expected = order // classes.sizes[s] if s == t else 0
                if total != expected:
                    raise InternalError('Column orthogonality fails for '
                                        'classes {} and {}.'.format(s, t))
        degrees = self.degrees
        if sum(d * d for d in degrees) != order or \
                any(order % d for d in degrees):
            raise InternalError('Degrees {} are inconsistent with |H| = {}.'
                                .format(degrees, order))
        return True


def dixon_prime(order, exponent):
    '''Smallest prime ``p ≡ 1 (mod exponent)`` with ``p > 2·sqrt(order)``.'''
    p = 1
    while True:
        p += exponent
        if p * p > 4 * order and isprime(p):
            return p


def class_matrices(classes):
    '''
    ``a[j][s][t] = #{x ∈ C_j : x^{-1}·z_t ∈ C_s}`` for representatives
    ``z_t``; the central characters ``ω`` satisfy
    ``ω_j·ω_s = Σ_t a[j][s][t]·ω_t``.
    '''
    group = classes.group
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for t, z in enumerate(classes.representatives):
        for x in range(group.order):
            s = classes.class_of[group.multiply(group.inverse(x), z)]
            a[classes.class_of[x]][s][t] += 1
    return a


def _split(basis, matrix, p, domain):
    '''Split an invariant subspace into eigenspaces of ``matrix``.'''
    r = len(matrix)
    rows, pivots = prime_rref([[domain(v) for v in b] for b in basis], r,
                              domain)
    rows = [[int(domain.to_int(v)) % p for v in row] for row in rows]
    images = [[sum(matrix[s][t] * row[t] for t in range(r)) % p
               for s in range(r)] for row in rows]
    d = len(rows)
    X = [[images[i][pivots[k]] for i in range(d)] for k in range(d)]
    charpoly = prime_matrix([[domain(v) for v in row] for row in X], d,
                            domain).charpoly()
    coefficients = [int(domain.to_int(c)) % p for c in charpoly]
    pieces = []
    for eigenvalue in range(p):
        if gf_eval(coefficients, eigenvalue, p, ZZ):
            continue
        shifted = [[domain((X[k][i] - (eigenvalue if k == i else 0)) % p)
                    for i in range(d)] for k in range(d)]
        kernel = prime_nullspace(shifted, d, domain)
        pieces.append([[sum(int(domain.to_int(c[k])) * rows[k][t]
                            for k in range(d)) % p for t in range(r)]
                       for c in kernel])
    if sum(len(piece) for piece in pieces) != d:
        raise InternalError('Class matrix is not diagonalizable mod {}.'
                            .format(p))
    return pieces


def char_table_splitting(group):
    '''
    Irreducible characters of ``group`` over ``Q(ζ_e)``, ``e = exp(group)``.

    Parameters
    ----------
    group : slr.groups.Group
        Order at most 128.

    Returns
    -------
    CharacterTable
        Trivial row first, then rows sorted by degree and by coefficient
        tuples; verified against both orthogonality relations.  Row 0 is
        always the trivial character even where a coefficient tuple sorts
        below it (the sign row of ``S3`` has ``(1, -1, 1)``).

    Raises
    ------
    InternalError
        If the lifted table fails verification.
    '''
    classes = group.conjugacy_classes()
    order = group.order
    e = group.exponent
    r = len(classes)
    p = dixon_prime(order, e)
    domain = GF(p, symmetric=False)
    logger.debug('Dixon: |H|=%d, %d classes, exponent %d, prime %d', order, r,
                 e, p)
    a = class_matrices(classes)
    spaces = [[[1 if i == k else 0 for i in range(r)] for k in range(r)]]
    for j in range(1, r):
        if all(len(space) == 1 for space in spaces):
            break
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
            else:
                refined.extend(_split(space, a[j], p, domain))
        spaces = refined
    if len(spaces) != r or any(len(space) != 1 for space in spaces):
        raise InternalError('Class matrices do not split into {} '
                            'eigenvectors.'.format(r))

    z = pow(primitive_root(p), (p - 1) // e, p)
    e_inverse = pow(e, -1, p)
    field = CyclotomicField(e)
    rows = []
    for (w, ) in spaces:
        if w[0] == 0:
            raise InternalError('Central character vanishes at identity.')
        scale = pow(w[0], -1, p)
        w = [v * scale % p for v in w]
        total = sum(w[t] * w[classes.inverse_class[t]] *
                    pow(classes.sizes[t], -1, p) for t in range(r)) % p
        target = order * pow(total, -1, p) % p
        degree = next((d for d in range(1, math.isqrt(order) + 1)
                       if d * d % p == target), None)
        if degree is None:
            raise InternalError('No degree lifts {} mod {}.'.format(target, p))
        modular = [w[t] * degree * pow(classes.sizes[t], -1, p) % p
                   for t in range(r)]
        values = []
        for t in range(r):
            multiplicities = {}
            for k in range(e):
                m = sum(modular[classes.power_class(t, l)] *
                        pow(z, (-k * l) % e, p) for l in range(e))
                m = m * e_inverse % p
                if m > degree:
                    raise InternalError('Eigenvalue multiplicity {} exceeds '
                                        'degree {}.'.format(m, degree))
                if m:
                    multiplicities[k] = m
            values.append(field.from_exponents(multiplicities))
        rows.append(ClassFunction(classes, values))

    def sort_key(row):
        trivial = all(v == 1 for v in row.values)
        return (not trivial, row.degree,
                tuple(tuple(v.coeffs) for v in row.values))

    table = CharacterTable(classes, sorted(rows, key=sort_key), conductor=e)
    table.verify()
    return table


def _element_index(group, representative, position):
    if isinstance(representative, int):
        if not 0 <= representative < group.order:
            raise SpecError('No element {}.'.format(representative),
                            'classes.{}'.format(position))
        return representative
    if group.elements is None:
        raise SpecError('Table-defined groups need element indices.',
                        'classes.{}'.format(position))
    images = [int(v) - 1 for v in representative]
    degree = group.elements[0].size
    images += list(range(len(images), degree))
    for i, element in enumerate(group.elements):
        if list(element.array_form) == images:
            return i
    raise SpecError('{} is not an element of the group.'
                    .format(representative), 'classes.{}'.format(position))


def table_field(strings):
    '''Smallest cyclotomic field naming every ``zetaN`` in ``strings``.'''
    conductor = 1
    for text in strings:
        text = str(text).replace(u'ζ', 'zeta')
        for m in re.findall(r'zeta(\d+)', text):
            conductor = _lcm(conductor, int(m))
        if re.search(r'\bI\b', text):
            conductor = _lcm(conductor, 4)
    return CyclotomicField(conductor)


def ingest_rational_table(spec, group):
    '''
    Validate a character table of ``group`` over ``K``.

    Parameters
    ----------
    spec : dict
        ``{"classes": [representatives], "rows": [[values as strings]]}``.
        Representatives are 1-indexed one-line permutations (or element
        indices for table-defined groups); each conjugacy class of ``group``
        must appear exactly once.
    group : slr.groups.Group

    Returns
    -------
    CharacterTable
        Rows in file order, columns reordered to the group's class order.

    Raises
    ------
    SpecError
        On malformed rows, missing classes, or failed orthogonality/
        integrality/degree checks (the offending row index is reported).
    '''
    if not isinstance(spec, dict) or 'rows' not in spec or \
            'classes' not in spec:
        raise SpecError('Table spec needs "classes" and "rows".', 'table')
    classes = group.conjugacy_classes()
    columns = []
    for position, representative in enumerate(spec['classes']):
        columns.append(classes.class_of[_element_index(group, representative,
                                                       position)])
    if sorted(columns) != list(range(len(classes))):
        raise SpecError('Representatives must cover each of the {} classes '
                        'exactly once.'.format(len(classes)), 'classes')
    field = table_field(v for row in spec['rows'] for v in row)
    rows = []
    for i, row in enumerate(spec['rows']):
        if len(row) != len(columns):
            raise SpecError('Row has {} values, expected {}.'
                            .format(len(row), len(columns)),
                            'rows.{}'.format(i))
        values = [None] * len(columns)
        for column, text in zip(columns, row):
            values[column] = field.parse(text)
        rows.append(ClassFunction(classes, values))
    total = 0
    for i, psi in enumerate(rows):
        for j, phi in enumerate(rows[:i + 1]):
            value = inner_product(psi, phi).rational()
            if value is None or value.denominator != 1:
                raise SpecError('Inner product with row {} is not an integer.'
                                .format(j), 'rows.{}'.format(i))
            if (i == j and value <= 0) or (i != j and value != 0):
                raise SpecError('Row is not orthogonal to row {}.'.format(j),
                                'rows.{}'.format(i))
        degree = psi.degree
        if degree is None or degree <= 0:
            raise SpecError('Value at the identity must be a positive '
                            'integer.', 'rows.{}'.format(i))
        total += degree * degree / inner_product(psi, psi).rational()
    if total != group.order:
        raise SpecError('Rows account for {} of the {} group elements; the '
                        'table is incomplete.'.format(total, group.order),
                        'rows')
    logger.debug('Ingested table with %d rows over %s', len(rows), field)
    return CharacterTable(classes, rows, conductor=field.n)


def trace_character(classes, matrices):
    '''Class function of traces of ``matrices`` (indexed by element).'''
    return ClassFunction(classes, (trace(matrices[r])
                                   for r in classes.representatives))


def linear_order(chi):
    '''
    Order of a 1-dimensional character in ``Hom(H, L^×)``.

    Raises
    ------
    PreconditionError
        If ``chi`` does not have degree 1.
    '''
    if chi.degree != 1:
        raise PreconditionError('Character of degree {} is not linear.'
                                .format(chi.degree))
    order = 1
    for value in chi.values:
        k, power = 1, value
        while power != 1:
            power = power * value
            k += 1
            if k > chi.group.order:
                raise PreconditionError('Value {} is not a root of unity of '
                                        'order dividing |H|.'.format(value))
        order = _lcm(order, k)
    return order


def galois_twist(surjection, action, chi, gamma):
    '''
    ``(γ*χ)(h) = γ(χ(g_γ^{-1}·h·g_γ))`` with ``γ`` acting on
    ``Q(ζ_c)`` through the lift in ``action``
    (:class:`slr.fields.ValueAction`).

    ``chi`` takes cyclotomic values; the result lives in ``Q(ζ_c)``.
    '''
    field = action.field
    g = surjection.section.reps[gamma]
    j = action.lifts[gamma]
    classes = chi.classes
    return ClassFunction(classes, (
        field.galois(j, field.lift(chi(surjection.conjugate_in_kernel(r, g))))
        for r in classes.representatives))
