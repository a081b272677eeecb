# coding: utf-8
'''
The skew group ring ``L⋊G`` with ``(r1·g1)(r2·g2) = r1·σ_{g1}(r2)·g1g2``.

Elements are stored as one ``L`` coefficient per group element.  Linear
algebra (center, ideals) runs over the prime field ``P`` on the basis
``b_k·g`` (``b_k`` a ``P``-basis of ``L``); ``K``-dimensions are
``P``-dimensions divided by ``[K:P]``.
'''
from collections import namedtuple
import logging

from .errors import InconsistencyError, InternalError, PreconditionError
from .linalg import prime_nullspace, prime_rank
from .semilinear import hom_space

logger = logging.getLogger(__name__)

#: Associativity is checked on basis triples up to this ``P``-dimension.
ASSOCIATIVITY_LIMIT = 48

WedderburnFactor = namedtuple('WedderburnFactor', ['n', 'division_dimension'])


class SkewElement(object):
    __slots__ = ('ring', 'coefficients')

    def __init__(self, ring, coefficients):
        self.ring = ring
        self.coefficients = tuple(coefficients)

    def __add__(self, other):
        return SkewElement(self.ring, (a + b for a, b in
                                       zip(self.coefficients,
                                           other.coefficients)))

    def __sub__(self, other):
        return SkewElement(self.ring, (a - b for a, b in
                                       zip(self.coefficients,
                                           other.coefficients)))

    def __mul__(self, other):
        if isinstance(other, SkewElement):
            return self.ring.multiply(self, other)
        return SkewElement(self.ring, (a * other for a in self.coefficients))

    def __rmul__(self, scalar):
        return SkewElement(self.ring, (scalar * a for a in self.coefficients))

    def __eq__(self, other):
        return (isinstance(other, SkewElement) and other.ring is self.ring and
                self.coefficients == other.coefficients)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        group = self.ring.group
        terms = ['({})*{}'.format(c, group.label(g))
                 for g, c in enumerate(self.coefficients) if not c.is_zero]
        return ' + '.join(terms) if terms else '0'


class SkewGroupRing(object):
    '''
    ``L⋊G`` for a Galois surjection ``σ: G → Γ``.

    Raises
    ------
    InternalError
        If the basis-triple associativity check fails (run when
        ``dim_P ≤ 48``).
    '''
    def __init__(self, surjection, check=True):
        self.surjection = surjection
        self.group = surjection.group
        self.tower = surjection.tower
        self.L = self.tower.L
        if check and self.prime_dimension <= ASSOCIATIVITY_LIMIT:
            triple = self.check_associativity()
            if triple is not None:
                raise InternalError('Skew multiplication is not associative '
                                    'at {}.'.format(triple))

    @property
    def prime_dimension(self):
        return self.L.degree * self.group.order

    @property
    def dimension(self):
        '''``dim_K(L⋊G) = [L:K]·|G|``.'''
        return self.tower.degree * self.group.order

    def element(self, terms):
        '''Element from ``{g: r}`` (missing coefficients are zero).'''
        L = self.L
        return SkewElement(self, (L(terms[g]) if g in terms else L.zero
                                  for g in range(self.group.order)))

    def monomial(self, r, g):
        return self.element({g: r})

    @property
    def one(self):
        return self.monomial(self.L.one, 0)

    def multiply(self, x, y):
        '''Bilinear extension of ``(r1·g1)(r2·g2) = r1·σ_{g1}(r2)·g1g2``.'''
        L = self.L
        sigma = self.surjection.sigma
        result = [L.zero] * self.group.order
        for a, r in enumerate(x.coefficients):
            if r.is_zero:
                continue
            for b, s in enumerate(y.coefficients):
                if s.is_zero:
                    continue
                ab = self.group.multiply(a, b)
                result[ab] = result[ab] + r * self.tower.apply(sigma[a], s)
        return SkewElement(self, result)

    def basis(self):
        '''``P``-basis ``b_k·g``, grouped by group element.'''
        return [self.monomial(b, g) for g in range(self.group.order)
                for b in self.L.basis()]

    def coordinates(self, x):
        return [c for r in x.coefficients for c in self.L.coordinates(r)]

    def generators(self):
        '''Algebra generators: ``L·1`` and the group generators.'''
        return ([self.monomial(b, 0) for b in self.L.basis()] +
                [self.monomial(self.L.one, g) for g in self.group.generators])

    def check_associativity(self):
        '''First basis triple with ``(xy)z ≠ x(yz)``, else ``None``.'''
        basis = self.basis()
        for x in basis:
            for y in basis:
                xy = x * y
                for z in basis:
                    if xy * z != x * (y * z):
                        return (x, y, z)
        return None

    def center_dimension(self):
        '''
        ``dim_K Z(L⋊G)``: the ``P``-solutions of ``z·x = x·z`` over the
        algebra generators, divided by ``[K:P]``.
        '''
        basis = self.basis()
        columns = []
        for b in basis:
            column = []
            for x in self.generators():
                column.extend(self.coordinates(b * x - x * b))
            columns.append(column)
        rows = [list(row) for row in zip(*columns)]
        kernel = prime_nullspace(rows, len(basis), self.L.prime_domain)
        base_degree = self.tower.base_degree
        if len(kernel) % base_degree:
            raise InternalError('Center has P-dimension {} not divisible by '
                                '[K:P] = {}.'.format(len(kernel), base_degree))
        return len(kernel) // base_degree

    def left_ideal_dimension(self, x):
        '''``P``-dimension of ``(L⋊G)·x``.'''
        rows = [self.coordinates(b * x) for b in self.basis()]
        return prime_rank(rows, self.prime_dimension, self.L.prime_domain)

    def descent_idempotent(self):
        '''
        ``e = (1/|G|)·Σ_g g`` for ``G`` acting faithfully on ``L``.

        ``e`` is checked to be idempotent with ``(L⋊G)·e ≅ L`` (a left ideal
        of ``P``-dimension ``[L:P]``), so ``L⋊G ≅ End_K(L)``.

        Raises
        ------
        PreconditionError
            Unless ``σ`` is injective and ``|G|`` is invertible in ``L``.
        '''
        if self.surjection.kernel.order != 1:
            raise PreconditionError('Galois descent needs ker(sigma) = 1.')
        if not self.surjection.group_invertible():
            raise PreconditionError('|G| is not invertible in {}.'
                                    .format(self.L))
        weight = self.L.one / self.group.order
        e = self.element({g: weight for g in range(self.group.order)})
        if e * e != e:
            raise InternalError('Descent element is not idempotent.')
        dimension = self.left_ideal_dimension(e)
        if dimension != self.L.degree:
            raise InternalError('(L*G)e has P-dimension {}, expected {}.'
                                .format(dimension, self.L.degree))
        logger.debug('Descent idempotent: left ideal of P-dimension %d',
                     dimension)
        return e


def wedderburn_profile(reps, complete=True):
    '''
    ``(n_i, dim_K D_i)`` for pairwise non-isomorphic irreducible reps.

    ``dim_K D_i`` is the ``K``-dimension of ``End(V_i)`` and ``n_i`` solves
    ``n_i·dim_K D_i = [L:K]·dim_L V_i``.

    Parameters
    ----------
    reps : list
        :class:`slr.semilinear.SemilinearRep` instances on one surjection.
    complete : bool, optional
        Also require ``Σ n_i²·dim_K D_i = [L:K]·|G|``.

    Raises
    ------
    PreconditionError
        If ``|G|`` is not invertible in ``L``.
    InconsistencyError
        If either identity fails (duplicated or missing reps).
    '''
    if not reps:
        raise InconsistencyError('No representations given.')
    surjection = reps[0].surjection
    if not surjection.group_invertible():
        raise PreconditionError('|G| is not invertible in {}; L*G need not be '
                                'semisimple.'.format(surjection.tower.L))
    degree = surjection.tower.degree
    profile = []
    for i, V in enumerate(reps):
        d = hom_space(V, V).dimension
        n, remainder = divmod(degree * V.dim, d)
        if remainder:
            raise InconsistencyError('dim_K End = {} does not divide '
                                     '[L:K]*dim = {} for rep {}.'
                                     .format(d, degree * V.dim, i))
        profile.append(WedderburnFactor(n, d))
    total = sum(f.n ** 2 * f.division_dimension for f in profile)
    expected = degree * surjection.group.order
    if complete and total != expected:
        raise InconsistencyError('Profile accounts for dimension {} of {}; '
                                 'the list is incomplete or has duplicates.'
                                 .format(total, expected))
    logger.debug('Wedderburn profile %s', profile)
    return profile
