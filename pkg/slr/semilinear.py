# coding: utf-8
'''
Semilinear representations as matrix families.

A representation of ``L⋊G`` on ``L^n`` is a family ``A_g ∈ GL_n(L)`` with

    A_{g1·g2} = A_{g1} · σ_{g1}(A_{g2}),

and an intertwiner ``M: V → W`` satisfies ``B_g · σ_g(M) = M · A_g``.
Hom spaces are solved over the prime field after restriction of scalars,
then thinned to a ``K``-basis.
'''
from collections import deque, namedtuple
from itertools import product
import logging

import progressbar
import si_prefix as si

from .characters import inner_product, trace_character
from .errors import (BudgetExceededError, InternalError, InvalidRepError,
                     PreconditionError, SpecError, TowerMismatchError)
from .fields import FiniteField, FieldElement
from .linalg import (as_matrix, block_diag, block_matrix, identity, inverse,
                     is_invertible, kron, mat_add, mat_map, mat_mul, mat_scale,
                     nullspace, prime_nullspace, prime_rank, transpose, zeros)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7
COEFFICIENT_RANGE = 3
#: Largest number of integer combinations tried for an isomorphism witness.
WITNESS_LIMIT = 10 ** 5


class CocycleVerdict(namedtuple('CocycleVerdict', ['holds', 'witness'])):
    '''``holds`` plus the first failing pair ``(g1, g2)`` (``None`` if ok).'''
    __slots__ = ()

    def __bool__(self):
        return self.holds


class ExhaustedSearch(namedtuple('ExhaustedSearch', ['candidates'])):
    '''Every candidate was examined; none extends.'''
    __slots__ = ()

    def __bool__(self):
        return False


def _check_matrix(A, n, field, label):
    if len(A) != n or any(len(row) != n for row in A):
        raise InvalidRepError('Matrix for {} is not {}x{}.'.format(label, n, n),
                              'matrices')
    for row in A:
        for x in row:
            if not isinstance(x, FieldElement) or x.field != field:
                raise TowerMismatchError('Entry {!r} of the matrix for {} is '
                                         'not in {}.'.format(x, label, field),
                                         'matrices')


def galois_matrix(tower, gamma, M):
    '''Entrywise ``γ(M)`` for ``γ`` given by its index in ``tower.gamma``.'''
    if gamma == 0:
        return M
    return mat_map(lambda x: tower.apply(gamma, x), M)


def _close(group, generators, images, step, n, field):
    '''
    Extend generator matrices over the Cayley graph (breadth first).

    ``step(a, A_a, A_g)`` returns the matrix of ``a·g``.
    '''
    matrices = [None] * group.order
    matrices[0] = identity(n, field)
    frontier = deque([0])
    while frontier:
        a = frontier.popleft()
        for g, image in zip(generators, images):
            b = group.multiply(a, g)
            if matrices[b] is None:
                matrices[b] = step(a, matrices[a], image)
                frontier.append(b)
    if None in matrices:
        raise SpecError('Generators do not generate the group.', 'generators')
    return matrices


def _generator_images(group, images):
    '''Generator matrices from a list or a ``{generator index: matrix}``.'''
    if isinstance(images, dict):
        try:
            return [images[g] for g in group.generators]
        except KeyError as exception:
            raise SpecError('No matrix for generator {}.'
                            .format(exception.args[0]), 'matrices')
    images = list(images)
    if len(images) != len(group.generators):
        raise SpecError('Expected {} generator matrices, got {}.'
                        .format(len(group.generators), len(images)),
                        'matrices')
    return images


class LinearRep(object):
    '''
    Ordinary ``L``-linear representation of a group (usually ``H``).

    Parameters
    ----------
    group : slr.groups.Group
    field : slr.fields.Field
    matrices : list
        One ``n×n`` matrix per element index.
    validate : bool, optional
        Check the homomorphism property on generators.
    '''
    def __init__(self, group, field, matrices, validate=True):
        self.group = group
        self.field = field
        self.matrices = tuple(as_matrix(A) for A in matrices)
        if len(self.matrices) != group.order:
            raise SpecError('Expected {} matrices, got {}.'
                            .format(group.order, len(self.matrices)),
                            'matrices')
        self.dim = len(self.matrices[0])
        if validate:
            self.validate()

    def validate(self):
        n = self.dim
        for a, A in enumerate(self.matrices):
            _check_matrix(A, n, self.field, self.group.label(a))
        if self.matrices[0] != identity(n, self.field):
            raise InvalidRepError('The identity must act as I.', 'matrices')
        for a in range(self.group.order):
            for g in self.group.generators:
                if self.matrices[self.group.multiply(a, g)] != \
                        mat_mul(self.matrices[a], self.matrices[g]):
                    raise InvalidRepError('Not a homomorphism at ({}, {}).'
                                          .format(self.group.label(a),
                                                  self.group.label(g)),
                                          'matrices')

    @classmethod
    def from_generators(cls, group, field, images, validate=True):
        images = [as_matrix(A) for A in _generator_images(group, images)]
        n = len(images[0]) if images else 1
        matrices = _close(group, group.generators, images,
                          lambda a, A, B: mat_mul(A, B), n, field)
        return cls(group, field, matrices, validate=validate)

    @classmethod
    def from_character(cls, group, field, values):
        '''1-dimensional representation with ``A_h = (values[h])``.'''
        return cls(group, field, [((field(v), ), ) for v in values])

    def character(self):
        return trace_character(self.group.conjugacy_classes(), self.matrices)

    def __repr__(self):
        return '<LinearRep dim={} of {!r} over {}>'.format(self.dim,
                                                           self.group,
                                                           self.field)


class SemilinearRep(object):
    '''
    Semilinear representation of ``G`` (acting on ``L`` through ``σ``).

    Parameters
    ----------
    surjection : slr.groups.GaloisSurjection
    matrices : list
        One ``n×n`` matrix over ``L`` per element of ``G``.
    validate : bool, optional
        Check shapes, invertibility and the cocycle relation on all pairs.

    Raises
    ------
    InvalidRepError
        If ``validate`` is set and a check fails.
    '''
    def __init__(self, surjection, matrices, validate=True):
        self.surjection = surjection
        self.matrices = tuple(as_matrix(A) for A in matrices)
        if len(self.matrices) != self.group.order:
            raise SpecError('Expected {} matrices, got {}.'
                            .format(self.group.order, len(self.matrices)),
                            'matrices')
        self.dim = len(self.matrices[0])
        if validate:
            for a, A in enumerate(self.matrices):
                _check_matrix(A, self.dim, self.field, self.group.label(a))
            verdict = verify_cocycle(self)
            if not verdict:
                a, b = verdict.witness
                raise InvalidRepError('Cocycle relation fails at ({}, {}).'
                                      .format(self.group.label(a),
                                              self.group.label(b)),
                                      'matrices')

    @property
    def group(self):
        return self.surjection.group

    @property
    def tower(self):
        return self.surjection.tower

    @property
    def field(self):
        return self.surjection.tower.L

    def twisted(self, g, M):
        '''``σ_g(M)``.'''
        return galois_matrix(self.tower, self.surjection.sigma[g], M)

    @classmethod
    def from_generators(cls, surjection, images, validate=True):
        '''
        Complete generator matrices with
        ``A_{a·g} = A_a·σ_a(A_g)`` along the Cayley graph.

        Raises
        ------
        InvalidRepError
            If a generator matrix is singular (or, with ``validate``, if
            the completed family is not a cocycle).
        '''
        group = surjection.group
        tower = surjection.tower
        images = [as_matrix(A) for A in _generator_images(group, images)]
        for g, A in zip(group.generators, images):
            if not is_invertible(A):
                raise InvalidRepError('Matrix for {} is singular.'
                                      .format(group.label(g)), 'matrices')
        n = len(images[0]) if images else 1

        def step(a, A, B):
            return mat_mul(A, galois_matrix(tower, surjection.sigma[a], B))

        matrices = _close(group, group.generators, images, step, n, tower.L)
        return cls(surjection, matrices, validate=validate)

    @classmethod
    def trivial(cls, surjection, dim=1):
        L = surjection.tower.L
        return cls(surjection, [identity(dim, L)] * surjection.group.order,
                   validate=False)

    def to_spec(self):
        '''Generator matrices as strings, keyed ``gen0, gen1, …``.'''
        return {'gen{}'.format(i): [[str(x) for x in row]
                                    for row in self.matrices[g]]
                for i, g in enumerate(self.group.generators)}

    def __repr__(self):
        return '<SemilinearRep dim={} of {!r} over {!r}>'.format(
            self.dim, self.group, self.tower)


def rep_from_spec(spec, surjection, validate=True):
    '''
    Build a :class:`SemilinearRep` from ``{"matrices": {"gen0": [[...]]}}``
    (entries are field-element strings, one key per group generator).

    With ``validate=False`` the completed family is returned unchecked, for
    :func:`verify_cocycle` to report a witness.
    '''
    matrices = spec.get('matrices') if isinstance(spec, dict) else None
    if matrices is None:
        raise SpecError('Rep spec needs "matrices".', 'matrices')
    tower = surjection.tower
    group = surjection.group
    if isinstance(matrices, dict):
        images = []
        for i in range(len(group.generators)):
            key = 'gen{}'.format(i)
            if key not in matrices:
                raise SpecError('Missing generator matrix.',
                                'matrices.{}'.format(key))
            images.append(matrices[key])
    else:
        images = matrices
    parsed = []
    for i, A in enumerate(images):
        try:
            parsed.append(as_matrix([tower.parse(x) for x in row]
                                    for row in A))
        except SpecError as exception:
            raise SpecError(str(exception), 'matrices.gen{}'.format(i))
    return SemilinearRep.from_generators(surjection, parsed,
                                         validate=validate)


def verify_cocycle(rep):
    '''
    Check ``A_{g1g2} = A_{g1}·σ_{g1}(A_{g2})`` for all ``|G|²`` pairs.

    Returns
    -------
    CocycleVerdict

    Raises
    ------
    InvalidRepError
        If some ``A_g`` is singular.
    '''
    group = rep.group
    for g, A in enumerate(rep.matrices):
        if not is_invertible(A):
            raise InvalidRepError('Matrix for {} is singular.'
                                  .format(group.label(g)), 'matrices')
    if rep.matrices[0] != identity(rep.dim, rep.field):
        return CocycleVerdict(False, (0, 0))
    for a in range(group.order):
        A = rep.matrices[a]
        for b in range(group.order):
            if rep.matrices[group.multiply(a, b)] != \
                    mat_mul(A, rep.twisted(a, rep.matrices[b])):
                logger.debug('Cocycle fails at (%s, %s)', group.label(a),
                             group.label(b))
                return CocycleVerdict(False, (a, b))
    return CocycleVerdict(True, None)


def _same_surjection(V, W):
    if V.surjection is not W.surjection:
        raise TowerMismatchError('Representations belong to different '
                                 'surjections.')


class HomSpace(object):
    '''
    ``Hom_{L⋊G}(V, W)`` as a ``K``-vector space.

    Attributes
    ----------
    basis : list
        ``dim W × dim V`` matrices over ``L``, ``K``-linearly independent.
    prime_dimension : int
        Dimension over the prime field ``P`` (``= dim_K·[K:P]``).
    '''
    def __init__(self, source, target, basis, prime_dimension):
        self.source = source
        self.target = target
        self.basis = list(basis)
        self.prime_dimension = prime_dimension

    @property
    def dimension(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains(self, M):
        s = self.source.surjection
        group = s.group
        return all(mat_mul(self.target.matrices[g],
                           self.target.twisted(g, M)) ==
                   mat_mul(M, self.source.matrices[g])
                   for g in group.generators)

    def __repr__(self):
        return '<HomSpace dim_K={}>'.format(self.dimension)


def _flatten(field, M):
    return [c for row in M for x in row for c in field.coordinates(x)]


def hom_space(V, W):
    '''
    Solve ``W_g·σ_g(M) = M·V_g`` over ``K``.

    The relation is imposed on the generators of ``G`` (it then holds for
    all of ``G``).  Unknowns are the prime-field coordinates of the
    entries of ``M``; the prime-field solution space is thinned to a
    ``K``-basis by multiplying with a basis of ``K``.

    Returns
    -------
    HomSpace
    '''
    _same_surjection(V, W)
    s = V.surjection
    tower = s.tower
    L = tower.L
    n, m = V.dim, W.dim
    basis_L = L.basis()
    columns = []
    for i in range(m):
        for j in range(n):
            for b in basis_L:
                column = []
                for g in s.group.generators:
                    image = tower.apply(s.sigma[g], b)
                    A = V.matrices[g]
                    B = W.matrices[g]
                    for r in range(m):
                        for c in range(n):
                            value = L.zero
                            if c == j:
                                value = B[r][i] * image
                            if r == i:
                                value = value - b * A[j][c]
                            column.extend(L.coordinates(value))
                columns.append(column)
    rows = [list(row) for row in zip(*columns)] if columns and columns[0] \
        else []
    kernel = prime_nullspace(rows, len(columns), L.prime_domain)
    degree = L.degree
    solutions = []
    for v in kernel:
        solutions.append(as_matrix(
            [L.from_coordinates(v[(i * n + j) * degree:
                                  (i * n + j + 1) * degree])
             for j in range(n)] for i in range(m)))

    kappa = tower.base_basis()
    basis = []
    span = []
    for M in solutions:
        if prime_rank(span + [_flatten(L, M)], m * n * degree,
                      L.prime_domain) > len(span):
            basis.append(M)
            span.extend(_flatten(L, mat_scale(k, M)) for k in kappa)
    if len(basis) * len(kappa) != len(solutions):
        raise InternalError('Hom space of prime dimension {} is not a '
                            'K-space of K-degree {}.'.format(len(solutions),
                                                             len(kappa)))
    logger.debug('Hom space: dim_P=%d, dim_K=%d', len(solutions), len(basis))
    return HomSpace(V, W, basis, len(solutions))


def ordinary_intertwiners(V, W):
    '''
    ``L``-basis of ``Hom_{L[H]}(V, W)`` for linear reps of the same group.
    '''
    if V.group is not W.group:
        raise TowerMismatchError('Linear reps of different groups.')
    L = V.field
    n, m = V.dim, W.dim
    rows = []
    for h in V.group.generators:
        A = V.matrices[h]
        B = W.matrices[h]
        for r in range(m):
            for c in range(n):
                row = []
                for i in range(m):
                    for j in range(n):
                        value = L.zero
                        if c == j:
                            value = B[r][i]
                        if r == i:
                            value = value - A[j][c]
                        row.append(value)
                rows.append(row)
    return [as_matrix(v[i * n:(i + 1) * n] for i in range(m))
            for v in nullspace(rows, m * n, L)]


def hom_dimensions(V, W):
    '''``(dim_K Hom_{L⋊G}(V, W), dim_L Hom_{L[H]}(V|_H, W|_H))``.'''
    return (hom_space(V, W).dimension,
            len(ordinary_intertwiners(restrict_to_H(V), restrict_to_H(W))))


def isomorphism_witness(V, W, coefficient_range=COEFFICIENT_RANGE):
    '''
    Invertible intertwiner from single basis elements of the hom space, then
    integer combinations with coefficients in ``[-r, r]``.

    Returns
    -------
    tuple or None
        The matrix, or ``None`` if the cheap search found nothing.
    '''
    if V.dim != W.dim:
        return None
    basis = hom_space(V, W).basis
    for M in basis:
        if is_invertible(M):
            return M
    r = coefficient_range
    if len(basis) < 2 or (2 * r + 1) ** len(basis) > WITNESS_LIMIT:
        return None
    for coefficients in product(range(-r, r + 1), repeat=len(basis)):
        if sum(1 for c in coefficients if c) < 2:
            continue
        M = _combination(V.field, basis, coefficients)
        if is_invertible(M):
            return M
    return None


def _combination(field, basis, coefficients):
    M = mat_scale(field(coefficients[0]), basis[0])
    for c, B in zip(coefficients[1:], basis[1:]):
        M = mat_add(M, mat_scale(c, B))
    return M


def is_isomorphic(V, W, coefficient_range=COEFFICIENT_RANGE,
                  budget=DEFAULT_BUDGET):
    '''
    Decide ``V ≅ W``.

    A witness search runs first.  In characteristic zero the restricted
    characters then decide; over a finite ``L`` the whole ``K``-span of
    the hom space is enumerated within ``budget``.

    Raises
    ------
    BudgetExceededError
        If the finite enumeration exceeds ``budget``.
    '''
    _same_surjection(V, W)
    if V.dim != W.dim:
        return False
    if isomorphism_witness(V, W, coefficient_range) is not None:
        return True
    L = V.field
    if L.characteristic == 0:
        return semilinear_character(V) == semilinear_character(W)
    tower = V.tower
    basis = [mat_scale(k, M) for M in hom_space(V, W).basis
             for k in tower.base_basis()]
    p = L.characteristic
    required = p ** len(basis)
    if required > budget:
        raise BudgetExceededError(required, budget,
                                  'Isomorphism search needs {} candidates, '
                                  'budget {}.'.format(si.si_format(required,
                                                                   precision=1),
                                                      si.si_format(budget,
                                                                   precision=1)))
    for coefficients in product(range(p), repeat=len(basis)):
        if any(coefficients) and \
                is_invertible(_combination(L, basis, coefficients)):
            return True
    return False


def restrict_to_H(V):
    '''``V|_H`` as an ordinary ``L``-linear representation of ``H``.'''
    H = V.surjection.kernel
    return LinearRep(H, V.field, [V.matrices[g] for g in H.parent_index],
                     validate=False)


def semilinear_character(V):
    '''``χ_V = χ_{V|_H}`` as a class function on ``H`` with values in ``L``.'''
    return restrict_to_H(V).character()


def hom_inner_product(V, W):
    '''``⟨χ_V, χ_W⟩``; equals ``dim_K Hom(V, W)`` when ``|G|`` is invertible.'''
    value = inner_product(semilinear_character(V), semilinear_character(W))
    rational = value.rational()
    if rational is None:
        raise InternalError('Inner product {} of restricted characters is '
                            'not rational.'.format(value))
    return rational


def twist(surjection, g, W):
    '''
    ``g*W`` for a linear rep ``W`` of ``H``: ``B_h = σ_g(A_{g^{-1}hg})``.
    '''
    H = surjection.kernel
    tower = surjection.tower
    gamma = surjection.sigma[g]
    matrices = [galois_matrix(tower, gamma,
                              W.matrices[surjection.conjugate_in_kernel(h, g)])
                for h in range(H.order)]
    return LinearRep(H, W.field, matrices, validate=False)


def induce_from_H(surjection, W):
    '''
    ``(L⋊G) ⊗_{L[H]} W`` on the basis ``g_i ⊗ e_j`` (``g_i`` the section
    representatives): block ``(j, i)`` of ``A_g`` is ``σ_{g_j}(W(h))`` where
    ``g·g_i = g_j·h``.
    '''
    group = surjection.group
    tower = surjection.tower
    L = tower.L
    reps = surjection.section.reps
    n = tower.degree
    empty = zeros(W.dim, W.dim, L)
    matrices = []
    for g in range(group.order):
        blocks = [[empty] * n for _ in range(n)]
        for i, g_i in enumerate(reps):
            gamma, h = surjection.coset_decomposition(group.multiply(g, g_i))
            blocks[gamma][i] = galois_matrix(tower, gamma, W.matrices[h])
        matrices.append(block_matrix(blocks, L))
    return SemilinearRep(surjection, matrices)


def direct_sum(V, W):
    _same_surjection(V, W)
    return SemilinearRep(V.surjection,
                         [block_diag(A, B, V.field)
                          for A, B in zip(V.matrices, W.matrices)],
                         validate=False)


def tensor(V, W):
    _same_surjection(V, W)
    return SemilinearRep(V.surjection, [kron(A, B) for A, B in
                                        zip(V.matrices, W.matrices)],
                         validate=False)


def dual(V):
    '''``g ↦ (A_g^{-1})^T``.'''
    return SemilinearRep(V.surjection, [transpose(inverse(A, V.field))
                                        for A in V.matrices], validate=False)


def change_basis(V, P):
    '''
    ``B_g = P·A_g·σ_g(P^{-1})``.

    Raises
    ------
    InvalidRepError
        If ``P`` is singular.
    '''
    P = as_matrix(P)
    try:
        P_inverse = inverse(P, V.field)
    except ZeroDivisionError:
        raise InvalidRepError('Change of basis matrix is singular.', 'P')
    return SemilinearRep(V.surjection,
                         [mat_mul(mat_mul(P, A), V.twisted(g, P_inverse))
                          for g, A in enumerate(V.matrices)], validate=False)


def gamma_generators(tower):
    '''Greedy generating set of ``Γ`` (indices, in index order).'''
    chosen = []
    for g in range(1, tower.degree):
        if g not in tower.closure(chosen):
            chosen.append(g)
    return chosen


def _complete(surjection, generators, images, n):
    '''Close over ``generators``; ``None`` if the cocycle relation fails.'''
    group = surjection.group
    tower = surjection.tower

    def step(a, A, B):
        return mat_mul(A, galois_matrix(tower, surjection.sigma[a], B))

    matrices = _close(group, generators, images, step, n, tower.L)
    for a in range(group.order):
        for g, image in zip(generators, images):
            if matrices[group.multiply(a, g)] != step(a, matrices[a], image):
                return None
    return matrices


def extension_search_finite(surjection, W, budget=DEFAULT_BUDGET,
                            progress=False):
    '''
    Extend a linear rep ``W`` of ``H`` to a semilinear rep of ``G``.

    Matrices for the coset representatives of a generating set of ``Γ``
    are enumerated lexicographically (entries in
    :meth:`slr.fields.FiniteField.elements` order); the first candidate
    whose completion is a cocycle restricting to ``W`` is returned.

    Returns
    -------
    SemilinearRep or ExhaustedSearch

    Raises
    ------
    PreconditionError
        If ``L`` is not finite.
    BudgetExceededError
        If ``q^{k·n²}`` exceeds ``budget``.
    '''
    tower = surjection.tower
    L = tower.L
    if not isinstance(L, FiniteField):
        raise PreconditionError('Extension search needs a finite field L, '
                                'not {}.'.format(L))
    H = surjection.kernel
    if W.group is not H:
        raise TowerMismatchError('W is not a representation of ker(sigma).')
    coset_generators = [surjection.section.reps[g]
                        for g in gamma_generators(tower)]
    n = W.dim
    slots = n * n * len(coset_generators)
    required = L.order ** slots
    if required > budget:
        raise BudgetExceededError(required, budget,
                                  'Extension search needs {} candidates, '
                                  'budget {}.'.format(si.si_format(required,
                                                                   precision=1),
                                                      si.si_format(budget,
                                                                   precision=1)))
    logger.info('Searching %s extension candidates over %s',
                si.si_format(required, precision=0), L)
    generators = [H.parent_index[h] for h in H.generators] + coset_generators
    fixed = [W.matrices[h] for h in H.generators]
    elements = list(L.elements())
    bar = (progressbar.ProgressBar(max_value=required) if progress else
           progressbar.NullBar(max_value=required))
    with bar:
        for count, entries in enumerate(product(elements, repeat=slots), 1):
            bar.update(count)
            candidates = [as_matrix(entries[k * n * n + r * n:
                                            k * n * n + (r + 1) * n]
                                    for r in range(n))
                          for k in range(len(coset_generators))]
            if not all(is_invertible(A) for A in candidates):
                continue
            matrices = _complete(surjection, generators, fixed + candidates,
                                 n)
            if matrices is not None:
                logger.debug('Extension found after %d candidates', count)
                return SemilinearRep(surjection, matrices)
    logger.info('No extension among %d candidates', required)
    return ExhaustedSearch(required)
