# coding: utf-8
'''
Finite groups given by permutations or multiplication tables, Galois
surjections ``σ: G → Γ`` and the data derived from them: kernel ``H``,
conjugacy classes, coset sections and the two-sided class action.

Products follow :mod:`sympy.combinatorics` conventions: ``a*b`` applies ``a``
first.  All algorithms are exhaustive; orders are capped (default 128).
'''
from collections import OrderedDict
import logging
import math

from sympy.combinatorics import Permutation

from .errors import InternalError, PreconditionError, SpecError

logger = logging.getLogger(__name__)

MAX_ORDER = 128
MAX_DEGREE = 16


class ConjugacyData(object):
    '''
    Partition of a group into conjugacy classes.

    Attributes
    ----------
    classes : tuple
        Tuples of element indices; the identity class comes first and
        classes are ordered by their least element.
    class_of : list
        Element index → class index.
    representatives : tuple
        Least element of each class.
    witnesses : dict
        ``x → g`` with ``g^{-1}·rep·g = x`` for the class representative.
    '''
    def __init__(self, group, classes, witnesses):
        self.group = group
        self.classes = tuple(tuple(sorted(c)) for c in
                             sorted(classes, key=min))
        self.class_of = [None] * group.order
        for i, class_i in enumerate(self.classes):
            for x in class_i:
                self.class_of[x] = i
        self.representatives = tuple(c[0] for c in self.classes)
        self.sizes = tuple(len(c) for c in self.classes)
        self.witnesses = witnesses
        self.inverse_class = tuple(self.class_of[group.inverse(r)]
                                   for r in self.representatives)

    def __len__(self):
        return len(self.classes)

    def power_class(self, t, k):
        '''Class of ``z_t^k`` for the representative ``z_t``.'''
        return self.class_of[self.group.power(self.representatives[t], k)]


class Group(object):
    '''
    Finite group stored as a multiplication table over indices
    ``0..order-1``; index 0 is the identity.

    Parameters
    ----------
    table : list
        ``table[a][b]`` is the index of ``a*b``.
    elements : list, optional
        :class:`sympy.combinatorics.Permutation` per index.
    generators : list, optional
        Generator indices (used for Cayley-graph traversals).
    parent_index : list, optional
        For subgroups, the index of each element in the parent group.
    '''
    def __init__(self, table, elements=None, generators=(), parent_index=None,
                 name=None):
        self.mul = [list(row) for row in table]
        self.order = len(self.mul)
        if self.mul[0] != list(range(self.order)):
            raise SpecError('Element 0 must be the identity.', 'table')
        self.inv = []
        for a in range(self.order):
            try:
                self.inv.append(self.mul[a].index(0))
            except ValueError:
                raise SpecError('Element {} has no inverse.'.format(a),
                                'table')
        self.elements = elements
        self.generators = list(generators)
        self.parent_index = parent_index
        self.local_index = (None if parent_index is None else
                            {p: i for i, p in enumerate(parent_index)})
        self.name = name
        self._classes = None

    def __repr__(self):
        return '<Group{} order={}>'.format(' ' + self.name if self.name
                                           else '', self.order)

    @classmethod
    def from_permutations(cls, generators, max_order=MAX_ORDER,
                          max_degree=MAX_DEGREE, name=None):
        '''
        Close a list of permutations (1-indexed one-line images).

        Elements are indexed in breadth-first order from the identity,
        multiplying by the generators in the order given.

        Raises
        ------
        SpecError
            If an image list is not a permutation, the degree exceeds
            ``max_degree`` or the closure exceeds ``max_order``.
        '''
        degree = max([len(g) for g in generators] + [1])
        if degree > max_degree:
            raise SpecError('Permutation degree {} exceeds cap {}.'
                            .format(degree, max_degree), 'generators')
        permutations = []
        for i, images in enumerate(generators):
            images = [int(v) for v in images]
            if sorted(images) != list(range(1, len(images) + 1)):
                raise SpecError('Not a permutation: {}'.format(images),
                                'generators.{}'.format(i))
            images += list(range(len(images) + 1, degree + 1))
            permutations.append(Permutation([v - 1 for v in images]))
        identity = Permutation(list(range(degree)))
        elements = [identity]
        index = {tuple(identity.array_form): 0}
        position = 0
        while position < len(elements):
            for p in permutations:
                q = elements[position] * p
                key = tuple(q.array_form)
                if key not in index:
                    if len(elements) >= max_order:
                        raise SpecError('Generated group exceeds order cap '
                                        '{}.'.format(max_order), 'generators')
                    index[key] = len(elements)
                    elements.append(q)
            position += 1
        table = [[index[tuple((a * b).array_form)] for b in elements]
                 for a in elements]
        generator_indices = [index[tuple(p.array_form)] for p in permutations]
        logger.debug('Closed %d generators of degree %d: order %d',
                     len(permutations), degree, len(elements))
        return cls(table, elements=elements, generators=generator_indices,
                   name=name)

    @classmethod
    def from_table(cls, table, generators=None, name=None):
        order = len(table)
        if order == 0 or order > MAX_ORDER:
            raise SpecError('Table order must be in 1..{}.'.format(MAX_ORDER),
                            'table')
        for i, row in enumerate(table):
            if sorted(int(v) for v in row) != list(range(order)):
                raise SpecError('Row is not a permutation of the elements.',
                                'table.{}'.format(i))
        group = cls([[int(v) for v in row] for row in table],
                    generators=generators if generators is not None
                    else range(order), name=name)
        if order <= 64 and not group.is_associative():
            raise SpecError('Multiplication table is not associative.',
                            'table')
        return group

    def multiply(self, a, b):
        return self.mul[a][b]

    def product(self, *elements):
        result = 0
        for x in elements:
            result = self.mul[result][x]
        return result

    def inverse(self, a):
        return self.inv[a]

    def power(self, a, k):
        if k < 0:
            a, k = self.inv[a], -k
        result = 0
        for _ in range(k):
            result = self.mul[result][a]
        return result

    def conjugate(self, a, g):
        '''``g^{-1}·a·g``.'''
        return self.mul[self.mul[self.inv[g]][a]][g]

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    @property
    def exponent(self):
        result = 1
        for a in range(self.order):
            k = self.element_order(a)
            result = result * k // math.gcd(result, k)
        return result

    @property
    def is_abelian(self):
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.order) for b in range(a))

    def is_associative(self):
        mul = self.mul
        return all(mul[mul[a][b]][c] == mul[a][mul[b][c]]
                   for a in range(self.order) for b in range(self.order)
                   for c in range(self.order))

    def label(self, a):
        if self.parent_index is not None and self.elements is None:
            return 'g{}'.format(self.parent_index[a])
        if self.elements is None:
            return 'g{}'.format(a)
        cycles = self.elements[a].cyclic_form
        if not cycles:
            return '()'
        return ''.join('({})'.format(' '.join(str(v + 1) for v in cycle))
                       for cycle in cycles)

    def subgroup(self, indices, name=None):
        '''
        Subgroup on the given element indices (checked for closure).

        The subgroup's element ``i`` is ``indices[i]`` of this group, after
        sorting (so the identity stays first).
        '''
        parent = sorted(set(indices))
        local = {p: i for i, p in enumerate(parent)}
        try:
            table = [[local[self.mul[a][b]] for b in parent] for a in parent]
        except KeyError:
            raise SpecError('Elements do not form a subgroup.')
        elements = (None if self.elements is None else
                    [self.elements[p] for p in parent])
        return Group(table, elements=elements, parent_index=parent,
                     generators=range(1, len(parent)), name=name)

    def conjugacy_classes(self):
        '''
        Conjugacy classes by orbit enumeration.

        Returns
        -------
        ConjugacyData
        '''
        if self._classes is None:
            seen = set()
            classes = []
            witnesses = {}
            for x in range(self.order):
                if x in seen:
                    continue
                orbit = OrderedDict()
                for g in range(self.order):
                    y = self.conjugate(x, g)
                    if y not in orbit:
                        orbit[y] = g
                classes.append(list(orbit))
                witnesses.update(orbit)
                seen.update(orbit)
            self._classes = ConjugacyData(self, classes, witnesses)
        return self._classes

    def to_spec(self):
        if self.elements is None:
            return OrderedDict([('table', self.mul)])
        return OrderedDict([('generators',
                             [[v + 1 for v in self.elements[g].array_form]
                              for g in self.generators])])


def build_group(spec, max_order=MAX_ORDER, max_degree=MAX_DEGREE):
    '''
    Build a :class:`Group` from ``{"generators": [...]}`` (1-indexed
    one-line permutations) or ``{"table": [...], "generators": [...]}``.

    Examples
    --------
    >>> build_group({'generators': [[2, 1, 3], [2, 3, 1]]}).order
    6
    '''
    if not isinstance(spec, dict):
        raise SpecError('Group spec must be a mapping.', 'group')
    if 'table' in spec:
        return Group.from_table(spec['table'], spec.get('generators'),
                                name=spec.get('name'))
    if 'generators' not in spec:
        raise SpecError('Group spec needs "generators" or "table".', 'group')
    return Group.from_permutations(spec['generators'], max_order=max_order,
                                   max_degree=max_degree,
                                   name=spec.get('name'))


class CosetSection(object):
    '''
    Coset representatives ``g_γ`` (least element index per coset) and the
    cocycle ``h(γ1, γ2) = g_{γ1γ2}^{-1}·g_{γ1}·g_{γ2} ∈ H``.

    ``reps`` and ``h`` hold indices of ``G``.
    '''
    def __init__(self, surjection):
        self.surjection = surjection
        group = surjection.group
        tower = surjection.tower
        reps = [None] * tower.degree
        for g in range(group.order):
            gamma = surjection.sigma[g]
            if reps[gamma] is None:
                reps[gamma] = g
        self.reps = tuple(reps)
        self.h = tuple(tuple(group.product(group.inverse(reps[tower
                                                              .compose(a, b)]),
                                           reps[a], reps[b])
                             for b in range(tower.degree))
                       for a in range(tower.degree))
        self.verify()

    def verify(self):
        group = self.surjection.group
        tower = self.surjection.tower
        kernel = self.surjection.kernel.local_index
        for a in range(tower.degree):
            if self.h[0][a] != 0 or self.h[a][0] != 0:
                raise InternalError('Section cocycle is not normalized.')
            for b in range(tower.degree):
                lhs = group.multiply(self.reps[a], self.reps[b])
                rhs = group.multiply(self.reps[tower.compose(a, b)],
                                     self.h[a][b])
                if lhs != rhs or self.h[a][b] not in kernel:
                    raise InternalError('Section relation fails at ({}, {}).'
                                        .format(a, b))

    def check_associativity(self):
        '''
        ``h(γ1,γ2γ3)·h(γ2,γ3) = h(γ1γ2,γ3)·(g_{γ3}^{-1}·h(γ1,γ2)·g_{γ3})``
        for every triple.

        Returns
        -------
        tuple or None
            First failing triple, ``None`` when the identity holds.
        '''
        group = self.surjection.group
        tower = self.surjection.tower
        n = tower.degree
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    lhs = group.multiply(self.h[a][tower.compose(b, c)],
                                         self.h[b][c])
                    rhs = group.multiply(self.h[tower.compose(a, b)][c],
                                         group.conjugate(self.h[a][b],
                                                         self.reps[c]))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    @property
    def is_trivial(self):
        return all(v == 0 for row in self.h for v in row)


class GaloisSurjection(object):
    '''
    Surjective homomorphism ``σ: G → Γ = Gal(L/K)``.

    Parameters
    ----------
    group : Group
    tower : slr.fields.FieldTower
    sigma : list
        Index into ``tower.gamma`` for every element of ``group``.

    Raises
    ------
    SpecError
        If ``sigma`` is not a homomorphism or not surjective.
    '''
    def __init__(self, group, tower, sigma):
        self.group = group
        self.tower = tower
        self.sigma = tuple(sigma)
        for a in range(group.order):
            for b in range(group.order):
                if self.sigma[group.mul[a][b]] != \
                        tower.compose(self.sigma[a], self.sigma[b]):
                    raise SpecError('sigma is not a homomorphism at ({}, {}).'
                                    .format(group.label(a), group.label(b)),
                                    'sigma_images')
        if set(self.sigma) != set(range(tower.degree)):
            raise SpecError('sigma is not surjective onto Gamma of order {}.'
                            .format(tower.degree), 'sigma_images')
        self.kernel = group.subgroup([g for g in range(group.order)
                                      if self.sigma[g] == 0], name='H')
        self.section = CosetSection(self)
        logger.debug('Surjection onto Gamma of order %d, |H| = %d',
                     tower.degree, self.kernel.order)

    @classmethod
    def from_images(cls, group, tower, images):
        '''Extend generator images (indices into ``Γ``) along the Cayley
        graph, then validate.'''
        if len(images) != len(group.generators):
            raise SpecError('Expected {} sigma images, got {}.'
                            .format(len(group.generators), len(images)),
                            'sigma_images')
        for i, image in enumerate(images):
            if not 0 <= int(image) < tower.degree:
                raise SpecError('Image {} is not an element of Gamma.'
                                .format(image), 'sigma_images.{}'.format(i))
        sigma = [None] * group.order
        sigma[0] = 0
        frontier = [0]
        while frontier:
            a = frontier.pop(0)
            for g, image in zip(group.generators, images):
                b = group.mul[a][g]
                if sigma[b] is None:
                    sigma[b] = tower.compose(sigma[a], int(image))
                    frontier.append(b)
        if None in sigma:
            raise SpecError('Generators do not generate the group.',
                            'generators')
        return cls(group, tower, sigma)

    def galois(self, g):
        return self.tower.gamma[self.sigma[g]]

    @property
    def H(self):
        return self.kernel

    @property
    def index(self):
        return self.tower.degree

    def kernel_element(self, g):
        '''Local index in ``H`` of the ``G``-element ``g``.'''
        return self.kernel.local_index[g]

    def coset_decomposition(self, g):
        '''``(γ, h)`` with ``g = g_γ·h``, ``h`` a local index in ``H``.'''
        gamma = self.sigma[g]
        group = self.group
        h = group.multiply(group.inverse(self.section.reps[gamma]), g)
        return gamma, self.kernel_element(h)

    def conjugate_in_kernel(self, h, g):
        '''``g^{-1}·h·g`` for local ``h ∈ H`` and ``g ∈ G`` (local index).'''
        parent = self.kernel.parent_index[h]
        return self.kernel_element(self.group.conjugate(parent, g))

    @property
    def is_split(self):
        '''Section cocycle trivial and ``Γ``-reps centralize ``H``.'''
        if not self.section.is_trivial:
            return False
        return all(self.conjugate_in_kernel(h, g) == h
                   for g in self.section.reps
                   for h in range(self.kernel.order))

    def group_invertible(self, order=None):
        '''``True`` when ``order`` (default ``|G|``) is invertible in ``L``.'''
        order = self.group.order if order is None else order
        p = self.tower.L.characteristic
        return p == 0 or order % p != 0


def kernel_and_cosets(surjection):
    return surjection.kernel, surjection.section


def conjugacy_classes(group):
    return group.conjugacy_classes()


class TwoSidedClassAction(object):
    '''
    Action of ``Γ×Γ`` on the conjugacy classes of ``H``:
    ``(γ1, γ2)*h = g_{γ1}·h^{ε(γ2^{-1})}·g_{γ1}^{-1}``.

    Attributes
    ----------
    epsilon : tuple
        ``ε(γ)`` mod ``n`` per element of ``Γ``.
    table : dict
        ``(γ1, γ2) → permutation`` of class indices.
    '''
    def __init__(self, surjection, n):
        self.surjection = surjection
        self.n = n
        H = surjection.kernel
        if n % H.exponent:
            raise PreconditionError('exp(H) = {} does not divide n = {}.'
                                    .format(H.exponent, n))
        tower = surjection.tower
        self.epsilon = tower.epsilon(n)
        self.classes = H.conjugacy_classes()
        group = surjection.group
        self.table = {}
        for a in range(tower.degree):
            g = surjection.section.reps[a]
            g_inv = group.inverse(g)
            for b in range(tower.degree):
                k = self.epsilon[tower.inverse(b)]
                permutation = []
                for r in self.classes.representatives:
                    x = H.parent_index[H.power(r, k)]
                    y = group.product(g, x, g_inv)
                    permutation.append(self.classes.class_of[
                        surjection.kernel_element(y)])
                self.table[(a, b)] = tuple(permutation)

    def act(self, pair, t):
        return self.table[pair][t]

    def diagonal(self):
        '''Permutation of classes for each ``γ`` acting as ``(γ, γ)``.'''
        return [self.table[(a, a)] for a in range(self.surjection.tower
                                                  .degree)]

    def is_action(self):
        '''Identity acts trivially and the composition law holds.'''
        tower = self.surjection.tower
        n = tower.degree
        r = len(self.classes)
        if self.table[(0, 0)] != tuple(range(r)):
            return False
        for (a, b), p in self.table.items():
            for (c, d), q in self.table.items():
                composed = self.table[(tower.compose(a, c),
                                       tower.compose(b, d))]
                if any(p[q[t]] != composed[t] for t in range(r)):
                    return False
        return n > 0

    def diagonal_orbits(self):
        r = len(self.classes)
        seen = set()
        orbits = []
        for t in range(r):
            if t in seen:
                continue
            orbit = {t}
            frontier = [t]
            while frontier:
                u = frontier.pop()
                for permutation in self.diagonal():
                    v = permutation[u]
                    if v not in orbit:
                        orbit.add(v)
                        frontier.append(v)
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return orbits


def two_sided_class_action(surjection, n):
    return TwoSidedClassAction(surjection, n)


def surjection_from_spec(spec, tower, max_order=MAX_ORDER,
                         max_degree=MAX_DEGREE):
    '''
    Build a :class:`GaloisSurjection` from a group spec with
    ``sigma_images`` (indices into ``tower.gamma``).
    '''
    group = build_group(spec, max_order=max_order, max_degree=max_degree)
    images = spec.get('sigma_images', [0] * len(group.generators))
    return GaloisSurjection.from_images(group, tower, images)
