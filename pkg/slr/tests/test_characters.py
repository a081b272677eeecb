# coding: utf-8
import itertools

import pytest

from ..characters import (char_table_splitting, cyclic_subgroups,
                          frobenius_schur, galois_twist, ingest_rational_table,
                          inner_product, linear_order, permutation_character,
                          restrict_character)
from ..errors import PreconditionError, SpecError
from ..groups import build_group
from .conftest import builtin

Q8 = {'generators': [[3, 4, 2, 1, 8, 7, 5, 6], [5, 6, 7, 8, 2, 1, 4, 3]]}
S3 = {'generators': [[2, 1, 3], [2, 3, 1]]}
D4 = {'generators': [[2, 3, 4, 1], [4, 3, 2, 1]]}


def test_cyclic_table():
    group = build_group({'generators': [[2, 3, 1]]})
    table = char_table_splitting(group)
    assert table.conductor == 3
    assert table.degrees == [1, 1, 1]
    assert all(v == 1 for v in table[0])
    assert table.verify()
    assert sorted(linear_order(row) for row in table) == [1, 3, 3]


def test_s3_table():
    table = char_table_splitting(build_group(S3))
    assert table.degrees == [1, 1, 2]
    # classes: identity, transpositions, 3-cycles
    assert [str(v) for v in table[1]] == ['1', '-1', '1']
    assert [str(v) for v in table[2]] == ['2', '0', '-1']


def test_quaternion_table():
    group = build_group(Q8)
    table = char_table_splitting(group)
    classes = table.classes
    assert len(table) == 5
    assert table.degrees == [1, 1, 1, 1, 2]
    center = [t for t in range(1, len(classes)) if classes.sizes[t] == 1]
    assert len(center) == 1
    two = table[4]
    for t in range(len(classes)):
        expected = {0: 2, center[0]: -2}.get(t, 0)
        assert two[t] == expected
    assert frobenius_schur(two) == -1
    assert all(frobenius_schur(row) == 1 for row in table[:4])


def test_inner_products():
    table = char_table_splitting(build_group(S3))
    chi = table[2]
    assert inner_product(chi, chi) == 1
    assert inner_product(chi, table[1]) == 0
    square = chi * chi
    assert inner_product(square, table[0]) == 1
    assert inner_product(square, table[1]) == 1
    assert inner_product(square, chi) == 1


def test_restriction(s3_sqrt5):
    table = char_table_splitting(s3_sqrt5.group)
    restricted = restrict_character(table[2], s3_sqrt5.kernel)
    assert [str(v) for v in restricted] == ['2', '-1', '-1']


def test_linear_order_rejects_higher_degree():
    table = char_table_splitting(build_group(S3))
    with pytest.raises(PreconditionError):
        linear_order(table[2])


def test_galois_twist_over_eisenstein_field(s3_sqrt_minus3):
    table = char_table_splitting(s3_sqrt_minus3.kernel)
    action = s3_sqrt_minus3.tower.value_action(table.conductor)
    for row in table:
        twisted = galois_twist(s3_sqrt_minus3, action, row, 1)
        assert list(twisted) == [action.field.lift(v) for v in row]


def test_galois_twist_over_real_field(s3_sqrt5):
    table = char_table_splitting(s3_sqrt5.kernel)
    action = s3_sqrt5.tower.value_action(table.conductor)
    twisted = galois_twist(s3_sqrt5, action, table[1], 1)
    assert list(twisted) == [action.field.galois(action.lifts[1],
                                                 action.field.lift(v))
                             for v in table[2]]


def test_ingest_rational_table():
    group = build_group(S3)
    spec = {'classes': [[2, 3, 1], [1, 2, 3], [2, 1, 3]],
            'rows': [[1, 1, 1], [1, 1, -1], [-1, 2, 0]]}
    table = ingest_rational_table(spec, group)
    assert [str(v) for v in table[2]] == ['2', '0', '-1']
    assert table.conductor == 1


def test_ingest_rational_table_errors():
    group = build_group(S3)
    classes = [[1, 2, 3], [2, 1, 3], [2, 3, 1]]
    with pytest.raises(SpecError, match='rows.1'):
        ingest_rational_table({'classes': classes,
                               'rows': [[1, 1, 1], [1, 1, 1]]}, group)
    with pytest.raises(SpecError, match='rows'):
        ingest_rational_table({'classes': classes,
                               'rows': [[1, 1, 1], [1, -1, 1]]}, group)
    with pytest.raises(SpecError, match='classes'):
        ingest_rational_table({'classes': classes[:2],
                               'rows': [[1, 1]]}, group)
    with pytest.raises(SpecError, match='rows.0'):
        ingest_rational_table({'classes': classes,
                               'rows': [[1, 1]]}, group)


def test_kernel_table_of_split_extension():
    surjection = builtin('C-over-R', 'Q8xC2')
    table = char_table_splitting(surjection.kernel)
    assert table.conductor == 4


def test_cyclic_subgroups():
    group = build_group(S3)
    subgroups = cyclic_subgroups(group)
    assert [len(u) for u in subgroups] == [1, 2, 2, 2, 3]
    assert subgroups[0] == (0, )
    assert len(cyclic_subgroups(build_group(Q8))) == 5


def test_permutation_character():
    group = build_group(S3)
    subgroups = cyclic_subgroups(group)
    table = char_table_splitting(group)
    # classes: identity, transpositions, 3-cycles
    coset = permutation_character(group, subgroups[1])
    assert [str(v) for v in coset] == ['3', '1', '0']
    assert [inner_product(coset, row) for row in table] == [1, 0, 1]
    regular = permutation_character(group, subgroups[0])
    assert [inner_product(regular, row) for row in table] == [1, 1, 2]
    with pytest.raises(PreconditionError):
        permutation_character(group, (0, subgroups[1][1], subgroups[2][1]))


def test_trivial_row_first():
    for spec in (S3, Q8, D4, {'generators': [[2, 3, 4, 1]]}):
        table = char_table_splitting(build_group(spec))
        assert all(v == 1 for v in table[0])
        keys = [(row.degree, tuple(tuple(v.coeffs) for v in row))
                for row in table[1:]]
        assert keys == sorted(keys)
    # sign sorts below the trivial row by coefficients alone
    sign = char_table_splitting(build_group(S3))[1]
    assert [str(v) for v in sign] == ['1', '-1', '1']


def test_dihedral_table():
    group = build_group(D4)
    table = char_table_splitting(group)
    classes = table.classes
    assert table.degrees == [1, 1, 1, 1, 2]
    assert table.verify()
    center = [t for t in range(1, len(classes)) if classes.sizes[t] == 1]
    assert len(center) == 1
    for t in range(len(classes)):
        assert table[4][t] == {0: 2, center[0]: -2}.get(t, 0)
    assert frobenius_schur(table[4]) == 1


def cycles(*lengths):
    '''Generators of ``C_{n1} x C_{n2} x ...`` on disjoint cycles.'''
    degree = sum(lengths)
    generators = []
    start = 0
    for n in lengths:
        image = list(range(1, degree + 1))
        for i in range(n):
            image[start + i] = start + (i + 1) % n + 1
        generators.append(image)
        start += n
    return {'generators': generators}


ABELIAN = [(2, ), (3, ), (4, ), (2, 2), (5, ), (6, ), (7, ), (8, ), (4, 2),
           (2, 2, 2), (9, ), (3, 3), (10, ), (11, ), (12, ), (6, 2), (13, ),
           (14, ), (15, ), (16, ), (8, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)]


@pytest.mark.parametrize('lengths', ABELIAN, ids=str)
def test_abelian_table_matches_dual_group(lengths):
    group = build_group(cycles(*lengths))
    table = char_table_splitting(group)
    assert group.is_abelian
    assert len(table) == group.order
    assert table.verify()
    # exponent vector of every element in the generators
    coordinates = {}
    for x in itertools.product(*(range(n) for n in lengths)):
        g = group.product(*(group.power(a, k)
                            for a, k in zip(group.generators, x)))
        coordinates[g] = x
    assert len(coordinates) == group.order
    e = group.exponent
    zeta = table[0].field.zeta()
    classes = table.classes
    expected = []
    for a in itertools.product(*(range(n) for n in lengths)):
        expected.append([zeta ** sum(ai * xi * (e // n) for ai, xi, n in
                                     zip(a, coordinates[r], lengths))
                         for r in classes.representatives])
    rows = [list(row) for row in table]
    for values in expected:
        assert values in rows
    for row in table:
        for g in range(group.order):
            for h in range(group.order):
                assert row(group.multiply(g, h)) == row(g) * row(h)
