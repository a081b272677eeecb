# coding: utf-8
import pytest

from ..errors import PreconditionError, SpecError
from ..fields import QuadraticTower
from ..groups import (Group, GaloisSurjection, TwoSidedClassAction,
                      build_group, kernel_and_cosets, surjection_from_spec)
from .conftest import builtin

S3 = {'generators': [[2, 1, 3], [2, 3, 1]]}


def test_permutation_closure():
    group = build_group(S3)
    assert group.order == 6
    assert group.exponent == 6
    assert not group.is_abelian
    assert group.is_associative()
    assert group.generators == [1, 2]
    for a in range(group.order):
        assert group.multiply(a, group.inverse(a)) == 0


def test_conjugacy_classes():
    classes = build_group(S3).conjugacy_classes()
    assert len(classes) == 3
    assert classes.sizes == (1, 3, 2)
    assert classes.representatives[0] == 0
    group = classes.group
    for x, g in classes.witnesses.items():
        rep = classes.representatives[classes.class_of[x]]
        assert group.conjugate(rep, g) == x


def test_group_spec_errors():
    with pytest.raises(SpecError):
        build_group({'generators': [[1, 1, 3]]})
    with pytest.raises(SpecError):
        build_group(S3, max_order=4)
    with pytest.raises(SpecError):
        build_group(S3, max_degree=2)
    with pytest.raises(SpecError):
        build_group({'order': 6})
    with pytest.raises(SpecError):
        Group.from_table([[0, 1], [1, 1]])


def test_table_group():
    group = build_group({'table': [[0, 1], [1, 0]]})
    assert group.order == 2
    assert len(group.conjugacy_classes()) == 2


def test_surjection(s3_sqrt5):
    assert s3_sqrt5.group.order == 6
    assert s3_sqrt5.kernel.order == 3
    assert s3_sqrt5.index == 2
    assert s3_sqrt5.section.reps == (0, 1)
    assert s3_sqrt5.section.check_associativity() is None
    assert not s3_sqrt5.is_split
    assert s3_sqrt5.group_invertible()


def test_surjection_errors():
    tower = QuadraticTower(2)
    with pytest.raises(SpecError):
        # A 3-cycle cannot map onto an element of order 2.
        surjection_from_spec(dict(S3, sigma_images=[0, 1]), tower)
    with pytest.raises(SpecError):
        surjection_from_spec(dict(S3, sigma_images=[0, 0]), tower)
    with pytest.raises(SpecError):
        surjection_from_spec(dict(S3, sigma_images=[2, 0]), tower)
    with pytest.raises(SpecError):
        GaloisSurjection.from_images(build_group(S3), tower, [1])


def test_section_cocycle(c4_sqrt2):
    section = c4_sqrt2.section
    group = c4_sqrt2.group
    assert section.h[1][1] == group.multiply(section.reps[1],
                                             section.reps[1])
    assert not section.is_trivial
    assert not c4_sqrt2.is_split


def test_split_extension(q8xc2_real):
    assert q8xc2_real.kernel.order == 8
    assert q8xc2_real.section.is_trivial
    assert q8xc2_real.is_split


def test_coset_decomposition(s3_sqrt5):
    group = s3_sqrt5.group
    for g in range(group.order):
        gamma, h = s3_sqrt5.coset_decomposition(g)
        parent = s3_sqrt5.kernel.parent_index[h]
        assert group.multiply(s3_sqrt5.section.reps[gamma], parent) == g


def test_kernel_and_cosets(s3_sqrt5):
    kernel, section = kernel_and_cosets(s3_sqrt5)
    assert kernel.order == 3
    assert len(section.reps) == 2
    assert section.reps[0] == 0
    assert all(s3_sqrt5.sigma[r] == gamma
               for gamma, r in enumerate(section.reps))


def test_two_sided_class_action():
    surjection = builtin('zeta3', 'S3')
    action = TwoSidedClassAction(surjection, 3)
    assert action.is_action()
    assert len(action.diagonal_orbits()) == 3
    with pytest.raises(PreconditionError):
        TwoSidedClassAction(surjection, 2)


def test_two_sided_class_action_fuses_classes(s3_zeta12):
    action = TwoSidedClassAction(s3_zeta12, 12)
    assert action.is_action()
    assert action.diagonal_orbits() == [(0, ), (1, 2)]
