# coding: utf-8
import pytest

from ..commands import build_surjection, load_rational_table
from ..fields import QuadraticTower
from ..groups import Group, GaloisSurjection, surjection_from_spec


def builtin(tower, group):
    return build_surjection('builtin:' + tower, 'builtin:' + group)


def c4_over(d):
    '''C4 acting on Q(sqrt(d)) through its quotient of order 2.'''
    return surjection_from_spec({'generators': [[2, 3, 4, 1]],
                                 'sigma_images': [1]}, QuadraticTower(d))


def s3xc2_over(d):
    '''S3 x C2 with only the C2 factor acting on Q(sqrt(d)).'''
    spec = {'generators': [[2, 3, 1, 4, 5], [2, 1, 3, 4, 5], [1, 2, 3, 5, 4]],
            'sigma_images': [0, 0, 1]}
    return surjection_from_spec(spec, QuadraticTower(d))


@pytest.fixture
def s3_sqrt5():
    return builtin('sqrt5', 'S3')


@pytest.fixture
def s3_sqrt_minus3():
    return builtin('sqrt-3', 'S3')


@pytest.fixture
def s3_zeta12():
    return builtin('zeta12-over-zeta3', 'S3')


@pytest.fixture
def s3_gf4():
    return builtin('GF4', 'S3')


@pytest.fixture
def c4_sqrt2():
    return c4_over(2)


@pytest.fixture
def q8xc2_real():
    return builtin('C-over-R', 'Q8xC2')


@pytest.fixture
def c2_sqrt2():
    group = Group.from_permutations([[2, 1]])
    return GaloisSurjection.from_images(group, QuadraticTower(2), [1])


@pytest.fixture
def c4_rational_table(c4_sqrt2):
    return load_rational_table('builtin:C4', c4_sqrt2)
