# coding: utf-8
import pytest

from ..characters import restrict_character
from ..classify import (classify_irreducibles, count_irreducibles,
                        decompose_character, finite_orbit_rep, galois_orbits,
                        schur_bound_gcd)
from ..commands import load_rational_table
from ..errors import PreconditionError, TowerMismatchError, UnsupportedError
from ..fields import CyclotomicTower, FiniteTower
from ..groups import surjection_from_spec
from ..semilinear import LinearRep, extension_search_finite
from .conftest import builtin, c4_over, s3xc2_over


def summary(descriptors):
    return ([d.m for d in descriptors],
            [d.endo_dimension for d in descriptors])


def test_real_quadratic_fuses_eisenstein_characters(s3_sqrt5):
    descriptors = classify_irreducibles(s3_sqrt5)
    assert len(descriptors) == 2
    assert summary(descriptors) == ([1, 1], [1, 2])
    fused = descriptors[1]
    assert fused.orbit == ((1, 2), )
    assert fused.stabilizer_order == 2
    assert fused.dimension == 2
    assert fused.schur.is_exact


def test_eisenstein_field(s3_sqrt_minus3):
    descriptors = classify_irreducibles(s3_sqrt_minus3)
    assert len(descriptors) == 3
    assert summary(descriptors) == ([1, 1, 1], [1, 1, 1])
    assert all(d.stabilizer_order == 2 for d in descriptors)


def test_cyclotomic_tower_moves_characters(s3_zeta12):
    descriptors = classify_irreducibles(s3_zeta12)
    assert len(descriptors) == 2
    assert summary(descriptors) == ([1, 1], [1, 2])
    assert descriptors[1].orbit == ((1, ), (2, ))
    assert descriptors[1].stabilizer_order == 1


@pytest.mark.parametrize('d, m', [(2, 1), (5, 1), (10, 1), (13, 1), (34, 1),
                                  (3, 2), (7, 2), (-1, 2), (-2, 2), (-5, 2)])
def test_cyclic_group_of_order_four(d, m):
    descriptors = classify_irreducibles(c4_over(d))
    assert len(descriptors) == 2
    assert descriptors[0].m == 1
    assert descriptors[1].m == m
    assert descriptors[1].endo_dimension == m * m
    assert descriptors[1].dimension == m


def test_gcd_bound_does_not_fix_the_index(c4_sqrt2, c4_rational_table):
    descriptors = classify_irreducibles(c4_sqrt2,
                                        rational_table=c4_rational_table)
    assert descriptors[1].gcd_bound == 2
    assert descriptors[1].m == 1
    assert descriptors[0].gcd_bound == 1


def test_quaternion_character_over_reals(q8xc2_real):
    descriptors = classify_irreducibles(q8xc2_real)
    assert len(descriptors) == 5
    assert [d.m for d in descriptors] == [1, 1, 1, 1, 2]
    assert descriptors[4].endo_dimension == 4
    criteria = {e.criterion for e in descriptors[4].schur.evidence}
    assert {'fs-indicator', 'split-extension'} <= criteria


def test_split_double_of_s3():
    descriptors = classify_irreducibles(s3xc2_over(5))
    assert len(descriptors) == 3
    assert summary(descriptors) == ([1, 1, 1], [1, 1, 1])
    assert [d.s for d in descriptors] == [1, 1, 1]
    standard = descriptors[2]
    assert standard.dimension == 2
    assert standard.self_product == 1
    criteria = {e.criterion for e in standard.schur.evidence}
    assert 'split-extension' in criteria
    assert standard.descent.evidence[0].criterion == 'permutation-character'


def test_undetermined_descent_stays_bounded():
    surjection = builtin('sqrt-3', 'Q8xC2')
    descriptors = classify_irreducibles(surjection)
    assert len(descriptors) == 5
    assert [d.m for d in descriptors[:4]] == [1, 1, 1, 1]
    quaternion = descriptors[4]
    assert quaternion.descent.divisors == [1, 2]
    assert quaternion.schur.divisors == [1, 2]
    assert quaternion.m is None and quaternion.s is None
    assert quaternion.character is None
    assert quaternion.endo_dimension is None
    report = quaternion.to_dict()
    assert report['descent_divisors'] == [1, 2]
    assert report['endo_dimension'] is None

    galois = galois_orbits(surjection)
    assert decompose_character(surjection, galois.table[0], galois) == {0: 1}
    with pytest.raises(UnsupportedError):
        decompose_character(surjection, galois.table[4], galois)

def test_finite_field_witness(s3_gf4):
    descriptors = classify_irreducibles(s3_gf4, witnesses=True)
    assert len(descriptors) == 3
    assert all(d.m == 1 for d in descriptors)
    criteria = {e.criterion for e in descriptors[1].schur.evidence}
    assert 'extension-search' in criteria


def test_count_irreducibles(s3_sqrt_minus3, s3_zeta12, q8xc2_real):
    assert count_irreducibles(s3_sqrt_minus3, 6) == 3
    assert count_irreducibles(s3_zeta12, 12) == 2
    assert count_irreducibles(q8xc2_real, 4) == 5
    with pytest.raises(PreconditionError):
        count_irreducibles(s3_sqrt_minus3, 2)


def test_decompose_character(c4_sqrt2, c4_rational_table, s3_zeta12):
    restricted = restrict_character(c4_rational_table[2], c4_sqrt2.kernel)
    assert decompose_character(c4_sqrt2, restricted) == {1: 2}
    galois = galois_orbits(s3_zeta12)
    # a single moved row is not Gamma-fixed
    with pytest.raises(PreconditionError):
        decompose_character(s3_zeta12, galois.table[1], galois)


def test_schur_bound_gcd_errors(s3_zeta12, s3_sqrt5, c4_sqrt2,
                                c4_rational_table):
    table = load_rational_table('builtin:S3', s3_sqrt5)
    assert list(schur_bound_gcd(s3_sqrt5, table).values()) == [1, 1]
    with pytest.raises(TowerMismatchError):
        schur_bound_gcd(s3_sqrt5, c4_rational_table)
    with pytest.raises(PreconditionError):
        schur_bound_gcd(s3_zeta12, load_rational_table('builtin:S3',
                                                       s3_zeta12))


def test_classify_needs_invertible_order():
    surjection = builtin('GF9', 'S3')
    with pytest.raises(PreconditionError):
        classify_irreducibles(surjection)


C2 = [[2, 1]]
C4 = [[2, 3, 4, 1]]
C6 = [[2, 3, 4, 5, 6, 1]]
C8 = [[2, 3, 4, 5, 6, 7, 8, 1]]
C4xC2 = [[2, 3, 4, 1, 5, 6], [1, 2, 3, 4, 6, 5]]
C2xC2xC2 = [[2, 1, 3, 4, 5, 6], [1, 2, 4, 3, 5, 6], [1, 2, 3, 4, 6, 5]]
S3xC2 = [[2, 3, 1, 4, 5], [2, 1, 3, 4, 5], [1, 2, 3, 5, 4]]


def over(tower, generators, sigma_images):
    return surjection_from_spec({'generators': generators,
                                 'sigma_images': sigma_images}, tower)


CYCLOTOMIC = [
    ('zeta3', 'S3'), ('zeta12-over-zeta3', 'S3'), ('zeta3', 'C6'),
    ('zeta12-over-zeta3', 'C6'), ('zeta4', 'C4'), ('zeta4', 'C2xC2'),
    ('zeta4', 'D4'), ('zeta4', 'Q8'), ('zeta4', 'Q8xC2'),
    ('C-over-R', 'Q8xC2'), ('C-over-R', 'C4'),
    (CyclotomicTower(5, [2]), (C4, [1])),
    (CyclotomicTower(7, [3]), (C6, [2])),
    (CyclotomicTower(8, [5]), (C4, [1])),
    (CyclotomicTower(8, [5]), (C4xC2, [0, 1])),
    (CyclotomicTower(12, [7]), (S3xC2, [0, 0, 1])),
    (CyclotomicTower(12, [7]), (S3xC2, [0, 1, 0]))]


@pytest.mark.parametrize('tower, group', CYCLOTOMIC,
                         ids=['-'.join(map(str, p)) if isinstance(p[0], str)
                              else 'n{}-{}'.format(p[0].n, i)
                              for i, p in enumerate(CYCLOTOMIC)])
def test_count_matches_classification(tower, group):
    if isinstance(tower, str):
        surjection = builtin(tower, group)
    else:
        surjection = over(tower, *group)
    descriptors = classify_irreducibles(surjection)
    assert count_irreducibles(surjection, surjection.tower.n) == \
        len(descriptors)
    assert sorted(r for d in descriptors for r in d.rows) == \
        list(range(len(galois_orbits(surjection).table)))


FINITE = [
    ('GF4', C2, [1], 1), ('GF4', C6, [1], 2), ('GF4', 'S3', None, 3),
    ('GF9', C2, [1], 1), ('GF9', C4, [1], 2), ('GF9', 'C2xC2', None, 2),
    ('GF9', C8, [1], 3), ('GF9', C4xC2, [0, 1], 3),
    ('GF9', C4xC2, [1, 0], 4), ('GF9', 'D4', None, 4),
    ('GF9', 'Q8', None, 4), ('GF9', C2xC2xC2, [1, 0, 0], 4)]


def finite_surjection(tower, group, sigma_images):
    if sigma_images is None:
        return builtin(tower, group)
    p = {'GF4': 2, 'GF9': 3}[tower]
    return over(FiniteTower(p, 2), group, sigma_images)


@pytest.mark.parametrize('tower, group, sigma_images, expected', FINITE)
def test_finite_fields_have_trivial_index(tower, group, sigma_images,
                                          expected):
    surjection = finite_surjection(tower, group, sigma_images)
    descriptors = classify_irreducibles(surjection)
    assert len(descriptors) == expected
    assert all(d.m == 1 for d in descriptors)
    if surjection.group_invertible():
        q = surjection.tower.L.order
        assert count_irreducibles(surjection, q - 1) == expected


@pytest.mark.parametrize('tower, group, sigma_images, expected', FINITE)
def test_finite_extension_search(tower, group, sigma_images, expected):
    surjection = finite_surjection(tower, group, sigma_images)
    galois = galois_orbits(surjection)
    L = surjection.tower.L
    for k in range(len(galois.orbits)):
        W = finite_orbit_rep(galois, k)
        if W is None:
            continue
        assert extension_search_finite(surjection, W)
        if len(galois.orbits[k]) > 1:
            # one row of a moved orbit is not Gamma-stable
            row = LinearRep(surjection.kernel, L,
                            [[[A[0][0]]] for A in W.matrices])
            assert not extension_search_finite(surjection, row)


def test_finite_moved_orbits():
    galois = galois_orbits(finite_surjection('GF9', C8, [1]))
    assert sorted(len(orbit) for orbit in galois.orbits) == [1, 1, 2]
    galois = galois_orbits(finite_surjection('GF4', C6, [1]))
    assert sorted(len(orbit) for orbit in galois.orbits) == [1, 2]
