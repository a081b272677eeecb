# coding: utf-8
import pytest

from ..classify import finite_orbit_rep, galois_orbits
from ..commands import load_source
from ..errors import (BudgetExceededError, InvalidRepError, PreconditionError,
                      SpecError, TowerMismatchError)
from ..linalg import identity
from ..semilinear import (SemilinearRep, change_basis, direct_sum, dual,
                          extension_search_finite, hom_dimensions,
                          hom_inner_product, hom_space, induce_from_H,
                          is_isomorphic, isomorphism_witness, rep_from_spec,
                          restrict_to_H, semilinear_character, tensor, twist,
                          verify_cocycle, LinearRep)
from .conftest import builtin, c4_over


def rep(name, surjection, validate=True):
    return rep_from_spec(load_source('builtin:' + name, 'reps'), surjection,
                         validate=validate)


def test_trivial_and_standard(s3_sqrt5):
    trivial = rep('S3-trivial', s3_sqrt5)
    standard = rep('S3-standard', s3_sqrt5)
    assert verify_cocycle(trivial)
    assert verify_cocycle(standard)
    assert standard.dim == 2
    assert [str(v) for v in semilinear_character(standard)] == \
        ['2', '-1', '-1']


def test_omega_extension(s3_sqrt_minus3):
    V = rep('S3-omega', s3_sqrt_minus3)
    omega = s3_sqrt_minus3.tower.parse('(-1 + sqrt(-3))/2')
    character = semilinear_character(V)
    assert character[0] == 1
    assert set(character[1:]) == {omega, omega * omega}


def test_omega_needs_eisenstein_field(s3_sqrt5):
    with pytest.raises(SpecError, match='matrices.gen1'):
        rep('S3-omega', s3_sqrt5)


def test_corrupted_rep_has_witness(s3_sqrt5):
    with pytest.raises(InvalidRepError):
        rep('S3-corrupted', s3_sqrt5)
    verdict = verify_cocycle(rep('S3-corrupted', s3_sqrt5, validate=False))
    assert not verdict
    a, b = verdict.witness
    assert 0 <= a < 6 and 0 <= b < 6


def test_singular_generator(s3_sqrt5):
    spec = {'matrices': {'gen0': [['1', '1'], ['1', '1']],
                         'gen1': [['1', '0'], ['0', '1']]}}
    with pytest.raises(InvalidRepError):
        rep_from_spec(spec, s3_sqrt5)
    with pytest.raises(SpecError, match='gen1'):
        rep_from_spec({'matrices': {'gen0': [['1']]}}, s3_sqrt5)


def test_hom_spaces(s3_sqrt5):
    trivial = rep('S3-trivial', s3_sqrt5)
    standard = rep('S3-standard', s3_sqrt5)
    assert hom_space(trivial, trivial).dimension == 1
    assert hom_space(standard, standard).dimension == 2
    assert hom_space(trivial, standard).dimension == 0
    assert hom_inner_product(standard, standard) == 2
    assert hom_dimensions(standard, standard) == (2, 2)
    space = hom_space(standard, standard)
    assert all(space.contains(M) for M in space.basis)


def test_isomorphism(s3_sqrt5):
    standard = rep('S3-standard', s3_sqrt5)
    L = s3_sqrt5.tower.L
    P = [[L.one, L.sqrt_d], [L.zero, L.one]]
    moved = change_basis(standard, P)
    assert verify_cocycle(moved)
    assert isomorphism_witness(standard, moved) is not None
    assert is_isomorphic(standard, moved)
    assert not is_isomorphic(standard, direct_sum(rep('S3-trivial',
                                                      s3_sqrt5),
                                                  rep('S3-trivial',
                                                      s3_sqrt5)))


def test_constructions(s3_sqrt5):
    trivial = rep('S3-trivial', s3_sqrt5)
    standard = rep('S3-standard', s3_sqrt5)
    total = direct_sum(trivial, standard)
    assert total.dim == 3 and verify_cocycle(total)
    square = tensor(standard, standard)
    assert square.dim == 4 and verify_cocycle(square)
    assert hom_inner_product(square, trivial) == 2
    assert verify_cocycle(dual(standard))
    assert semilinear_character(dual(standard)) == \
        semilinear_character(standard)


def test_induction(s3_sqrt5):
    H = s3_sqrt5.kernel
    L = s3_sqrt5.tower.L
    W = LinearRep(H, L, [identity(1, L)] * H.order)
    induced = induce_from_H(s3_sqrt5, W)
    assert induced.dim == 2
    assert verify_cocycle(induced)
    # L*G (x) W for W trivial is the permutation module on the two cosets.
    assert [str(v) for v in semilinear_character(induced)] == ['2', '2', '2']


def test_twist_of_restriction(s3_sqrt5):
    standard = rep('S3-standard', s3_sqrt5)
    W = restrict_to_H(standard)
    twisted = twist(s3_sqrt5, 1, W)
    assert twisted.character() == W.character()


def test_mismatched_surjections(s3_sqrt5, s3_sqrt_minus3):
    with pytest.raises(TowerMismatchError):
        hom_space(rep('S3-trivial', s3_sqrt5),
                  rep('S3-trivial', s3_sqrt_minus3))


def test_trivial_constructor(c4_sqrt2):
    V = SemilinearRep.trivial(c4_sqrt2, dim=2)
    assert verify_cocycle(V)
    assert hom_space(V, V).dimension == 4


def test_extension_search(s3_gf4, s3_sqrt5):
    W = finite_orbit_rep(galois_orbits(s3_gf4), 1)
    V = extension_search_finite(s3_gf4, W)
    assert V
    assert verify_cocycle(V)
    assert restrict_to_H(V).character() == W.character()
    with pytest.raises(BudgetExceededError):
        extension_search_finite(s3_gf4, W, budget=3)
    H = s3_sqrt5.kernel
    L = s3_sqrt5.tower.L
    with pytest.raises(PreconditionError):
        extension_search_finite(s3_sqrt5,
                                LinearRep(H, L, [identity(1, L)] * H.order))


def s3_family(surjection):
    L = surjection.tower.L
    H = surjection.kernel
    trivial = rep('S3-trivial', surjection)
    standard = rep('S3-standard', surjection)
    return [trivial, standard, direct_sum(trivial, standard),
            tensor(standard, standard), dual(standard),
            change_basis(standard, [[L.one, L.sqrt_d], [L.zero, L.one]]),
            induce_from_H(surjection,
                          LinearRep(H, L, [identity(1, L)] * H.order)),
            direct_sum(trivial, trivial),
            SemilinearRep.from_generators(surjection, [[[L(-1)]], [[L.one]]])]


def c4_family(surjection):
    L = surjection.tower.L
    H = surjection.kernel
    trivial = SemilinearRep.trivial(surjection)
    rotation = SemilinearRep.from_generators(
        surjection, [[[L.zero, L.one], [L(-1), L.zero]]])
    return [trivial, rotation, direct_sum(trivial, rotation),
            tensor(rotation, rotation), dual(rotation),
            change_basis(rotation, [[L.one, L.sqrt_d], [L.zero, L.one]]),
            induce_from_H(surjection,
                          LinearRep(H, L, [identity(1, L)] * H.order)),
            induce_from_H(surjection,
                          LinearRep.from_character(H, L, [1, -1])),
            SemilinearRep.from_generators(surjection, [[[L(-1)]]])]


@pytest.mark.parametrize('family, d', [(s3_family, 5), (c4_family, 3),
                                       (c4_family, -1)])
def test_hom_dimension_identity(family, d):
    surjection = (builtin('sqrt{}'.format(d), 'S3') if family is s3_family
                  else c4_over(d))
    reps = family(surjection)
    assert all(verify_cocycle(V) for V in reps)
    for V in reps:
        for W in reps:
            dim_K, dim_L = hom_dimensions(V, W)
            assert dim_K == dim_L == hom_inner_product(V, W)
