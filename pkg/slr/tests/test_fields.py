# coding: utf-8
import random

import pytest

from ..errors import PreconditionError, SpecError, TowerMismatchError
from ..fields import (CyclotomicField, CyclotomicTower, FiniteField,
                      FiniteTower, QuadraticField, QuadraticTower,
                      fixed_subfield_dimension, galois_apply, norm_L_over_K,
                      squarefree_kernel, tower_from_spec)


def test_squarefree_kernel():
    assert squarefree_kernel(8) == 2
    assert squarefree_kernel(-12) == -3
    assert squarefree_kernel(34) == 34
    with pytest.raises(SpecError):
        squarefree_kernel(0)


def test_quadratic_arithmetic():
    field = QuadraticField(8)
    assert field.d == 2
    x = field.element(1, 1)
    assert x * x.conjugate() == -1
    assert x * x.inverse() == 1
    assert str(x) == '1+sqrt(2)'
    with pytest.raises(SpecError):
        QuadraticField(9)


def test_quadratic_parse():
    field = QuadraticField(-3)
    omega = field.parse('(-1 + sqrt(-3))/2')
    assert omega ** 3 == 1
    assert omega != 1
    assert QuadraticField(3).parse('sqrt(12)') == 2 * QuadraticField(3).sqrt_d
    with pytest.raises(SpecError):
        QuadraticField(2).parse('sqrt(5)')
    with pytest.raises(SpecError):
        QuadraticField(2).parse('y + 1')
    with pytest.raises(SpecError):
        QuadraticField(2).parse(0.5)


def test_cyclotomic_arithmetic():
    field = CyclotomicField(12)
    zeta = field.zeta()
    assert zeta ** 12 == 1
    assert zeta ** 6 == -1
    assert field.zeta(3) ** 2 == -1
    assert field.parse('I') == field.zeta(3)
    assert field.galois(5, zeta) == zeta ** 5
    assert (zeta + 1) * (zeta + 1).inverse() == 1


def test_cyclotomic_lift():
    omega = CyclotomicField(3).zeta()
    lifted = CyclotomicField(12).lift(omega)
    assert lifted == CyclotomicField(12).zeta(4)
    with pytest.raises(TowerMismatchError):
        CyclotomicField(8).lift(omega)


def test_gauss_sum_embedding():
    for d in (2, 5, -1, -3, 34):
        root = QuadraticField(d).cyclotomic_root()
        assert root * root == d


def test_finite_field():
    field = FiniteField(2, 2)
    assert field.modulus == (1, 1, 1)
    x = field.gen
    assert x ** 3 == 1
    assert x.frobenius() == x + 1
    assert len(list(field.elements())) == 4
    assert field.parse('x^2 + x') == 1
    with pytest.raises(SpecError):
        FiniteField(4)


def test_mixed_fields_do_not_combine():
    with pytest.raises(TowerMismatchError):
        QuadraticField(2).one + QuadraticField(3).one
    assert QuadraticField(2).one != QuadraticField(3).one


def test_quadratic_tower():
    tower = tower_from_spec({'kind': 'quadratic', 'd': 2})
    assert tower.degree == 2
    assert tower.rational_base
    assert tower.as_quadratic() == 2
    assert tower.norm(tower.L.element(1, 1)) == -1
    assert [g.label for g in tower.gamma] == ['id', 'conj']
    assert QuadraticTower(-3).epsilon(3) == (1, 2)
    with pytest.raises(PreconditionError):
        QuadraticTower(2).epsilon(4)


def test_galois_helpers():
    tower = QuadraticTower(2)
    L = tower.L
    conj = tower.gamma[1]
    assert galois_apply(conj, L.element(1, 1)) == L.element(1, -1)
    assert norm_L_over_K(tower, L.element(1, 1)) == -1
    assert fixed_subfield_dimension([tower.gamma[0]]) == 2
    assert fixed_subfield_dimension([conj]) == 1
    with pytest.raises(ValueError):
        fixed_subfield_dimension([])
    with pytest.raises(TowerMismatchError):
        galois_apply(conj, QuadraticTower(3).L.element(1, 1))


def test_cyclotomic_tower():
    tower = CyclotomicTower(12, [7])
    assert tower.degree == 2
    assert tower.base_degree == 2
    assert not tower.rational_base
    assert tower.fixed_subfield_dimension([0]) == 2
    assert tower.fixed_subfield_dimension([1]) == 1
    assert tower.epsilon(12) == (1, 7)
    assert CyclotomicTower(4, [3]).as_quadratic() == -1
    x = tower.L.zeta()
    assert tower.norm(x) == x * tower.apply(1, x)


def test_archimedean_tower_needs_conjugation():
    tower = tower_from_spec({'kind': 'cyclotomic', 'n': 4, 'subgroup': [3],
                             'archimedean': True})
    assert tower.archimedean
    with pytest.raises(SpecError):
        CyclotomicTower(12, [7], archimedean=True)


def test_finite_tower():
    tower = FiniteTower(3, 2)
    assert tower.degree == 2
    assert tower.base_degree == 1
    assert tower.epsilon(8) == (1, 3)
    with pytest.raises(PreconditionError):
        tower.value_action(3)
    x = tower.L.gen
    assert tower.norm(x) == x * x.frobenius()


def test_tower_spec_errors():
    with pytest.raises(SpecError):
        tower_from_spec({'kind': 'quartic'})
    with pytest.raises(SpecError):
        tower_from_spec({'kind': 'quadratic'})
    with pytest.raises(SpecError):
        tower_from_spec({'kind': 'cyclotomic', 'n': 12, 'subgroup': [2]})
    with pytest.raises(SpecError):
        tower_from_spec(['quadratic'])


def test_power_by_squaring():
    x = QuadraticField(2).element(1, 1)
    product = x.field.one
    for _ in range(21):
        product = product * x
    assert x ** 21 == product
    assert x ** -21 * product == 1
    assert x ** 0 == 1
    # the multiplicative group of GF(4) has order 3
    gen = FiniteField(2, 2).gen
    assert gen ** (3 * 10 ** 12 + 1) == gen
    zeta = CyclotomicField(7).zeta()
    assert zeta ** (7 * 10 ** 9 + 3) == zeta ** 3


def random_element(rng, field):
    if field.characteristic:
        coefficients = [rng.randrange(field.characteristic)
                        for _ in field.basis()]
    else:
        coefficients = [rng.randint(-5, 5) for _ in field.basis()]
    total = field.zero
    for c, b in zip(coefficients, field.basis()):
        total = total + c * b
    return total


@pytest.mark.parametrize('tower', [QuadraticTower(5), QuadraticTower(-3),
                                   CyclotomicTower(5, [2]),
                                   CyclotomicTower(8, [3, 5]),
                                   CyclotomicTower(12, [7]),
                                   FiniteTower(3, 2), FiniteTower(2, 3)],
                         ids=repr)
def test_galois_apply_composes(tower):
    rng = random.Random(20181)
    for _ in range(100):
        x = random_element(rng, tower.L)
        for g in tower.gamma:
            for h in tower.gamma:
                assert galois_apply(g, galois_apply(h, x)) == \
                    galois_apply(g * h, x)
        assert all(galois_apply(g, norm_L_over_K(tower, x)) ==
                   norm_L_over_K(tower, x) for g in tower.gamma)
