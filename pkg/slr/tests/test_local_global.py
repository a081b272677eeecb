# coding: utf-8
import random

import pytest
from sympy import QQ, primefactors

from ..errors import SpecError
from ..local_global import (INFINITY, find_norm_certificate, hilbert_symbol,
                            is_local_norm, negative_pell, norm_equation,
                            pell_criterion, quaternion_class)

SOLVABLE = (2, 5, 10, 13, 34)
UNSOLVABLE = (3, 7, -1, -2, -5)


def test_hilbert_symbols():
    assert hilbert_symbol(-1, -1, INFINITY) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(-1, 3, 3) == -1
    assert hilbert_symbol(-1, 2, 2) == 1
    assert hilbert_symbol(2, 3, 'oo') == 1
    # symbols only depend on square classes
    assert hilbert_symbol(-4, 12, 3) == hilbert_symbol(-1, 3, 3)
    with pytest.raises(SpecError):
        hilbert_symbol(1, 2, 4)
    with pytest.raises(SpecError):
        hilbert_symbol(0, 2, 2)


def test_quaternion_class():
    hamilton = quaternion_class(-1, -1)
    assert hamilton.ramified == [2, INFINITY]
    assert hamilton.reciprocity
    assert hamilton[5] == 1
    split = quaternion_class(1, 7)
    assert split.split
    assert quaternion_class(-1, 3).ramified == [2, 3]


def test_pell_criterion():
    assert [pell_criterion(d) for d in SOLVABLE] == [True] * len(SOLVABLE)
    assert [pell_criterion(d) for d in UNSOLVABLE] == \
        [False] * len(UNSOLVABLE)
    # reduced to the squarefree kernel first
    assert pell_criterion(8)
    assert not pell_criterion(12)


@pytest.mark.parametrize('d', SOLVABLE)
def test_negative_pell_solvable(d):
    report = negative_pell(d)
    assert report.solvable
    assert report.obstruction is None
    assert report.criterion
    x, y = report.certificate
    assert x * x - d * y * y == -1


@pytest.mark.parametrize('d', UNSOLVABLE)
def test_negative_pell_obstructed(d):
    report = negative_pell(d)
    assert not report.solvable
    assert report.certificate is None
    assert report.obstruction in report.symbols.ramified
    assert not is_local_norm(d, -1)


def test_pell_two():
    certificate = negative_pell(2).certificate
    assert (certificate.x, certificate.y) == (1, 1)


def test_rational_targets():
    report = norm_equation(2, target=7)
    assert report.solvable
    assert report.criterion is None
    x, y = report.certificate
    assert x * x - 2 * y * y == 7
    certificate = find_norm_certificate(5, -4)
    assert certificate.x ** 2 - 5 * certificate.y ** 2 == -4
    half = find_norm_certificate(2, QQ(1, 2))
    assert half.x ** 2 - 2 * half.y ** 2 == QQ(1, 2)
    assert not norm_equation(3, target=2).solvable


def test_obstruction_place():
    assert negative_pell(3).obstruction == 2
    assert negative_pell(-1).obstruction == 2
    assert negative_pell(7).obstruction == 2


def random_pairs(count, seed=4177):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        a, b = rng.randint(-600, 600), rng.randint(-600, 600)
        if a and b:
            pairs.append((a, b))
    return pairs


def places(*values):
    primes = set([2])
    for v in values:
        primes.update(primefactors(v))
    return sorted(primes) + [INFINITY]


@pytest.mark.parametrize('a, b', random_pairs(200))
def test_hilbert_reciprocity(a, b):
    product = 1
    for place in places(a, b):
        symbol = hilbert_symbol(a, b, place)
        assert symbol in (-1, 1)
        assert symbol == hilbert_symbol(b, a, place)
        product *= symbol
    assert product == 1
    # a prime outside 2ab sees two units
    p = next(q for q in (3, 5, 7, 11, 13, 17, 19, 23) if a * b % q)
    assert hilbert_symbol(a, b, p) == 1


@pytest.mark.parametrize('a, b', random_pairs(200, seed=9403))
def test_hilbert_bilinearity(a, b):
    c = b + 1 if b != -1 else 2
    for place in places(a, b, c):
        assert hilbert_symbol(a, b * c, place) == \
            hilbert_symbol(a, b, place) * hilbert_symbol(a, c, place)
        assert hilbert_symbol(a * c, b, place) == \
            hilbert_symbol(a, b, place) * hilbert_symbol(c, b, place)
        assert hilbert_symbol(a, -a, place) == 1
