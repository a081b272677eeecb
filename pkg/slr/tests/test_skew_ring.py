# coding: utf-8
import pytest

from ..commands import load_source
from ..errors import InconsistencyError, PreconditionError
from ..semilinear import rep_from_spec
from ..skew_ring import SkewGroupRing, wedderburn_profile


def test_twisted_multiplication(c2_sqrt2):
    ring = SkewGroupRing(c2_sqrt2)
    assert ring.dimension == 4
    assert ring.prime_dimension == 4
    L = c2_sqrt2.tower.L
    root = ring.monomial(L.sqrt_d, 0)
    g = ring.monomial(L.one, 1)
    # g * sqrt(2) = sigma(sqrt(2)) * g
    assert g * root == ring.monomial(-L.sqrt_d, 1)
    assert g * g == ring.one
    assert ring.check_associativity() is None


def test_descent_idempotent(c2_sqrt2):
    ring = SkewGroupRing(c2_sqrt2)
    e = ring.descent_idempotent()
    assert e * e == e
    assert ring.left_ideal_dimension(e) == 2
    # L*G = End_Q(L) is central simple over K = Q.
    assert ring.center_dimension() == 1


def test_descent_needs_faithful_action(s3_sqrt5):
    with pytest.raises(PreconditionError):
        SkewGroupRing(s3_sqrt5).descent_idempotent()


def test_wedderburn_profile(s3_sqrt5):
    reps = [rep_from_spec(load_source('builtin:' + name, 'reps'), s3_sqrt5)
            for name in ('S3-trivial', 'S3-standard')]
    profile = wedderburn_profile(reps)
    assert [tuple(f) for f in profile] == [(2, 1), (2, 2)]
    with pytest.raises(InconsistencyError):
        wedderburn_profile(reps[:1])
    assert [tuple(f) for f in wedderburn_profile(reps[:1],
                                                 complete=False)] == [(2, 1)]
    with pytest.raises(InconsistencyError):
        wedderburn_profile([])
