# coding: utf-8
'''
Hilbert symbols over ``Q_p`` and ``R``, quaternion classes ``(a, b)_Q`` and
rational norm equations ``x² − d·y² = t``.
'''
from collections import OrderedDict, namedtuple
import logging
import math

from sympy import QQ, Symbol, factorint, isprime
from sympy.solvers.diophantine.diophantine import \
    diop_ternary_quadratic_normal

from .errors import InternalError, PreconditionError, SpecError
from .fields import format_rational, legendre, squarefree_kernel, to_rational

logger = logging.getLogger(__name__)

INFINITY = 'inf'
#: Trial division bound; larger cofactors must be prime.
FACTOR_LIMIT = 10 ** 6
#: Default numerator/denominator bound for rational points.
HEIGHT = 10 ** 4
#: Side of the square of ``(y, z)`` pairs scanned before the ternary solver.
SCAN_BOUND = 300


def _factor(n):
    '''
    Prime factorization of the nonzero integer ``n``.

    Raises
    ------
    PreconditionError
        If a cofactor above :data:`FACTOR_LIMIT` is composite.
    '''
    factors = factorint(abs(n), limit=FACTOR_LIMIT)
    for p in factors:
        if p > FACTOR_LIMIT and not isprime(p):
            raise PreconditionError('Cannot factor {} by trial division up to '
                                    '{}.'.format(n, FACTOR_LIMIT))
    return factors


def _integer_class(a):
    '''Integer in the square class of the nonzero rational ``a``.'''
    q = to_rational(a)
    if not q:
        raise SpecError('Hilbert symbol arguments must be nonzero.')
    return int(q.numerator) * int(q.denominator)


def _valuation(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def _parse_place(place):
    if place in (INFINITY, 'oo', 'infinity', math.inf):
        return INFINITY
    try:
        p = int(place)
    except (TypeError, ValueError):
        raise SpecError('Unknown place {!r}.'.format(place), 'place')
    if p < 2 or not isprime(p):
        raise SpecError('Place {} is neither a prime nor infinity.'
                        .format(place), 'place')
    return p


def hilbert_symbol(a, b, place):
    '''
    Hilbert symbol ``(a, b)_v`` of nonzero rationals.

    Parameters
    ----------
    a, b : int or rational
    place : int or str
        A prime ``p`` or ``'inf'`` for the real place.

    Returns
    -------
    int
        ``+1`` if ``z² = a·x² + b·y²`` has a nontrivial solution over the
        completion, else ``-1``.

    Examples
    --------
    >>> hilbert_symbol(-1, -1, 'inf')
    -1
    >>> hilbert_symbol(-1, 3, 3)
    -1
    >>> hilbert_symbol(-1, 2, 2)
    1
    '''
    place = _parse_place(place)
    a, b = _integer_class(a), _integer_class(b)
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = place
    alpha, u = _valuation(a, p)
    beta, v = _valuation(b, p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return (sign * legendre(u, p) ** (beta % 2) *
            legendre(v, p) ** (alpha % 2))


class HilbertVector(object):
    '''
    Local invariants of the quaternion algebra ``(a, b)_Q``.

    Attributes
    ----------
    symbols : OrderedDict
        Place → ``±1`` over the support: the primes dividing
        ``2·a·b`` (integer square-class representatives) and ``'inf'``.
        Places outside the support have symbol ``+1``.
    '''
    def __init__(self, a, b, symbols):
        self.a = a
        self.b = b
        self.symbols = symbols

    def __getitem__(self, place):
        return self.symbols.get(_parse_place(place), 1)

    @property
    def ramified(self):
        return [v for v, s in self.symbols.items() if s == -1]

    @property
    def split(self):
        return not self.ramified

    @property
    def reciprocity(self):
        product = 1
        for s in self.symbols.values():
            product *= s
        return product == 1

    def to_dict(self):
        return OrderedDict((str(v), s) for v, s in self.symbols.items())

    def __repr__(self):
        return '<HilbertVector ({}, {}) ramified at {}>'.format(
            format_rational(self.a), format_rational(self.b),
            self.ramified or 'no place')


def quaternion_class(a, b):
    '''
    Hilbert symbols of ``(a, b)`` at every place of the support.

    Raises
    ------
    InternalError
        If the symbols violate reciprocity.
    '''
    a_int, b_int = _integer_class(a), _integer_class(b)
    primes = sorted(set(_factor(2 * a_int * b_int)))
    symbols = OrderedDict((p, hilbert_symbol(a_int, b_int, p))
                          for p in primes)
    symbols[INFINITY] = hilbert_symbol(a_int, b_int, INFINITY)
    vector = HilbertVector(to_rational(a), to_rational(b), symbols)
    if not vector.reciprocity:
        raise InternalError('Hilbert symbols of ({}, {}) violate reciprocity: '
                            '{}'.format(a, b, dict(symbols)))
    return vector


def is_local_norm(d, target):
    '''``target`` is a norm from ``Q(√d)`` at every place (Hasse).'''
    return quaternion_class(target, d).split


def pell_criterion(d):
    '''
    ``d > 0`` and every odd prime ``p | d`` has ``p ≡ 1 (mod 4)`` (``d``
    reduced to its squarefree kernel).
    '''
    d = squarefree_kernel(int(d))
    if d <= 0:
        return False
    return all(p % 4 == 1 for p in _factor(d) if p != 2)


NormCertificate = namedtuple('NormCertificate', ['x', 'y'])


def _check_certificate(d, target, x, y):
    return x * x - d * y * y == target


def find_norm_certificate(d, target, height=HEIGHT):
    '''
    Rational ``(x, y)`` with ``x² − d·y² = target`` and numerators and
    denominators bounded by ``height``.

    Pairs ``(y, z)`` with ``y, z ≤ min(height, 300)`` are scanned first
    (``x = sqrt(t·z² + d·y²)/z``); on a miss the ternary form
    ``X² − d·Y² − t·Z² = 0`` goes to
    :func:`sympy.solvers.diophantine.diophantine.diop_ternary_quadratic_normal`.

    Returns
    -------
    NormCertificate or None
    '''
    d = int(d)
    target = to_rational(target)
    if target.denominator != 1:
        # x² − d·y² = p/q  ⇔  (qx)² − d·(qy)² = p·q
        scaled = find_norm_certificate(d, target.numerator *
                                       target.denominator, height)
        if scaled is None:
            return None
        return NormCertificate(scaled.x / target.denominator,
                               scaled.y / target.denominator)
    t = int(target)
    bound = min(height, SCAN_BOUND)
    for z in range(1, bound + 1):
        for y in range(0, bound + 1):
            value = t * z * z + d * y * y
            if value < 0:
                continue
            x = math.isqrt(value)
            if x * x == value and math.gcd(math.gcd(x, y), z) == 1:
                certificate = NormCertificate(QQ(x, z), QQ(y, z))
                logger.debug('Norm certificate for %d on %s: %s', t, d,
                             certificate)
                return certificate
    X, Y, Z = (Symbol('X', integer=True), Symbol('Y', integer=True),
               Symbol('Z', integer=True))
    try:
        solution = diop_ternary_quadratic_normal(X ** 2 - d * Y ** 2 -
                                                 t * Z ** 2)
    except (ValueError, NotImplementedError, TypeError) as exception:
        logger.debug('Ternary solver failed: %s', exception)
        return None
    if solution is None or None in solution or not solution[2]:
        return None
    x, y, z = (int(v) for v in solution)
    certificate = NormCertificate(QQ(x, z), QQ(y, z))
    if max(abs(certificate.x.numerator), abs(certificate.y.numerator),
           certificate.x.denominator, certificate.y.denominator) > height:
        logger.warning('Solution %s exceeds height %d.', certificate, height)
        return None
    if not _check_certificate(d, t, certificate.x, certificate.y):
        raise InternalError('Ternary solver returned a non-solution {}.'
                            .format(solution))
    return certificate


NormReport = namedtuple('NormReport', ['d', 'target', 'solvable', 'symbols',
                                       'obstruction', 'certificate',
                                       'criterion'])


def norm_equation(d, target=-1, height=HEIGHT):
    '''
    Decide rational solvability of ``x² − d·y² = target`` by Hilbert
    symbols ``(target, d)_v`` and look for a certificate.

    Returns
    -------
    NormReport
        ``obstruction`` is the least ramified place (``None`` when
        solvable); ``criterion`` is :func:`pell_criterion` for target
        ``-1`` (``None`` otherwise).
    '''
    d = squarefree_kernel(int(d))
    target = to_rational(target)
    vector = quaternion_class(target, d)
    solvable = vector.split
    certificate = None
    if solvable:
        certificate = find_norm_certificate(d, target, height)
        if certificate is None:
            logger.warning('No certificate for x^2 - %d y^2 = %s within height '
                           '%d; solvability rests on local symbols.', d,
                           format_rational(target), height)
    criterion = pell_criterion(d) if target == -1 else None
    if criterion is not None and criterion != solvable:
        raise InternalError('Pell criterion and Hilbert symbols disagree for '
                            'd = {}.'.format(d))
    obstruction = None if solvable else vector.ramified[0]
    return NormReport(d, target, solvable, vector, obstruction, certificate,
                      criterion)


def negative_pell(d, height=HEIGHT):
    ''':func:`norm_equation` with target ``-1``.'''
    return norm_equation(d, -1, height)
