# coding: utf-8
'''
Exact arithmetic for the field tower ``K ⊂ L``.

Three kinds of extension are supported:

 - ``quadratic``: ``L = Q(√d)`` over ``K = Q``;
 - ``cyclotomic``: ``L = Q(ζ_n)`` over the fixed field ``K`` of a subgroup
   of ``(Z/nZ)^×``;
 - ``finite``: ``L = GF(p^k)`` over ``K = GF(p)``.

Elements are immutable and hashable.  Equal elements have identical stored
coordinates, so ``==`` is an exact comparison.
'''
from collections import OrderedDict
from fractions import Fraction
from itertools import product
import functools
import logging
import math
import re

from sympy import (QQ, ZZ, Symbol, S, cyclotomic_poly, factorint, isprime,
                   totient)
from sympy.ntheory import is_quadratic_residue
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)
from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import GF
from sympy.polys.euclidtools import dup_invert
from sympy.polys.galoistools import (gf_add, gf_gcdex, gf_irreducible_p,
                                     gf_mul, gf_neg, gf_pow_mod, gf_rem,
                                     gf_strip, gf_sub)
from sympy.polys.polyerrors import NotInvertible

from .errors import PreconditionError, SpecError, TowerMismatchError
from .linalg import prime_nullspace

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor, )
CRE_SQRT = re.compile(r'sqrt\(\s*([+-]?\d+)\s*\)')
CRE_ZETA = re.compile(r'zeta(\d+)')


def to_rational(value):
    '''
    Convert ``int``/``Fraction``/``QQ`` values to a ``QQ`` element.

    Raises
    ------
    TypeError
        If ``value`` is not rational.
    '''
    if isinstance(value, bool):
        raise TypeError(value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if QQ.of_type(value):
        return value
    if getattr(value, 'is_Rational', False):
        return QQ(int(value.p), int(value.q))
    raise TypeError('Not a rational: {!r}'.format(value))


def format_rational(q):
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return '{}/{}'.format(q.numerator, q.denominator)


def squarefree_kernel(d):
    '''Squarefree integer in the square class of the nonzero integer ``d``.'''
    if d == 0:
        raise SpecError('Quadratic seed must be nonzero.', 'd')
    kernel = 1
    for p, e in factorint(abs(d)).items():
        if e % 2:
            kernel *= p
    return kernel if d > 0 else -kernel


def units(n):
    '''Residues ``1 <= j <= n`` coprime to ``n`` (``(1, )`` for ``n <= 2``).'''
    if n <= 2:
        return (1, )
    return tuple(j for j in range(1, n) if math.gcd(j, n) == 1)


def unit_residue(j, n):
    '''Representative of ``j mod n`` in ``1..n``.'''
    return (j - 1) % n + 1


def legendre(a, p):
    '''
    Legendre symbol ``(a/p)`` for an odd prime ``p``.

    >>> [legendre(a, 7) for a in range(7)]
    [0, 1, 1, -1, 1, -1, -1]
    '''
    a %= p
    if a == 0:
        return 0
    return 1 if is_quadratic_residue(a, p) else -1


def _lcm(*values):
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v)
    return result


class FieldElement(object):
    '''Operator plumbing shared by all element types.'''
    __slots__ = ('field', )

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TowerMismatchError('Cannot combine elements of {} and '
                                         '{}.'.format(self.field, other.field))
            return other
        return self.field(other)

    def __add__(self, other):
        return self._add(self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._add(-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other)._add(-self)

    def __mul__(self, other):
        return self._mul(self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._mul(self._coerce(other).inverse())

    def __rtruediv__(self, other):
        return self._coerce(other)._mul(self.inverse())

    def __pow__(self, exponent):
        exponent = int(exponent)
        base = self if exponent >= 0 else self.inverse()
        result = self.field.one
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            exponent >>= 1
            if exponent:
                base = base._mul(base)
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, TowerMismatchError, ZeroDivisionError):
            return False
        return self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field.key, self.key))

    def __repr__(self):
        return '<{} {}>'.format(self.field, self)

    @property
    def is_zero(self):
        return self == self.field.zero

    @property
    def is_rational(self):
        return self.rational() is not None


class Field(object):
    characteristic = 0
    degree = 1
    prime_domain = QQ

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise TowerMismatchError('{} is not an element of {}.'
                                         .format(value, self))
            return value
        return self.from_rational(to_rational(value))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def from_coordinates(self, coordinates):
        total = self.zero
        for c, b in zip(coordinates, self.basis()):
            total = total + self.from_prime(c) * b
        return total

    def from_prime(self, c):
        if self.characteristic:
            return self(int(self.prime_domain.to_int(c)) % self.characteristic)
        return self(c)

    def parse(self, text):
        '''
        Parse a field element from its string form.

        Integers, rationals, ``+ - * / ^`` and the generator names of the
        field are understood (``sqrt(d)``, ``zetaN``, ``x``).

        Raises
        ------
        SpecError
            On syntax errors or unknown names.
        '''
        if isinstance(text, (int, float)) and not isinstance(text, bool):
            if isinstance(text, float) and not float(text).is_integer():
                raise SpecError('Floating point value {!r} is not exact.'
                                .format(text))
            return self(int(text))
        text = str(text).replace(u'ζ', 'zeta').replace(u'√', 'sqrt')
        text, names = self._prepare(text)
        local_dict = {name: Symbol(name) for name in names}
        try:
            expr = parse_expr(text, local_dict=local_dict,
                              transformations=TRANSFORMATIONS)
        except Exception as exception:
            raise SpecError('Cannot parse "{}": {}'.format(text, exception))
        return self._evaluate(expr, names)

    def _prepare(self, text):
        return text, {}

    def _evaluate(self, expr, names):
        if expr.is_Rational:
            return self(to_rational(expr))
        if expr is S.ImaginaryUnit and 'I' in names:
            return names['I']
        if expr.is_Symbol:
            if expr.name not in names:
                raise SpecError('Unknown name "{}" in element of {}.'
                                .format(expr.name, self))
            return names[expr.name]
        if expr.is_Add:
            total = self.zero
            for arg in expr.args:
                total = total + self._evaluate(arg, names)
            return total
        if expr.is_Mul:
            total = self.one
            for arg in expr.args:
                total = total * self._evaluate(arg, names)
            return total
        if expr.is_Pow and expr.exp.is_Integer:
            return self._evaluate(expr.base, names) ** int(expr.exp)
        raise SpecError('Unsupported expression "{}" for {}.'.format(expr,
                                                                     self))


# Quadratic fields #############################################################
class QuadraticNumber(FieldElement):
    '''``a + b·√d`` with rational ``a``, ``b``.'''
    __slots__ = ('a', 'b')

    def __init__(self, field, a, b):
        self.field = field
        self.a = to_rational(a)
        self.b = to_rational(b)

    @property
    def key(self):
        return (self.a, self.b)

    def _add(self, other):
        return QuadraticNumber(self.field, self.a + other.a, self.b + other.b)

    def __neg__(self):
        return QuadraticNumber(self.field, -self.a, -self.b)

    def _mul(self, other):
        d = self.field.d
        return QuadraticNumber(self.field,
                               self.a * other.a + d * self.b * other.b,
                               self.a * other.b + self.b * other.a)

    def conjugate(self):
        return QuadraticNumber(self.field, self.a, -self.b)

    def inverse(self):
        norm = self.a * self.a - self.field.d * self.b * self.b
        if not norm:
            raise ZeroDivisionError('Inverse of zero in {}.'.format(self.field))
        return QuadraticNumber(self.field, self.a / norm, -self.b / norm)

    def rational(self):
        return self.a if not self.b else None

    def __str__(self):
        root = 'sqrt({})'.format(self.field.d)
        if not self.b:
            return format_rational(self.a)
        if self.b == 1:
            irrational = root
        elif self.b == -1:
            irrational = '-' + root
        else:
            irrational = '{}*{}'.format(format_rational(self.b), root)
        if not self.a:
            return irrational
        sign = '' if irrational.startswith('-') else '+'
        return '{}{}{}'.format(format_rational(self.a), sign, irrational)


class QuadraticField(Field):
    '''
    ``Q(√d)``; ``d`` is reduced to its squarefree kernel on construction.
    '''
    degree = 2

    def __init__(self, d):
        self.d = squarefree_kernel(int(d))
        if self.d == 1:
            raise SpecError('Q(sqrt({})) is not a quadratic field.'.format(d),
                            'd')
        self.key = ('quadratic', self.d)

    def __str__(self):
        return 'Q(sqrt({}))'.format(self.d)

    def from_rational(self, q):
        return QuadraticNumber(self, q, 0)

    def element(self, a, b):
        return QuadraticNumber(self, a, b)

    @property
    def sqrt_d(self):
        return QuadraticNumber(self, 0, 1)

    def basis(self):
        return [self.one, self.sqrt_d]

    def coordinates(self, x):
        return [x.a, x.b]

    def _prepare(self, text):
        def replace(match):
            m = int(match.group(1))
            square = to_rational(m) / self.d
            t = math.isqrt(abs(square.numerator)) if square > 0 else None
            if t is None or t * t != square.numerator or \
                    square.denominator != 1:
                raise SpecError('sqrt({}) is not in {}.'.format(m, self))
            return '({}*SQRTD)'.format(t)

        names = {'SQRTD': self.sqrt_d}
        if self.d == -1:
            names['I'] = self.sqrt_d
        return CRE_SQRT.sub(replace, text), names

    @property
    def discriminant(self):
        return self.d if self.d % 4 == 1 else 4 * self.d

    def cyclotomic_root(self):
        '''
        ``√d`` as an element of ``Q(ζ_N)``, ``N = |discriminant|``.

        Built from quadratic Gauss sums of the odd primes dividing ``d``
        together with ``√-1 = ζ_4`` and ``√±2`` from ``ζ_8``.
        '''
        N = abs(self.discriminant)
        target = CyclotomicField(N)
        root = target.one
        odd_part = 1
        for p in factorint(abs(self.d)):
            if p == 2:
                continue
            source = CyclotomicField(p)
            gauss = source.zero
            for a in range(1, p):
                gauss = gauss + legendre(a, p) * source.zeta(a)
            root = root * target.lift(gauss)
            odd_part *= p if p % 4 == 1 else -p
        rest = self.d // odd_part
        if rest == -1:
            root = root * target.zeta(N // 4)
        elif rest in (2, -2):
            z8 = target.zeta(N // 8)
            root = root * (z8 + (z8 ** 7 if rest == 2 else z8 ** 3))
        if root * root != self.d:
            raise AssertionError('Gauss sum embedding failed for d={}'
                                 .format(self.d))
        return root


# Cyclotomic fields ############################################################
@functools.lru_cache(maxsize=None)
def _cyclotomic_modulus(n):
    coefficients = cyclotomic_poly(n, polys=True).all_coeffs()
    return tuple(QQ(int(c)) for c in coefficients)


def _reduce(coefficients, n):
    '''Reduce low-first coefficients modulo ``Φ_n`` to length ``φ(n)``.'''
    modulus = list(_cyclotomic_modulus(n))
    remainder = dup_rem(dup_strip(list(reversed(coefficients))), modulus,
                        QQ)
    phi = len(modulus) - 1
    low_first = list(reversed(remainder))
    return tuple(low_first + [QQ(0)] * (phi - len(low_first)))


class CyclotomicNumber(FieldElement):
    '''Element of ``Q(ζ_n)`` in the power basis ``1, ζ, …, ζ^{φ(n)-1}``.'''
    __slots__ = ('coeffs', )

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    @property
    def key(self):
        return self.coeffs

    def _add(self, other):
        return CyclotomicNumber(self.field, (a + b for a, b in
                                             zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CyclotomicNumber(self.field, (-a for a in self.coeffs))

    def _mul(self, other):
        product_ = dup_mul(dup_strip(list(reversed(self.coeffs))),
                           dup_strip(list(reversed(other.coeffs))), QQ)
        return CyclotomicNumber(self.field,
                                _reduce(list(reversed(product_)),
                                        self.field.n))

    def inverse(self):
        try:
            inverse = dup_invert(dup_strip(list(reversed(self.coeffs))),
                                 list(_cyclotomic_modulus(self.field.n)), QQ)
        except NotInvertible:
            raise ZeroDivisionError('Inverse of zero in {}.'.format(self.field))
        return CyclotomicNumber(self.field,
                                _reduce(list(reversed(inverse)), self.field.n))

    def rational(self):
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __str__(self):
        terms = []
        n = self.field.n
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(format_rational(c))
                continue
            power = 'zeta{}'.format(n) + ('^{}'.format(i) if i > 1 else '')
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append('-' + power)
            else:
                terms.append('{}*{}'.format(format_rational(c), power))
        if not terms:
            return '0'
        text = terms[0]
        for term in terms[1:]:
            text += term if term.startswith('-') else '+' + term
        return text


class CyclotomicField(Field):
    '''``Q(ζ_n)`` with ``ζ_n = exp(2πi/n)`` kept symbolic.'''

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise SpecError('Cyclotomic conductor must be positive.', 'n')
        self.n = n
        self.phi = int(totient(n))
        self.degree = self.phi
        self.key = ('cyclotomic', n)

    def __str__(self):
        return 'Q(zeta{})'.format(self.n)

    def from_rational(self, q):
        return CyclotomicNumber(self, (q, ) + (QQ(0), ) * (self.phi - 1))

    def from_exponents(self, coefficients):
        '''``Σ c_k ζ^k`` for a mapping or sequence ``k → c_k``.'''
        items = (coefficients.items() if isinstance(coefficients, dict)
                 else enumerate(coefficients))
        poly = [QQ(0)] * max(self.n, 1)
        for k, c in items:
            poly[k % self.n] += to_rational(c)
        return CyclotomicNumber(self, _reduce(poly, self.n))

    def zeta(self, k=1):
        return self.from_exponents({k: 1})

    def basis(self):
        return [self.zeta(i) for i in range(self.phi)]

    def coordinates(self, x):
        return list(x.coeffs)

    def galois(self, j, x):
        '''``σ_j: ζ ↦ ζ^j`` applied to ``x`` (``gcd(j, n) = 1``).'''
        if self.n <= 2:
            return x
        return self.from_exponents({i * j: c for i, c in enumerate(x.coeffs)
                                    if c})

    def lift(self, x):
        '''Embed ``x ∈ Q(ζ_m)`` for ``m | n`` via ``ζ_m ↦ ζ_n^{n/m}``.'''
        m = x.field.n
        if self.n % m:
            raise TowerMismatchError('{} does not contain {}.'
                                     .format(self, x.field))
        step = self.n // m
        return self.from_exponents({i * step: c for i, c in
                                    enumerate(x.coeffs) if c})

    def _prepare(self, text):
        names = {}
        for m in sorted(set(int(m) for m in CRE_ZETA.findall(text))):
            if m == 0 or self.n % m:
                raise SpecError('zeta{} is not in {}.'.format(m, self))
            names['zeta{}'.format(m)] = self.zeta(self.n // m)
        if self.n % 4 == 0:
            names['I'] = self.zeta(self.n // 4)
        return text, names


# Finite fields ################################################################
@functools.lru_cache(maxsize=None)
def least_irreducible(p, k):
    '''
    Lexicographically least monic irreducible of degree ``k`` over ``GF(p)``.

    Returns
    -------
    tuple
        Coefficients, highest degree first.
    '''
    for tail in product(range(p), repeat=k):
        candidate = [1] + list(tail)
        if gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise AssertionError('No irreducible of degree {} over GF({})'
                         .format(k, p))


class FiniteFieldElement(FieldElement):
    '''Polynomial of degree ``< k`` over ``Z/p`` modulo the field modulus.'''
    __slots__ = ('rep', )

    def __init__(self, field, rep):
        self.field = field
        rep = [int(c) % field.p for c in rep]
        self.rep = tuple(rep + [0] * (field.k - len(rep)))

    @classmethod
    def from_high_first(cls, field, coefficients):
        return cls(field, list(reversed(coefficients)))

    def _high_first(self):
        return gf_strip(list(reversed(self.rep)))

    @property
    def key(self):
        return self.rep

    def _add(self, other):
        return self.from_high_first(self.field,
                                    gf_add(self._high_first(),
                                           other._high_first(),
                                           self.field.p, ZZ))

    def __neg__(self):
        return self.from_high_first(self.field,
                                    gf_neg(self._high_first(), self.field.p,
                                           ZZ))

    def __sub__(self, other):
        other = self._coerce(other)
        return self.from_high_first(self.field,
                                    gf_sub(self._high_first(),
                                           other._high_first(),
                                           self.field.p, ZZ))

    def _mul(self, other):
        field = self.field
        result = gf_rem(gf_mul(self._high_first(), other._high_first(),
                               field.p, ZZ), list(field.modulus), field.p, ZZ)
        return self.from_high_first(field, result)

    def inverse(self):
        field = self.field
        if not any(self.rep):
            raise ZeroDivisionError('Inverse of zero in {}.'.format(field))
        s, _, h = gf_gcdex(self._high_first(), list(field.modulus), field.p,
                           ZZ)
        assert h == [1]
        return self.from_high_first(field, s)

    def frobenius(self, power=1):
        field = self.field
        exponent = field.p ** (power % field.k)
        result = gf_pow_mod(self._high_first(), exponent, list(field.modulus),
                            field.p, ZZ)
        return self.from_high_first(field, result)

    def rational(self):
        if any(self.rep[1:]):
            return None
        return QQ(self.rep[0])

    @property
    def index(self):
        '''Position of the element in :meth:`FiniteField.elements` order.'''
        return sum(c * self.field.p ** i for i, c in enumerate(self.rep))

    def __str__(self):
        terms = []
        for i in reversed(range(self.field.k)):
            c = self.rep[i]
            if not c:
                continue
            power = {0: '', 1: 'x'}.get(i, 'x^{}'.format(i))
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            else:
                terms.append('{}*{}'.format(c, power))
        return '+'.join(terms) if terms else '0'


class FiniteField(Field):
    '''``GF(p^k) = GF(p)[x]/(f)`` with ``f`` from :func:`least_irreducible`.'''

    def __init__(self, p, k=1):
        p, k = int(p), int(k)
        if not isprime(p):
            raise SpecError('Characteristic {} is not prime.'.format(p), 'p')
        if k < 1:
            raise SpecError('Extension degree must be positive.', 'k')
        self.p = p
        self.k = k
        self.characteristic = p
        self.degree = k
        self.order = p ** k
        self.modulus = least_irreducible(p, k)
        self.prime_domain = GF(p, symmetric=False)
        self.key = ('finite', p, k)

    def __str__(self):
        return 'GF({}^{})'.format(self.p, self.k) if self.k > 1 else \
            'GF({})'.format(self.p)

    def from_rational(self, q):
        if q.denominator % self.p == 0:
            raise ZeroDivisionError('{} is not defined in {}.'.format(q, self))
        value = q.numerator * pow(q.denominator, -1, self.p)
        return FiniteFieldElement(self, [value])

    @property
    def gen(self):
        if self.k == 1:
            return FiniteFieldElement(self, [-self.modulus[-1]])
        return FiniteFieldElement(self, [0, 1])

    def basis(self):
        return [FiniteFieldElement(self, [0] * i + [1]) for i in range(self.k)]

    def coordinates(self, x):
        return [self.prime_domain(c) for c in x.rep]

    def elements(self):
        '''All elements ordered by ``Σ rep_i p^i`` (0, 1, …, x, x+1, …).'''
        for m in range(self.order):
            digits = []
            for _ in range(self.k):
                m, digit = divmod(m, self.p)
                digits.append(digit)
            yield FiniteFieldElement(self, digits)

    def _prepare(self, text):
        return text, {'x': self.gen}


# Towers #######################################################################
class GaloisElement(object):
    '''
    Automorphism of the tower's ``L`` fixing ``K``.

    ``datum`` is the action data: ``±1`` (sign on ``√d``), the exponent ``j``
    of ``ζ ↦ ζ^j``, or the Frobenius power ``i`` of ``x ↦ x^{p^i}``.
    '''
    __slots__ = ('tower', 'index', 'datum')

    def __init__(self, tower, index, datum):
        self.tower = tower
        self.index = index
        self.datum = datum

    def __call__(self, x):
        return self.tower.apply(self, x)

    def __mul__(self, other):
        return self.tower.gamma[self.tower.compose(self.index, other.index)]

    def __eq__(self, other):
        return (isinstance(other, GaloisElement) and self.tower is other.tower
                and self.index == other.index)

    def __hash__(self):
        return hash((id(self.tower), self.index))

    def inverse(self):
        return self.tower.gamma[self.tower.inverse(self.index)]

    @property
    def order(self):
        return self.tower.order(self.index)

    @property
    def label(self):
        return self.tower.label(self.datum)

    def __repr__(self):
        return '<GaloisElement {}: {}>'.format(self.index, self.label)


class ValueAction(object):
    '''
    Cyclotomic model of ``L`` used to act on splitting-field character values.

    Attributes
    ----------
    conductor : int
        ``c`` such that character values and the embedded ``L`` live in
        ``Q(ζ_c)``.
    fixing : frozenset
        Residues ``j`` mod ``c`` with ``σ_j`` fixing ``L`` pointwise.
    lifts : tuple
        Residue lifting each element of ``Γ`` (indexed like ``tower.gamma``).
    embed : callable or None
        Embedding ``L → Q(ζ_c)`` (characteristic zero only).
    enlarged : bool
        ``True`` when ``fixing`` cuts out ``L(χ)`` for a character ``χ``
        rather than ``L`` itself.
    '''
    def __init__(self, conductor, fixing, lifts, embed=None, enlarged=False):
        self.conductor = conductor
        self.fixing = frozenset(fixing)
        self.lifts = tuple(lifts)
        self.embed = embed
        self.enlarged = enlarged
        self.field = CyclotomicField(conductor)

    def closure(self, generators):
        '''Subgroup of ``(Z/cZ)^×`` generated by ``generators``.'''
        c = self.conductor
        elements = {unit_residue(1, c)}
        frontier = list(elements)
        while frontier:
            a = frontier.pop()
            for g in generators:
                b = unit_residue(a * g, c)
                if b not in elements:
                    elements.add(b)
                    frontier.append(b)
        return frozenset(elements)

    @property
    def base_fixing(self):
        '''Residues fixing ``K``: generated by ``fixing`` and the lifts.'''
        return self.closure(tuple(self.fixing) + self.lifts)


class FieldTower(object):
    '''
    Galois extension ``L/K`` with explicit group ``Γ = Gal(L/K)``.

    Subclasses provide ``_apply``, ``_compose`` and the value model.
    ``gamma[0]`` is always the identity.
    '''
    kind = None
    archimedean = False

    def __init__(self, field, data):
        self.L = field
        self.gamma = tuple(GaloisElement(self, i, datum)
                           for i, datum in enumerate(data))
        index = {datum: i for i, datum in enumerate(data)}
        try:
            self._mul = [[index[self._compose(a, b)] for b in data]
                         for a in data]
        except KeyError:
            raise SpecError('Galois elements are not closed under '
                            'composition.', 'subgroup')
        self._inv = [row.index(0) for row in self._mul]
        self._base_degree = None

    def __repr__(self):
        return '<{} {} over {}>'.format(type(self).__name__, self.L,
                                        self.describe_base())

    @property
    def degree(self):
        '''``[L:K] = |Γ|``.'''
        return len(self.gamma)

    def compose(self, i, j):
        return self._mul[i][j]

    def inverse(self, i):
        return self._inv[i]

    def order(self, i):
        k, j = 1, i
        while j != 0:
            j = self._mul[j][i]
            k += 1
        return k

    def power(self, i, k):
        result = 0
        for _ in range(k % self.degree if self.degree else 0):
            result = self._mul[result][i]
        return result

    def closure(self, indices):
        elements = {0}
        frontier = [0]
        while frontier:
            a = frontier.pop()
            for g in indices:
                b = self._mul[a][g]
                if b not in elements:
                    elements.add(b)
                    frontier.append(b)
        return sorted(elements)

    @property
    def is_cyclic(self):
        return any(self.order(i) == self.degree
                   for i in range(self.degree))

    def generator(self):
        '''Least-index generator of a cyclic ``Γ``.'''
        for i in range(self.degree):
            if self.order(i) == self.degree:
                return i
        return None

    def check(self, x):
        if not isinstance(x, FieldElement) or x.field != self.L:
            raise TowerMismatchError('{!r} is not an element of {}.'
                                     .format(x, self.L))
        return x

    def apply(self, g, x):
        if isinstance(g, GaloisElement):
            if g.tower is not self:
                raise TowerMismatchError('Galois element belongs to another '
                                         'tower.')
            g = g.index
        return self._apply(self.gamma[g].datum, self.check(x))

    def norm(self, x):
        '''``N_{L/K}(x) = ∏_{γ ∈ Γ} γ(x)``.'''
        self.check(x)
        result = self.L.one
        for g in self.gamma:
            result = result * self.apply(g, x)
        return result

    def action_matrix(self, g):
        '''Prime-field matrix of ``γ`` (columns are images of the basis).'''
        columns = [self.L.coordinates(self.apply(g, b))
                   for b in self.L.basis()]
        return [list(row) for row in zip(*columns)]

    def _fixed_vectors(self, indices):
        domain = self.L.prime_domain
        n = self.L.degree
        rows = []
        for g in self.closure(indices):
            if g == 0:
                continue
            matrix = self.action_matrix(g)
            for r in range(n):
                rows.append([matrix[r][c] - (domain.one if r == c else
                                              domain.zero) for c in range(n)])
        return prime_nullspace(rows, n, domain)

    @property
    def base_degree(self):
        '''``[K:P]`` for the prime field ``P``.'''
        if self._base_degree is None:
            self._base_degree = len(self._fixed_vectors(range(self.degree)))
        return self._base_degree

    def base_basis(self):
        '''Prime-field basis of ``K`` as elements of ``L``.'''
        return [self.L.from_coordinates(v)
                for v in self._fixed_vectors(range(self.degree))]

    def fixed_subfield_dimension(self, subset):
        '''
        ``K``-dimension of the subfield of ``L`` fixed by ``subset``.

        Parameters
        ----------
        subset : list
            :class:`GaloisElement` instances or indices; the generated
            subgroup is used.

        Returns
        -------
        int
            Prime-field nullity of the fixed-point system divided by
            ``[K:P]``.
        '''
        indices = [g.index if isinstance(g, GaloisElement) else int(g)
                   for g in subset]
        return len(self._fixed_vectors(indices)) // self.base_degree

    @property
    def rational_base(self):
        '''``True`` when ``K = Q``.'''
        return self.L.characteristic == 0 and self.base_degree == 1

    def as_quadratic(self):
        '''``d`` when ``L = Q(√d)`` over ``K = Q``, else ``None``.'''
        return None

    @property
    def is_real(self):
        return False

    def describe_base(self):
        raise NotImplementedError

    def epsilon(self, n):
        '''
        The embedding ``ε: Γ → (Z/nZ)^×`` from the action on ``ζ_n``.

        Raises
        ------
        UnsupportedError
            Unless ``μ_n ⊂ L`` and ``Γ`` acts faithfully on ``ζ_n``
            (equivalently ``L = K(μ_n)``).
        '''
        raise PreconditionError('{} is not of the form K(mu_{}).'
                                .format(self, n))

    def _check_faithful(self, eps, n):
        if len(set(eps)) != self.degree:
            raise PreconditionError('Gamma does not act faithfully on mu_{}, '
                                    'so L != K(mu_{}).'.format(n, n))
        return tuple(eps)

    def value_action(self, e):
        raise NotImplementedError

    def parse(self, text):
        return self.L.parse(text)


class QuadraticTower(FieldTower):
    kind = 'quadratic'

    def __init__(self, d):
        super(QuadraticTower, self).__init__(QuadraticField(d), (1, -1))
        self.d = self.L.d

    @staticmethod
    def _compose(a, b):
        return a * b

    @staticmethod
    def _apply(datum, x):
        return x if datum == 1 else x.conjugate()

    @staticmethod
    def label(datum):
        return 'id' if datum == 1 else 'conj'

    def as_quadratic(self):
        return self.d

    @property
    def is_real(self):
        return self.d > 0

    def describe_base(self):
        return 'Q'

    def to_spec(self):
        return OrderedDict([('kind', self.kind), ('d', self.d)])

    def epsilon(self, n):
        if self.d == -3 and n in (3, 6) or self.d == -1 and n == 4:
            return self._check_faithful((1, n - 1), n)
        return super(QuadraticTower, self).epsilon(n)

    def value_action(self, e):
        root = self.L.cyclotomic_root()
        N = root.field.n
        c = _lcm(e, N)
        sign = {}
        for j in units(N):
            image = root.field.galois(j, root)
            sign[j] = 1 if image == root else -1
        fixing = [j for j in units(c) if sign[unit_residue(j, N)] == 1]
        moving = [j for j in units(c) if sign[unit_residue(j, N)] == -1]
        target = CyclotomicField(c)
        lifted_root = target.lift(root)

        def embed(x):
            return lifted_root * x.b + x.a

        return ValueAction(c, fixing, (1, moving[0]), embed)


class CyclotomicTower(FieldTower):
    '''
    ``L = Q(ζ_n)`` over the fixed field of the subgroup generated by
    ``subgroup``.

    With ``archimedean=True`` the tower carries formal ``C/R`` semantics:
    ``L`` plays ``C`` and the nontrivial element of ``Γ = {1, n-1}`` plays
    complex conjugation.
    '''
    kind = 'cyclotomic'

    def __init__(self, n, subgroup=(1, ), archimedean=False):
        field = CyclotomicField(n)
        n = field.n
        generators = []
        for j in subgroup:
            j = int(j)
            if math.gcd(j, n) != 1:
                raise SpecError('Exponent {} is not a unit mod {}.'
                                .format(j, n), 'subgroup')
            generators.append(unit_residue(j, n))
        elements = {1}
        frontier = [1]
        while frontier:
            a = frontier.pop()
            for g in generators:
                b = unit_residue(a * g, n)
                if b not in elements:
                    elements.add(b)
                    frontier.append(b)
        self.n = n
        super(CyclotomicTower, self).__init__(field, sorted(elements))
        self.archimedean = bool(archimedean)
        if self.archimedean and (n <= 2 or sorted(elements) != [1, n - 1]):
            raise SpecError('Archimedean semantics need Gamma = {{1, {}}}.'
                            .format(n - 1), 'archimedean')

    def _compose(self, a, b):
        return unit_residue(a * b, self.n)

    def _apply(self, datum, x):
        return self.L.galois(datum, x)

    def label(self, datum):
        return 'id' if datum == 1 else 'zeta->zeta^{}'.format(datum)

    @property
    def exponents(self):
        return [g.datum for g in self.gamma]

    def as_quadratic(self):
        if self.degree == 2 and self.L.degree == 2:
            return {3: -3, 4: -1, 6: -3}[self.n]
        return None

    @property
    def is_real(self):
        return self.n <= 2

    def describe_base(self):
        if self.degree == 1:
            return str(self.L)
        if self.base_degree == 1:
            return 'Q'
        return 'Q(zeta{})^<{}>'.format(self.n, ','.join(map(str,
                                                             self.exponents)))

    def to_spec(self):
        spec = OrderedDict([('kind', self.kind), ('n', self.n),
                            ('subgroup', self.exponents)])
        if self.archimedean:
            spec['archimedean'] = True
        return spec

    def epsilon(self, n):
        if self.n % n:
            return super(CyclotomicTower, self).epsilon(n)
        return self._check_faithful([unit_residue(j, n) for j in
                                     self.exponents], n)

    def value_action(self, e):
        c = _lcm(self.n, e)
        target = CyclotomicField(c)
        if self.archimedean:
            return ValueAction(c, (1, ), (1, c - 1) if c > 2 else (1, 1),
                               target.lift)
        fixing = [j for j in units(c) if unit_residue(j, self.n) == 1]
        lifts = []
        for j in self.exponents:
            lifts.append(min(k for k in units(c)
                             if unit_residue(k, self.n) == j))
        return ValueAction(c, fixing, lifts, target.lift)


class FiniteTower(FieldTower):
    kind = 'finite'

    def __init__(self, p, k):
        field = FiniteField(p, k)
        self.p, self.k = field.p, field.k
        super(FiniteTower, self).__init__(field, tuple(range(field.k)))

    def _compose(self, a, b):
        return (a + b) % self.k

    @staticmethod
    def _apply(datum, x):
        return x.frobenius(datum) if datum else x

    @staticmethod
    def label(datum):
        return {0: 'id', 1: 'frob'}.get(datum, 'frob^{}'.format(datum))

    def describe_base(self):
        return 'GF({})'.format(self.p)

    def to_spec(self):
        return OrderedDict([('kind', self.kind), ('p', self.p),
                            ('k', self.k)])

    def epsilon(self, n):
        if n % self.p == 0 or (self.p ** self.k - 1) % n:
            return super(FiniteTower, self).epsilon(n)
        return self._check_faithful([unit_residue(self.p ** i, n)
                                     for i in range(self.k)], n)

    def value_action(self, e):
        if e % self.p == 0:
            raise PreconditionError('Characteristic {} divides the exponent '
                                    '{} of H.'.format(self.p, e))
        c = max(e, 1)
        q = unit_residue(self.p ** self.k, c)
        fixing = ValueAction(c, (), ()).closure((q, ))
        lifts = [unit_residue(self.p ** i, c) for i in range(self.k)]
        return ValueAction(c, fixing, lifts)


def tower_from_spec(spec):
    '''
    Build a :class:`FieldTower` from its JSON/YAML description.

    Examples
    --------
    >>> tower_from_spec({'kind': 'quadratic', 'd': -3}).degree
    2

    Raises
    ------
    SpecError
        On unknown kinds or missing/invalid fields.
    '''
    if not isinstance(spec, dict) or 'kind' not in spec:
        raise SpecError('Tower spec must be a mapping with a "kind".', 'kind')
    kind = spec['kind']
    try:
        if kind == 'quadratic':
            return QuadraticTower(int(spec['d']))
        elif kind == 'cyclotomic':
            return CyclotomicTower(int(spec['n']), spec.get('subgroup', [1]),
                                   archimedean=spec.get('archimedean', False))
        elif kind == 'finite':
            return FiniteTower(int(spec['p']), int(spec.get('k', 1)))
    except KeyError as exception:
        raise SpecError('Missing field for {} tower.'.format(kind),
                        exception.args[0])
    except (TypeError, ValueError) as exception:
        if isinstance(exception, SpecError):
            raise
        raise SpecError(str(exception), 'tower')
    raise SpecError('Unknown tower kind "{}".'.format(kind), 'kind')


def galois_apply(g, x):
    '''
    Apply the Galois element ``g`` to ``x``.

    Raises
    ------
    TowerMismatchError
        If ``x`` does not lie in ``g``'s tower.
    '''
    return g.tower.apply(g, x)


def norm_L_over_K(tower, x):
    '''``N_{L/K}(x)``; the result is fixed by every element of ``Γ``.'''
    return tower.norm(x)


def fixed_subfield_dimension(subset):
    if not subset:
        raise ValueError('Subset must contain at least the identity.')
    return subset[0].tower.fixed_subfield_dimension(subset)
