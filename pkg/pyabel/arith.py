"""
Exact integer and cardinal arithmetic shared by every other module.

Integers are plain Python ints and rationals are ``fractions.Fraction``; both are exact and
unbounded. Number theory (Bezout coefficients, factorization, primality) goes through sympy.
"""

import enum
import functools
import logging
from collections import namedtuple

from sympy import factorint, isprime, multiplicity

try:
    from sympy.core.intfunc import igcdex
except ImportError:
    # sympy < 1.13
    from sympy.core.numbers import igcdex

from .errors import BoundExceeded
from .settings import resolve

log = logging.getLogger(__name__)


def ext_gcd(a, b):
    """
    Returns ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``.
    """
    a = int(a)
    b = int(b)
    if a == 0 and b == 0:
        return 0, 0, 0
    x, y, g = igcdex(a, b)
    return int(g), int(x), int(y)


def ext_gcd_multi(values):
    """
    Folds ``ext_gcd`` over a non-empty list: returns ``(g, coeffs)`` with
    ``sum(c * v for c, v in zip(coeffs, values)) == g``.
    """
    values = [int(v) for v in values]
    if not values:
        raise ValueError("ext_gcd_multi needs at least one value.")
    g = abs(values[0])
    coeffs = [-1 if values[0] < 0 else 1]
    for value in values[1:]:
        g, x, y = ext_gcd(g, value)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
    return g, coeffs


class Factorization(namedtuple("Factorization", ("pairs",))):
    __slots__ = ()

    @property
    def primes(self):
        return [p for p, _ in self.pairs]

    @property
    def value(self):
        n = 1
        for p, r in self.pairs:
            n *= p**r
        return n

    def prime_powers(self):
        return [(p, p**r) for p, r in self.pairs]


def factorize(n, settings=None):
    n = int(n)
    if n < 1:
        raise ValueError("Can only factor positive integers (got {}).".format(n))
    bound = resolve(settings).factor_bound
    if n > bound:
        log.info("refusing to factor %s above bound %s", n, bound)
        raise BoundExceeded(n, bound, what="integer")
    return Factorization(tuple((int(p), int(r)) for p, r in sorted(factorint(n).items())))


def is_squarefree(n, settings=None):
    return all(r == 1 for _, r in factorize(n, settings=settings).pairs)


def valuation(n, p):
    n = abs(int(n))
    if n == 0:
        raise ValueError("0 has infinite valuation")
    return int(multiplicity(p, n))


def check_prime(p):
    p = int(p)
    if not isprime(p):
        raise ValueError("{} is not prime.".format(p))
    return p


class CardinalKind(enum.IntEnum):
    FINITE = 0
    ALEPH0 = 1
    CONTINUUM = 2


@functools.total_ordering
class Cardinal:
    """
    A finite cardinal, aleph-null, or the continuum 2^aleph0.
    """

    __slots__ = ("kind", "k")

    def __init__(self, kind=CardinalKind.FINITE, k=0):
        kind = CardinalKind(kind)
        if kind == CardinalKind.FINITE:
            k = int(k)
            if k < 0:
                raise ValueError("Finite cardinals are non-negative (got {}).".format(k))
        else:
            k = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("Cardinal is immutable")

    @classmethod
    def finite(cls, k):
        return cls(CardinalKind.FINITE, k)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Cardinal):
            return value
        if isinstance(value, bool):
            raise TypeError("Cannot use a bool as a cardinal.")
        if isinstance(value, int):
            return cls.finite(value)
        raise TypeError("Cannot convert {!r} to a cardinal.".format(value))

    @property
    def is_finite(self):
        return self.kind == CardinalKind.FINITE

    @property
    def is_zero(self):
        return self.kind == CardinalKind.FINITE and self.k == 0

    def _key(self):
        return (int(self.kind), self.k or 0)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Cardinal.finite(other) if other >= 0 else None
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        other = Cardinal.coerce(other)
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if self.is_finite:
            return "Finite({})".format(self.k)
        return "Aleph0" if self.kind == CardinalKind.ALEPH0 else "Continuum"

    def __str__(self):
        if self.is_finite:
            return str(self.k)
        return "aleph0" if self.kind == CardinalKind.ALEPH0 else "c"

    def __add__(self, other):
        return card_add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        return card_mul(self, other)

    __rmul__ = __mul__

    def to_json(self):
        if self.is_finite:
            return {"finite": self.k}
        return "aleph0" if self.kind == CardinalKind.ALEPH0 else "continuum"


ZERO = Cardinal.finite(0)
ONE = Cardinal.finite(1)
ALEPH0 = Cardinal(CardinalKind.ALEPH0)
CONTINUUM = Cardinal(CardinalKind.CONTINUUM)


def card_add(a, b):
    a = Cardinal.coerce(a)
    b = Cardinal.coerce(b)
    if a.is_finite and b.is_finite:
        return Cardinal.finite(a.k + b.k)
    return max(a, b)


def card_mul(a, b):
    a = Cardinal.coerce(a)
    b = Cardinal.coerce(b)
    if a.is_zero or b.is_zero:
        return ZERO
    if a.is_finite and b.is_finite:
        return Cardinal.finite(a.k * b.k)
    return max(a, b)


def card_direct_power(size, mult):
    """
    Cardinality of the direct sum of ``mult`` copies of a group with ``size`` elements.
    Elements of a direct sum have finite support, so infinitely many copies of a finite
    non-trivial group have exactly as many elements as there are copies.
    """
    size = Cardinal.coerce(size)
    mult = Cardinal.coerce(mult)
    if size == ONE or mult.is_zero:
        return ONE
    if size.is_zero:
        raise ValueError("Groups have at least one element.")
    if size.is_finite and mult.is_finite:
        return Cardinal.finite(size.k**mult.k)
    return max(size, mult)


class OrderValue:
    """
    The order of a group element: ``OrderValue(k)`` for finite k >= 1, or ``INFINITE_ORDER``.
    """

    __slots__ = ("k",)

    def __init__(self, k=None):
        if k is not None:
            k = int(k)
            if k < 1:
                raise ValueError("Finite orders are positive (got {}).".format(k))
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("OrderValue is immutable")

    @property
    def is_finite(self):
        return self.k is not None

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.k == other
        if not isinstance(other, OrderValue):
            return NotImplemented
        return self.k == other.k

    def __hash__(self):
        return hash(("order", self.k))

    def __repr__(self):
        return "Fin({})".format(self.k) if self.is_finite else "Infinite"

    def __str__(self):
        return str(self.k) if self.is_finite else "infinite"

    def to_json(self):
        return {"finite": self.k} if self.is_finite else "infinite"


INFINITE_ORDER = OrderValue()
