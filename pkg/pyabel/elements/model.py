"""
Elements of the single-atom model groups: Z, Q, Q/Z, Z(p^inf) and Z/m.

Q/Z and Prüfer elements are stored by their representative in [0, 1), which makes equality
structural. A Prüfer element a/p^k always carries the minimal exponent k.
"""

import logging
from fractions import Fraction
from math import gcd

from pyabel.arith import INFINITE_ORDER, ONE, Cardinal, OrderValue, check_prime, valuation
from pyabel.errors import NoElementModel, NoSolution, NotTorsionFree
from pyabel.lang import QMODZ, Kind, Q, Z, cyclic, prufer
from pyabel.settings import resolve

from .base import Division, GroupElement

log = logging.getLogger(__name__)


def listing(count, solutions, settings):
    """
    Materializes at most ``enum_bound`` solutions out of an iterable of ``count``.
    """
    bound = resolve(settings).enum_bound
    if count > bound:
        log.info("listing one of %s solutions (enum bound %s)", count, bound)
        return Division([next(iter(solutions))], Cardinal.finite(count), True)
    return Division(list(solutions), Cardinal.finite(count))


def mod_one(value):
    value = Fraction(value)
    return value - (value.numerator // value.denominator)


class IntegerElement(GroupElement):
    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError("{} is not an integer.".format(value))
            value = value.numerator
        object.__setattr__(self, "value", int(value))

    group = property(lambda self: Z)

    def _key(self):
        return (self.value,)

    def __repr__(self):
        return "IntegerElement({})".format(self.value)

    def zero(self):
        return IntegerElement(0)

    def _add(self, other):
        return IntegerElement(self.value + other.value)

    def scale(self, n):
        return IntegerElement(self.value * int(n))

    def order(self):
        return OrderValue(1) if self.value == 0 else INFINITE_ORDER

    def divide(self, n, settings=None):
        if self.value % n:
            raise NoSolution("{} is not divisible by {} in Z".format(self.value, n))
        return Division([IntegerElement(self.value // n)], ONE)

    def rational_scale(self, r):
        scaled = Fraction(r) * self.value
        if scaled.denominator != 1:
            raise NoSolution("{}·{} is not an integer".format(r, self.value))
        return IntegerElement(scaled.numerator)


class RationalElement(GroupElement):
    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", Fraction(value))

    group = property(lambda self: Q)

    def _key(self):
        return (self.value,)

    def __repr__(self):
        return "RationalElement({})".format(self.value)

    def zero(self):
        return RationalElement(0)

    def _add(self, other):
        return RationalElement(self.value + other.value)

    def scale(self, n):
        return RationalElement(self.value * int(n))

    def order(self):
        return OrderValue(1) if self.value == 0 else INFINITE_ORDER

    def divide(self, n, settings=None):
        # Q is torsion-free, so n*y = x has exactly one solution.
        return Division([RationalElement(self.value / n)], ONE)

    def rational_scale(self, r):
        return RationalElement(self.value * Fraction(r))


class RationalModOne(GroupElement):
    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", mod_one(value))

    group = property(lambda self: QMODZ)

    def _key(self):
        return (self.value,)

    def __repr__(self):
        return "RationalModOne({})".format(self.value)

    def zero(self):
        return RationalModOne(0)

    def _add(self, other):
        return RationalModOne(self.value + other.value)

    def scale(self, n):
        return RationalModOne(self.value * int(n))

    def order(self):
        return OrderValue(self.value.denominator)

    def divide(self, n, settings=None):
        solutions = (RationalModOne((self.value + j) / n) for j in range(n))
        return listing(n, solutions, settings)

    def rational_scale(self, r):
        raise NotTorsionFree("Q/Z has torsion; (1/n)x is not well-defined")


class PruferElement(GroupElement):
    """
    The element a/p^k of Z(p^inf). The generator c_n is ``PruferElement.generator(p, n)`` = 1/p^n,
    so that ``p * c_(n+1) == c_n``.
    """

    __slots__ = ("p", "value")

    def __init__(self, p, value):
        p = check_prime(p)
        value = mod_one(value)
        d = value.denominator
        if d != p ** valuation(d, p):
            raise ValueError("{} does not have a power of {} as denominator.".format(value, p))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value)

    @classmethod
    def generator(cls, p, n):
        return cls(p, Fraction(1, p**n))

    group = property(lambda self: prufer(self.p))
    a = property(lambda self: self.value.numerator)
    k = property(lambda self: valuation(self.value.denominator, self.p))

    def _key(self):
        return (self.p, self.value)

    def __repr__(self):
        return "PruferElement({}, {})".format(self.p, self.value)

    def zero(self):
        return PruferElement(self.p, 0)

    def _add(self, other):
        return PruferElement(self.p, self.value + other.value)

    def scale(self, n):
        return PruferElement(self.p, self.value * int(n))

    def order(self):
        return OrderValue(self.value.denominator)

    def divide(self, n, settings=None):
        p = self.p
        v = valuation(n, p)
        u = n // p**v
        pk = self.value.denominator
        # u is invertible on Z(p^inf); what remains is division by p^v, which has p^v solutions.
        base = (self.a * pow(u, -1, pk)) % pk
        solutions = (PruferElement(p, Fraction(base + j * pk, pk * p**v)) for j in range(p**v))
        return listing(p**v, solutions, settings)

    def chain_lift(self, k=1):
        numerator = self.a if self.a else 1
        return PruferElement(self.p, Fraction(numerator, self.value.denominator * self.p ** int(k)))

    def rational_scale(self, r):
        raise NotTorsionFree("Z({}^inf) has torsion; (1/n)x is not well-defined".format(self.p))


class CyclicElement(GroupElement):
    __slots__ = ("m", "r")

    def __init__(self, m, r):
        m = int(m)
        if m < 1:
            raise ValueError("Cyclic modulus must be at least 1 (got {}).".format(m))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "r", int(r) % m)

    group = property(lambda self: cyclic(self.m))

    def _key(self):
        return (self.m, self.r)

    def __repr__(self):
        return "CyclicElement({}, {})".format(self.m, self.r)

    def zero(self):
        return CyclicElement(self.m, 0)

    def _add(self, other):
        return CyclicElement(self.m, self.r + other.r)

    def scale(self, n):
        return CyclicElement(self.m, self.r * int(n))

    def order(self):
        return OrderValue(self.m // gcd(self.r, self.m))

    def divide(self, n, settings=None):
        m = self.m
        g = gcd(n, m)
        if self.r % g:
            raise NoSolution("{} is not divisible by {} in Z/{}".format(self.r, n, m))
        step = m // g
        base = ((self.r // g) * pow(n // g, -1, step)) % step
        solutions = (CyclicElement(m, base + t * step) for t in range(g))
        return listing(g, solutions, settings)

    def rational_scale(self, r):
        raise NotTorsionFree("Z/{} has torsion; (1/n)x is not well-defined".format(self.m))


def zero_of(atom):
    """
    The identity element of a single model atom.
    """
    if atom.kind == Kind.Z:
        return IntegerElement(0)
    if atom.kind == Kind.Q:
        return RationalElement(0)
    if atom.kind == Kind.QMODZ:
        return RationalModOne(0)
    if atom.kind == Kind.PRUFER:
        return PruferElement(atom.param, 0)
    if atom.kind == Kind.CYCLIC:
        return CyclicElement(atom.param, 0)
    raise NoElementModel(atom)


def kernel_size(atom, n):
    """
    Number of solutions of n*y = 0 in the atom, i.e. the size of its n-torsion.
    """
    if atom.kind == Kind.QMODZ:
        return n
    if atom.kind == Kind.PRUFER:
        return atom.param ** valuation(n, atom.param)
    if atom.kind == Kind.CYCLIC:
        return gcd(n, atom.param)
    return 1
