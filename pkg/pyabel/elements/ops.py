from fractions import Fraction

from pyabel.settings import resolve

from .model import PruferElement


def elem_add(x, y):
    return x + y


def elem_smul(n, x):
    return x.scale(int(n))


def elem_order(x):
    return x.order()


def elem_divide(n, x, settings=None):
    """
    All y with n*y = x. Returns a ``Division``; ``truncated`` is set when only a canonical
    witness is listed. Raises ``NoSolution`` when x is not divisible by n.
    """
    n = int(n)
    if n < 1:
        raise ValueError("Can only divide by positive integers (got {}).".format(n))
    return x.divide(n, settings=settings)


def chain_lift(x, k=1):
    """
    The canonical y with p^k*y = x: same numerator, exponent raised by k.
    """
    if not isinstance(x, PruferElement):
        raise ValueError("chain_lift needs a Prüfer element (got {}).".format(x))
    k = int(k)
    if k < 1:
        raise ValueError("chain_lift needs k >= 1 (got {}).".format(k))
    return x.chain_lift(k)


def divisibility_chain(x, length=None, settings=None):
    """
    The chain a_1 = x, p*a_(j+1) = a_j embedding x into a copy of Z(p^inf).
    """
    length = resolve(settings).chain_length if length is None else int(length)
    chain = [x]
    while len(chain) < length:
        chain.append(chain_lift(chain[-1], 1))
    return chain


def rational_scale(r, x):
    return x.rational_scale(Fraction(r))


def in_socle(x, settings=None):
    return x.in_socle(settings=settings)


def identity_of(x):
    return x.zero()
