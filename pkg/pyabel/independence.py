"""
Linear independence of finite systems of elements.

A system {a_i} is independent when sum(m_i * a_i) = 0 forces every term m_i * a_i to vanish.
Only finite systems can be checked. For torsion elements the definition is decided by brute
force over all coefficient tuples; for torsion-free elements it coincides with independence of
vectors over Q and is decided by exact elimination.
"""

import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from sympy import Matrix, Rational

from .errors import BoundExceeded, DimensionMismatch, InfiniteOrder, UnsupportedMix
from .elements import IntegerElement, RationalElement, SumElement
from .settings import resolve

log = logging.getLogger(__name__)

IndependenceVerdict = namedtuple("IndependenceVerdict", ("independent", "certificate"), defaults=(None,))


def is_independent_torsion(xs, settings=None):
    xs = list(xs)
    for x in xs[1:]:
        xs[0].check_group(x)
    orders = [x.order() for x in xs]
    for x, order in zip(xs, orders):
        if not order.is_finite:
            raise InfiniteOrder("{} has infinite order".format(x))
    total = reduce(lambda a, b: a * b, (order.k for order in orders), 1)
    bound = resolve(settings).enum_bound
    if total > bound:
        raise BoundExceeded(total, bound, what="coefficient tuple count")
    if not xs:
        return IndependenceVerdict(True)
    # multiples[i][c] is c * xs[i]
    multiples = [[x.scale(c) for c in range(order.k)] for x, order in zip(xs, orders)]
    for coeffs in itertools.product(*(range(order.k) for order in orders)):
        terms = [row[c] for row, c in zip(multiples, coeffs)]
        if all(term.is_zero for term in terms):
            continue
        if reduce(lambda a, b: a + b, terms).is_zero:
            log.debug("dependent: %s", coeffs)
            return IndependenceVerdict(False, list(coeffs))
    return IndependenceVerdict(True)


def _matrix(vs):
    vs = [[Fraction(v) for v in vector] for vector in vs]
    dims = set(len(vector) for vector in vs)
    if len(dims) > 1:
        raise DimensionMismatch("vectors have different dimensions: {}".format(sorted(dims)))
    d = dims.pop() if dims else 0
    # Vectors are the columns.
    return Matrix(d, len(vs), lambda i, j: Rational(vs[j][i].numerator, vs[j][i].denominator)), d


def _integer_relation(vector):
    values = [Fraction(int(v.p), int(v.q)) for v in vector]
    scale = reduce(lcm, (v.denominator for v in values), 1)
    ints = [int(v * scale) for v in values]
    g = reduce(gcd, ints, 0) or 1
    ints = [v // g for v in ints]
    first = next((v for v in ints if v), 0)
    return [-v for v in ints] if first < 0 else ints


def is_independent_rational(vs):
    vs = list(vs)
    if not vs:
        return IndependenceVerdict(True)
    M, d = _matrix(vs)
    if d == 0:
        return IndependenceVerdict(False, _integer_relation([Rational(1)] + [Rational(0)] * (len(vs) - 1)))
    nullspace = M.nullspace()
    if not nullspace:
        return IndependenceVerdict(True)
    return IndependenceVerdict(False, _integer_relation(list(nullspace[0])))


def max_independent_subset(vs):
    """
    Greedy left-to-right selection: keeps a vector iff it is independent of those kept so far.
    These are exactly the pivot columns of the reduced row echelon form.
    """
    vs = list(vs)
    if not vs:
        return []
    M, d = _matrix(vs)
    if d == 0:
        return []
    _, pivots = M.rref()
    return list(pivots)


def is_independent(xs, settings=None):
    """
    Independence of a system of group elements. Zero elements never violate the definition,
    so they are set aside; the rest must be all torsion (decided by enumeration) or all of
    infinite order inside a torsion-free group (decided over Q). Anything else raises
    ``UnsupportedMix``.
    """
    xs = list(xs)
    for x in xs[1:]:
        xs[0].check_group(x)
    if all(x.order().is_finite for x in xs):
        return is_independent_torsion(xs, settings=settings)
    if any(x.order().is_finite and not x.is_zero for x in xs) or not _torsion_free_group(xs[0]):
        raise UnsupportedMix("system mixes torsion and torsion-free elements")
    live = [i for i, x in enumerate(xs) if not x.is_zero]
    verdict = is_independent_rational(_vectors([xs[i] for i in live]))
    if verdict.independent:
        return verdict
    certificate = [0] * len(xs)
    for i, c in zip(live, verdict.certificate):
        certificate[i] = c
    return IndependenceVerdict(False, certificate)


def _torsion_free_group(x):
    if isinstance(x, SumElement):
        return x.parent.is_torsion_free
    return isinstance(x, (RationalElement, IntegerElement))


def _vectors(xs):
    if not isinstance(xs[0], SumElement):
        return [[Fraction(x.value)] for x in xs]
    coords = sorted(set(coord for x in xs for coord, _ in x.entries))
    return [[Fraction(x[coord].value) for coord in coords] for x in xs]
