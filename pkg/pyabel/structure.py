"""
Structure theory of direct-sum expressions: divisibility, torsion and divisible splittings,
primary decomposition, socles, invariants and isomorphism.

Every divisible group is a direct sum of m_p copies of Z(p^inf) for each prime p and n copies
of Q, and the cardinals (m_p, n) determine it up to isomorphism. Reduced summands (Z and
Z/p^r) are classified by their free rank and elementary divisors. Isomorphism of expressions
is decided by comparing both sets of invariants.
"""

import logging
from collections import namedtuple

from sympy import nextprime

from .arith import (
    ALEPH0,
    CONTINUUM,
    ONE,
    ZERO,
    Cardinal,
    card_add,
    card_direct_power,
    card_mul,
    ext_gcd_multi,
    factorize,
)
from .errors import InfiniteOrder, NotDivisible, NotFinitelyGenerated, NotTorsion
from .lang import QMODZ, Kind, NormalForm, Q, cyclic, flatten, from_summands, normalize, prufer

log = logging.getLogger(__name__)

Divisibility = namedtuple("Divisibility", ("divisible", "witness"))


def is_divisible(expr, settings=None):
    """
    Returns ``(True, None)`` or ``(False, (atom, n))`` naming a summand A with n*A != A.
    """
    for atom, _ in flatten(expr):
        if atom.kind == Kind.Z:
            return Divisibility(False, (atom, 2))
        if atom.kind == Kind.CYCLIC and atom.param > 1:
            return Divisibility(False, (atom, factorize(atom.param, settings=settings).primes[0]))
    return Divisibility(True, None)


def torsion_split(expr):
    """
    Splits into (torsion part, torsion-free complement). C* and S^1 split into Q/Z and Q^c.
    """
    torsion = []
    free = []
    for atom, mult in flatten(expr):
        if atom.kind.is_mixed:
            torsion.append((QMODZ, mult))
            free.append((Q, card_mul(mult, CONTINUUM)))
        elif atom.kind.is_torsion:
            torsion.append((atom, mult))
        else:
            free.append((atom, mult))
    return from_summands(torsion), from_summands(free)


def split_divisible(expr):
    """
    Splits into (maximal divisible part, reduced complement).
    """
    divisible = []
    reduced = []
    for atom, mult in flatten(expr):
        if atom.kind.is_divisible:
            divisible.append((atom, mult))
        elif not (atom.kind == Kind.CYCLIC and atom.param == 1):
            reduced.append((atom, mult))
    return from_summands(divisible), from_summands(reduced)


class PrimaryDecomposition(namedtuple("PrimaryDecomposition", ("components", "default"))):
    """
    ``components`` lists (p, T_p) for every prime where the group differs from the default;
    every other prime p contributes ``default`` copies of Z(p^inf).
    """

    __slots__ = ()

    def normal_form(self, settings=None):
        free_rank = ZERO
        divisors = []
        prufers = {}
        for p, component in self.components:
            nf = normalize(component, settings=settings)
            free_rank = card_add(free_rank, nf.free_rank)
            divisors.extend(nf.elementary_divisors)
            prufers[p] = nf.m_p(p)
        return NormalForm(free_rank, divisors, prufers, self.default)

    def describe(self):
        parts = ["T_{} = {}".format(p, component) for p, component in self.components]
        if self.default:
            prefix = "every other prime p" if self.components else "every prime p"
            parts.append("T_p = {} for {}".format(_prufer_power(self.default), prefix))
        return "; ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "components": [{"p": p, "component": str(component)} for p, component in self.components],
            "default": self.default.to_json(),
        }


def _prufer_power(mult):
    return "Z(p^inf)" if mult == ONE else "Z(p^inf)^{}".format(mult)


def primary_decompose_expr(expr, settings=None):
    for atom, _ in flatten(expr):
        if not atom.kind.is_torsion:
            raise NotTorsion(atom)
    normal = normalize(expr, settings=settings)
    components = []
    for p in normal.exceptional_primes:
        summands = [(cyclic(q**r), mult) for q, r, mult in normal.elementary_divisors if q == p]
        summands.append((prufer(p), normal.m_p(p)))
        components.append((p, from_summands(summands)))
    return PrimaryDecomposition(components, normal.default_prufer)


def primary_decompose_element(x, settings=None):
    """
    Writes a torsion element as a sum of elements of prime-power order: with |x| = m = prod p_i^r_i
    and m_i = m / p_i^r_i, solve sum s_i*m_i = 1; then x = sum (s_i*m_i)*x and (s_i*m_i)*x lies in T_(p_i).
    """
    order = x.order()
    if not order.is_finite:
        raise InfiniteOrder("{} has infinite order".format(x))
    m = order.k
    if m == 1:
        return []
    factorization = factorize(m, settings=settings)
    cofactors = [m // q for _, q in factorization.prime_powers()]
    _, coeffs = ext_gcd_multi(cofactors)
    return [(p, x.scale(s * mi)) for (p, _), s, mi in zip(factorization.pairs, coeffs, cofactors)]


def p_component_element(x, p, settings=None):
    for q, component in primary_decompose_element(x, settings=settings):
        if q == p:
            return component
    return x.zero()


class Socle(namedtuple("Socle", ("expr", "every_prime"))):
    """
    S(G) as ``expr`` plus ``every_prime`` further copies of Z/p for every prime p.
    """

    __slots__ = ()

    def __str__(self):
        if not self.every_prime:
            return str(self.expr)
        tail = "(+)_p Z/p" if self.every_prime == ONE else "(+)_p (Z/p)^{}".format(self.every_prime)
        return tail if self.expr == from_summands([]) else "{} (+) {}".format(self.expr, tail)

    def to_json(self):
        return {"expr": str(self.expr), "every_prime": self.every_prime.to_json()}


def socle_expr(expr, settings=None):
    summands = []
    every_prime = ZERO
    for atom, mult in flatten(expr):
        if atom.kind == Kind.CYCLIC:
            summands.extend((cyclic(p), mult) for p in factorize(atom.param, settings=settings).primes)
        elif atom.kind == Kind.PRUFER:
            summands.append((cyclic(atom.param), mult))
        elif atom.kind == Kind.QMODZ or atom.kind.is_mixed:
            every_prime = card_add(every_prime, mult)
    return Socle(from_summands(summands), every_prime)


class StructureReport(namedtuple("StructureReport", ("normal",))):
    __slots__ = ()

    is_divisible = property(lambda self: self.normal.is_divisible)
    is_torsion = property(lambda self: self.normal.is_torsion)
    is_torsion_free = property(lambda self: self.normal.is_torsion_free)
    is_reduced = property(lambda self: self.normal.is_reduced)
    n = property(lambda self: self.normal.q_mult)

    def m_p(self, p):
        return self.normal.m_p(p)

    @property
    def torsion_free_rank(self):
        return card_add(self.normal.free_rank, self.normal.q_mult)

    def to_json(self):
        data = self.normal.to_json()
        data.update(
            {
                "is_divisible": self.is_divisible,
                "is_torsion": self.is_torsion,
                "is_torsion_free": self.is_torsion_free,
                "is_reduced": self.is_reduced,
            }
        )
        return data


def classify(expr, settings=None):
    return StructureReport(normalize(expr, settings=settings))


def is_isomorphic(a, b, settings=None):
    return classify(a, settings=settings).normal == classify(b, settings=settings).normal


def divisible_hull(expr, settings=None):
    summands = []
    for atom, mult in flatten(expr):
        if atom.kind not in (Kind.Z, Kind.CYCLIC) or not mult.is_finite:
            raise NotFinitelyGenerated(atom)
        if atom.kind == Kind.Z:
            summands.append((Q, mult))
        else:
            summands.extend((prufer(p), mult) for p in factorize(atom.param, settings=settings).primes)
    return from_summands(summands)


def require_divisible(expr, settings=None):
    verdict = is_divisible(expr, settings=settings)
    if not verdict.divisible:
        raise NotDivisible(verdict.witness)


def count_division_solutions(expr, n, settings=None):
    """
    Number of solutions of n*x = y for attainable y: the size of the n-torsion, which is the
    direct sum over p | n of m_p copies of Z/p^(v_p(n)).
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive (got {}).".format(n))
    require_divisible(expr, settings=settings)
    normal = normalize(expr, settings=settings)
    count = ONE
    for p, q in factorize(n, settings=settings).prime_powers():
        count = card_mul(count, card_direct_power(q, normal.m_p(p)))
    return count


def solution_profile(expr, primes, max_k, settings=None):
    require_divisible(expr, settings=settings)
    return {
        (p, k): count_division_solutions(expr, p**k, settings=settings)
        for p in primes
        for k in range(1, int(max_k) + 1)
    }


def isomorphic_by_counts(a, b, settings=None):
    """
    Decides isomorphism of divisible groups from the number of solutions of p*x = y for every
    prime p together with the torsion-free rank. Primes outside the exceptions of both groups
    all behave like one generic prime.
    """
    require_divisible(a, settings=settings)
    require_divisible(b, settings=settings)
    na = normalize(a, settings=settings)
    nb = normalize(b, settings=settings)
    primes = sorted(set(na.exceptional_primes) | set(nb.exceptional_primes))
    generic = 2
    while generic in primes:
        generic = nextprime(generic)
    for p in primes + [int(generic)]:
        if count_division_solutions(a, p, settings=settings) != count_division_solutions(b, p, settings=settings):
            log.debug("solution counts differ at p=%s", p)
            return False
    return na.q_mult == nb.q_mult


def atom_cardinality(atom):
    if atom.kind == Kind.ZERO:
        return ONE
    if atom.kind == Kind.CYCLIC:
        return Cardinal.finite(atom.param)
    if atom.kind in (Kind.Z, Kind.Q, Kind.QMODZ, Kind.PRUFER):
        return ALEPH0
    return CONTINUUM


def group_cardinality(expr):
    size = ONE
    for atom, mult in flatten(expr):
        size = card_mul(size, card_direct_power(atom_cardinality(atom), mult))
    return size
