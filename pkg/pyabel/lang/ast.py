import enum
from collections import namedtuple

from pyabel.arith import ONE, ZERO, Cardinal, card_mul, check_prime


class Kind(enum.Enum):
    ZERO = "0"
    Z = "Z"
    Q = "Q"
    CYCLIC = "Z/m"
    PRUFER = "Z(p^inf)"
    QMODZ = "Q/Z"
    R = "R"
    RPOW = "R^n"
    CSTAR = "C*"
    CIRCLE = "S^1"

    @property
    def is_alias(self):
        return self in (Kind.R, Kind.RPOW, Kind.CSTAR, Kind.CIRCLE)

    @property
    def is_torsion(self):
        return self in (Kind.ZERO, Kind.CYCLIC, Kind.PRUFER, Kind.QMODZ)

    @property
    def is_torsion_free(self):
        return self in (Kind.ZERO, Kind.Z, Kind.Q, Kind.R, Kind.RPOW)

    @property
    def is_divisible(self):
        return self not in (Kind.Z, Kind.CYCLIC)

    @property
    def is_mixed(self):
        return self in (Kind.CSTAR, Kind.CIRCLE)


class GroupExpr:
    """
    Base class for nodes of a direct-sum expression. Nodes are immutable and compare structurally.
    """

    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and self._fields() == other._fields()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__,) + self._fields())

    def __setattr__(self, name, value):
        raise AttributeError("{} is immutable".format(self.__class__.__name__))

    def __str__(self):
        from .printer import format_expr

        return format_expr(self)

    def _fields(self):
        raise NotImplementedError()


class Atom(GroupExpr):
    __slots__ = ("kind", "param")

    def __init__(self, kind, param=None):
        kind = Kind(kind)
        if kind == Kind.CYCLIC:
            param = int(param)
            if param < 1:
                raise ValueError("Cyclic modulus must be at least 1 (got {}).".format(param))
        elif kind == Kind.PRUFER:
            param = check_prime(param)
        elif kind == Kind.RPOW:
            param = int(param)
            if param < 1:
                raise ValueError("R^n needs n >= 1 (got {}).".format(param))
        else:
            param = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "param", param)

    def _fields(self):
        return (self.kind, self.param)

    def __repr__(self):
        if self.param is None:
            return "Atom({})".format(self.kind.name)
        return "Atom({}, {})".format(self.kind.name, self.param)


class Power(GroupExpr):
    __slots__ = ("expr", "mult")

    def __init__(self, expr, mult):
        if not isinstance(expr, GroupExpr):
            raise ValueError("Power base must be a group expression (got {!r}).".format(expr))
        object.__setattr__(self, "expr", expr)
        object.__setattr__(self, "mult", Cardinal.coerce(mult))

    def _fields(self):
        return (self.expr, self.mult)

    def __repr__(self):
        return "Power({!r}, {!r})".format(self.expr, self.mult)


class Sum(GroupExpr):
    __slots__ = ("terms",)

    def __init__(self, terms):
        terms = tuple(terms)
        # A single summand is written without (+), so it is never a Sum.
        if len(terms) < 2:
            raise ValueError("A direct sum needs at least two terms (got {}).".format(len(terms)))
        for term in terms:
            if not isinstance(term, GroupExpr):
                raise ValueError("Sum terms must be group expressions (got {!r}).".format(term))
        object.__setattr__(self, "terms", terms)

    def _fields(self):
        return self.terms

    def __repr__(self):
        return "Sum[{}]".format(", ".join(repr(t) for t in self.terms))


ZERO_GROUP = Atom(Kind.ZERO)
Z = Atom(Kind.Z)
Q = Atom(Kind.Q)
QMODZ = Atom(Kind.QMODZ)


def cyclic(m):
    return Atom(Kind.CYCLIC, m)


def prufer(p):
    return Atom(Kind.PRUFER, p)


# One direct summand after flattening: an atom with its total multiplicity.
Summand = namedtuple("Summand", ("atom", "mult"))


def flatten(expr, mult=ONE):
    """
    Lists the atoms of ``expr`` in reading order with their accumulated multiplicities. Powers
    of sums distribute over their terms. Zero atoms and zero multiplicities are dropped.
    """
    if isinstance(expr, Atom):
        if expr.kind == Kind.ZERO or mult.is_zero:
            return []
        return [Summand(expr, mult)]
    if isinstance(expr, Power):
        return flatten(expr.expr, card_mul(mult, expr.mult))
    if isinstance(expr, Sum):
        summands = []
        for term in expr.terms:
            summands.extend(flatten(term, mult))
        return summands
    raise ValueError("Not a group expression: {!r}".format(expr))


def from_summands(summands):
    """
    Rebuilds an expression from (atom, multiplicity) pairs; the empty list is the zero group.
    """
    terms = []
    for atom, mult in summands:
        mult = Cardinal.coerce(mult)
        if mult == ZERO or atom.kind == Kind.ZERO:
            continue
        terms.append(atom if mult == ONE else Power(atom, mult))
    if not terms:
        return ZERO_GROUP
    if len(terms) == 1:
        return terms[0]
    return Sum(terms)
