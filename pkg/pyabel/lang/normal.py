"""
Canonical invariants of a direct-sum expression.

Every expression is a direct sum of ``Z`` (free rank), primary cyclic groups ``Z/p^r``
(elementary divisors), Prüfer groups ``Z(p^inf)`` with multiplicities ``m_p`` and copies of
``Q`` (``n``). ``Q/Z`` contributes one ``Z(p^inf)`` for *every* prime, so ``m_p`` is stored as a
default that applies to all primes plus a finite, sorted list of exceptions.
"""

from collections import defaultdict

from pyabel.arith import CONTINUUM, ZERO, Cardinal, card_add, card_mul, factorize

from .ast import QMODZ, Kind, Power, Q, Z, cyclic, flatten, from_summands, prufer


class NormalForm:
    __slots__ = ("free_rank", "elementary_divisors", "prufer_map", "default_prufer", "q_mult")

    def __init__(self, free_rank=ZERO, elementary_divisors=(), prufer_map=(), default_prufer=ZERO, q_mult=ZERO):
        default_prufer = Cardinal.coerce(default_prufer)
        divisors = defaultdict(lambda: ZERO)
        for p, r, mult in elementary_divisors:
            divisors[(int(p), int(r))] = card_add(divisors[(int(p), int(r))], mult)
        exceptions = {}
        for p, m in dict(prufer_map).items():
            m = Cardinal.coerce(m)
            if m != default_prufer:
                exceptions[int(p)] = m
        object.__setattr__(self, "free_rank", Cardinal.coerce(free_rank))
        object.__setattr__(
            self,
            "elementary_divisors",
            tuple((p, r, m) for (p, r), m in sorted(divisors.items()) if not m.is_zero),
        )
        object.__setattr__(self, "prufer_map", tuple(sorted(exceptions.items())))
        object.__setattr__(self, "default_prufer", default_prufer)
        object.__setattr__(self, "q_mult", Cardinal.coerce(q_mult))

    def __setattr__(self, name, value):
        raise AttributeError("NormalForm is immutable")

    def _key(self):
        return (self.free_rank, self.elementary_divisors, self.prufer_map, self.default_prufer, self.q_mult)

    def __eq__(self, other):
        return isinstance(other, NormalForm) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            "NormalForm(free_rank={!r}, elementary_divisors={!r}, prufer_map={!r}, default_prufer={!r}, q_mult={!r})"
        ).format(*self._key())

    def m_p(self, p):
        return dict(self.prufer_map).get(p, self.default_prufer)

    @property
    def exceptional_primes(self):
        return sorted(set(p for p, _ in self.prufer_map) | set(p for p, _, _ in self.elementary_divisors))

    @property
    def is_divisible(self):
        return self.free_rank.is_zero and not self.elementary_divisors

    @property
    def is_torsion(self):
        return self.q_mult.is_zero and self.free_rank.is_zero

    @property
    def is_torsion_free(self):
        return not self.elementary_divisors and not self.prufer_map and self.default_prufer.is_zero

    @property
    def is_reduced(self):
        return self.q_mult.is_zero and not self.prufer_map and self.default_prufer.is_zero

    @property
    def is_trivial(self):
        return self.is_divisible and self.is_reduced

    def summands(self):
        """
        The (atom, multiplicity) list of an expression with exactly these invariants.
        """
        summands = []
        if self.free_rank:
            summands.append((Z, self.free_rank))
        for p, r, mult in self.elementary_divisors:
            summands.append((cyclic(p**r), mult))
        if self.default_prufer:
            summands.append((QMODZ, self.default_prufer))
        for p, m in self.prufer_map:
            d = self.default_prufer
            if m < d:
                raise ValueError("m_{} below the all-primes default has no expression.".format(p))
            # m_p = d + extra; the extra copies are m - d when both are finite, else m itself.
            extra = Cardinal.finite(m.k - d.k) if m.is_finite and d.is_finite else m
            summands.append((prufer(p), extra))
        if self.q_mult:
            summands.append((Q, self.q_mult))
        return summands

    def to_expr(self):
        return from_summands(self.summands())

    def to_json(self):
        return {
            "free_rank": self.free_rank.to_json(),
            "elementary_divisors": [{"p": p, "r": r, "mult": m.to_json()} for p, r, m in self.elementary_divisors],
            "m_p": [{"p": p, "mult": m.to_json()} for p, m in self.prufer_map],
            "m_p_default": self.default_prufer.to_json(),
            "n": self.q_mult.to_json(),
        }


def normalize(expr, settings=None):
    free_rank = ZERO
    q_mult = ZERO
    default_prufer = ZERO
    divisors = []
    prufers = defaultdict(lambda: ZERO)
    for atom, mult in flatten(expr):
        kind = atom.kind
        if kind == Kind.Z:
            free_rank = card_add(free_rank, mult)
        elif kind == Kind.Q:
            q_mult = card_add(q_mult, mult)
        elif kind == Kind.CYCLIC:
            for p, r in factorize(atom.param, settings=settings).pairs:
                divisors.append((p, r, mult))
        elif kind == Kind.PRUFER:
            prufers[atom.param] = card_add(prufers[atom.param], mult)
        elif kind == Kind.QMODZ:
            default_prufer = card_add(default_prufer, mult)
        elif kind in (Kind.R, Kind.RPOW):
            q_mult = card_add(q_mult, card_mul(mult, CONTINUUM))
        elif kind in (Kind.CSTAR, Kind.CIRCLE):
            default_prufer = card_add(default_prufer, mult)
            q_mult = card_add(q_mult, card_mul(mult, CONTINUUM))
    # Explicit Prüfer summands sit on top of the all-primes default.
    prufer_map = {p: card_add(default_prufer, m) for p, m in prufers.items()}
    return NormalForm(free_rank, divisors, prufer_map, default_prufer, q_mult)


def expand_atom(atom):
    if atom.kind in (Kind.R, Kind.RPOW):
        return Power(Q, CONTINUUM)
    if atom.kind in (Kind.CSTAR, Kind.CIRCLE):
        return from_summands([(QMODZ, 1), (Q, CONTINUUM)])
    return atom


def expand_aliases(expr):
    """
    Replaces R, R^n, C* and S^1 by their decompositions over Q and Q/Z.
    """
    summands = []
    for atom, mult in flatten(expr):
        for inner, inner_mult in flatten(expand_atom(atom)):
            summands.append((inner, card_mul(mult, inner_mult)))
    return from_summands(summands)
