"""
Elements of direct sums of model atoms.

A sum group is addressed by *position* (the index of a summand after flattening the
expression) and *tag* (which copy of that summand). Tags are arbitrary non-negative integers
even when the multiplicity is infinite: every element has finite support, so countably many
tags are enough for any concrete computation.
"""

import itertools
import logging
from functools import reduce
from math import lcm

from pyabel.arith import INFINITE_ORDER, ONE, Cardinal, OrderValue, card_direct_power, card_mul
from pyabel.errors import NoElementModel, NotTorsionFree
from pyabel.lang import flatten, from_summands
from pyabel.settings import Settings, resolve

from .base import Division, GroupElement
from .model import kernel_size, zero_of

log = logging.getLogger(__name__)

# Per-coordinate divisions inside a sum only need their count and one witness.
_COUNT_ONLY = Settings(enum_bound=1)


class SumGroup:
    __slots__ = ("summands",)

    def __init__(self, expr):
        summands = tuple(flatten(expr))
        for atom, _ in summands:
            if atom.kind.is_alias:
                raise NoElementModel(atom)
        object.__setattr__(self, "summands", summands)

    def __setattr__(self, name, value):
        raise AttributeError("SumGroup is immutable")

    def __eq__(self, other):
        return isinstance(other, SumGroup) and self.summands == other.summands

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.summands)

    def __repr__(self):
        return "SumGroup({})".format(self.expr)

    def __str__(self):
        return str(self.expr)

    def __len__(self):
        return len(self.summands)

    @property
    def expr(self):
        return from_summands(self.summands)

    @property
    def is_torsion_free(self):
        return all(atom.kind.is_torsion_free for atom, _ in self.summands)

    def zero(self):
        return SumElement(self, {})

    def atom(self, pos):
        try:
            return self.summands[pos].atom
        except IndexError:
            raise ValueError("No summand at position {} (group has {}).".format(pos, len(self.summands)))

    def check_coordinate(self, pos, tag):
        atom, mult = self.summands[pos] if 0 <= pos < len(self.summands) else (None, None)
        if atom is None:
            raise ValueError("No summand at position {} (group has {}).".format(pos, len(self.summands)))
        if tag < 0 or (mult.is_finite and tag >= mult.k):
            raise ValueError("Tag {} out of range for {}^{}.".format(tag, atom, mult))

    def coordinates(self, extra=()):
        """
        Every coordinate of the finite-multiplicity summands, plus the ``extra`` coordinates.
        """
        coords = set(extra)
        for pos, (_, mult) in enumerate(self.summands):
            if mult.is_finite:
                coords.update((pos, tag) for tag in range(mult.k))
        return sorted(coords)


class SumElement(GroupElement):
    __slots__ = ("parent", "entries")

    def __init__(self, parent, entries):
        if not isinstance(parent, SumGroup):
            parent = SumGroup(parent)
        canonical = {}
        for (pos, tag), element in dict(entries).items():
            pos = int(pos)
            tag = int(tag)
            parent.check_coordinate(pos, tag)
            atom = parent.atom(pos)
            if element.group != atom:
                raise ValueError("Coordinate ({}, {}) needs an element of {} (got {}).".format(pos, tag, atom, element))
            if not element.is_zero:
                canonical[(pos, tag)] = element
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "entries", tuple(sorted(canonical.items(), key=lambda item: item[0])))

    group = property(lambda self: self.parent)

    def _key(self):
        return (self.parent, self.entries)

    def __repr__(self):
        return "SumElement({}, {})".format(self.parent, dict(self.entries))

    def __getitem__(self, coord):
        return dict(self.entries).get(coord) or zero_of(self.parent.atom(coord[0]))

    def zero(self):
        return SumElement(self.parent, {})

    @property
    def is_zero(self):
        return not self.entries

    def _map(self, fn):
        return SumElement(self.parent, {coord: fn(element) for coord, element in self.entries})

    def _add(self, other):
        merged = dict(self.entries)
        for coord, element in other.entries:
            merged[coord] = merged[coord] + element if coord in merged else element
        return SumElement(self.parent, merged)

    def scale(self, n):
        return self._map(lambda element: element.scale(n))

    def order(self):
        orders = [element.order() for _, element in self.entries]
        if not all(order.is_finite for order in orders):
            return INFINITE_ORDER
        return OrderValue(reduce(lcm, (order.k for order in orders), 1))

    def rational_scale(self, r):
        if not self.parent.is_torsion_free:
            raise NotTorsionFree("{} has torsion; (1/n)x is not well-defined".format(self.parent))
        return self._map(lambda element: element.rational_scale(r))

    def solution_count(self, n):
        count = ONE
        used = {}
        for (pos, _), element in self.entries:
            count = card_mul(count, element.divide(n, settings=_COUNT_ONLY).count)
            used[pos] = used.get(pos, 0) + 1
        for pos, (atom, mult) in enumerate(self.parent.summands):
            free = mult if not mult.is_finite else Cardinal.finite(mult.k - used.get(pos, 0))
            count = card_mul(count, card_direct_power(kernel_size(atom, n), free))
        return count

    def divide(self, n, settings=None):
        count = self.solution_count(n)
        entries = dict(self.entries)
        bound = resolve(settings).enum_bound
        if not count.is_finite or count.k > bound:
            log.info("listing one witness of %r solutions in %s", count, self.parent)
            witness = {coord: element.divide(n, settings=_COUNT_ONLY).solutions[0] for coord, element in self.entries}
            return Division([SumElement(self.parent, witness)], count, True)
        coords = [
            coord
            for coord in self.parent.coordinates(entries)
            if coord in entries or kernel_size(self.parent.atom(coord[0]), n) > 1
        ]
        choices = []
        for coord in coords:
            element = entries.get(coord) or zero_of(self.parent.atom(coord[0]))
            choices.append(element.divide(n, settings=settings).solutions)
        solutions = [SumElement(self.parent, dict(zip(coords, combo))) for combo in itertools.product(*choices)]
        return Division(solutions, count)

