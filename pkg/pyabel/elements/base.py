from collections import namedtuple

from pyabel.arith import is_squarefree
from pyabel.errors import ParentMismatch

# All solutions y of n*y = x, or one canonical witness when ``truncated`` is set.
Division = namedtuple("Division", ("solutions", "count", "truncated"), defaults=(False,))


class GroupElement:
    """
    An exact element of one of the model groups. Subclasses are immutable, canonical (equal
    elements have equal representations) and implement ``_add``, ``scale``, ``order``, ``divide``
    and ``rational_scale``.
    """

    __slots__ = ()

    @property
    def group(self):
        raise NotImplementedError()

    def _key(self):
        raise NotImplementedError()

    def zero(self):
        raise NotImplementedError()

    @property
    def is_zero(self):
        return self == self.zero()

    def __setattr__(self, name, value):
        raise AttributeError("{} is immutable".format(self.__class__.__name__))

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__,) + self._key())

    def check_group(self, other):
        if not isinstance(other, GroupElement) or self.group != other.group:
            raise ParentMismatch(self.group, getattr(other, "group", other))

    def __add__(self, other):
        self.check_group(other)
        return self._add(other)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        self.check_group(other)
        return self._add(other.scale(-1))

    def __rmul__(self, n):
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return self.scale(n)

    def in_socle(self, settings=None):
        """
        True when the order is finite and square-free. Deciding that factors the order, so an
        order above ``factor_bound`` raises ``BoundExceeded``.
        """
        order = self.order()
        return order.is_finite and is_squarefree(order.k, settings=settings)

    def __str__(self):
        from .literal import format_element

        return format_element(self)
