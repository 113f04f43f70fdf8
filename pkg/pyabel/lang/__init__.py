from .ast import (
    QMODZ,
    ZERO_GROUP,
    Atom,
    GroupExpr,
    Kind,
    Power,
    Q,
    Sum,
    Summand,
    Z,
    cyclic,
    flatten,
    from_summands,
    prufer,
)
from .normal import NormalForm, expand_aliases, normalize
from .parser import parse
from .printer import format_expr

__all__ = [
    # ast
    "Atom",
    "GroupExpr",
    "Kind",
    "Power",
    "Sum",
    "Summand",
    "Q",
    "QMODZ",
    "Z",
    "ZERO_GROUP",
    "cyclic",
    "flatten",
    "from_summands",
    "prufer",
    # normal
    "NormalForm",
    "expand_aliases",
    "normalize",
    # parser
    "parse",
    # printer
    "format_expr",
]
