from .base import Division, GroupElement
from .literal import format_element, parse_element
from .model import CyclicElement, IntegerElement, PruferElement, RationalElement, RationalModOne, kernel_size, zero_of
from .ops import (
    chain_lift,
    divisibility_chain,
    elem_add,
    elem_divide,
    elem_order,
    elem_smul,
    identity_of,
    in_socle,
    rational_scale,
)
from .sum import SumElement, SumGroup

__all__ = [
    # base
    "Division",
    "GroupElement",
    # literal
    "format_element",
    "parse_element",
    # model
    "CyclicElement",
    "IntegerElement",
    "PruferElement",
    "RationalElement",
    "RationalModOne",
    "kernel_size",
    "zero_of",
    # ops
    "chain_lift",
    "divisibility_chain",
    "elem_add",
    "elem_divide",
    "elem_order",
    "elem_smul",
    "identity_of",
    "in_socle",
    "rational_scale",
    # sum
    "SumElement",
    "SumGroup",
]
