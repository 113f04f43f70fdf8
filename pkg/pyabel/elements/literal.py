"""
Element literals::

    q:3/5           RationalElement
    z:4             IntegerElement
    qz:1/6          RationalModOne
    pr:2^inf:3/8    PruferElement
    cyc:12:7        CyclicElement
    {pos0.tag0=qz:1/2, pos2.tag5=q:1/3}    SumElement (needs the parent group)
"""

import re
from fractions import Fraction

from pyabel.errors import ParseError
from pyabel.lang import parse

from .model import CyclicElement, IntegerElement, PruferElement, RationalElement, RationalModOne
from .sum import SumElement, SumGroup

ATOM_LITERAL = re.compile(
    r"\s*(?:"
    r"(?P<q>q):(?P<q_value>-?\d+(?:/\d+)?)"
    r"|(?P<z>z):(?P<z_value>-?\d+)"
    r"|(?P<qz>qz):(?P<qz_value>-?\d+(?:/\d+)?)"
    r"|(?P<pr>pr):(?P<pr_p>\d+)\^inf:(?P<pr_value>-?\d+(?:/\d+)?)"
    r"|(?P<cyc>cyc):(?P<cyc_m>\d+):(?P<cyc_r>-?\d+)"
    r")\s*"
)
ENTRY = re.compile(r"\s*pos(?P<pos>\d+)\.tag(?P<tag>\d+)\s*=")
EXPECTED = ("q:", "z:", "qz:", "pr:", "cyc:", "{")


def _offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def _atom_literal(text, start=0, full=True):
    match = ATOM_LITERAL.match(text, start)
    if not match or (full and match.end() != len(text)):
        pos = match.end() if match else start
        raise ParseError(_offset(text, pos), EXPECTED if not match else ("end of input",))
    try:
        if match.group("q"):
            element = RationalElement(Fraction(match.group("q_value")))
        elif match.group("z"):
            element = IntegerElement(int(match.group("z_value")))
        elif match.group("qz"):
            element = RationalModOne(Fraction(match.group("qz_value")))
        elif match.group("pr"):
            element = PruferElement(int(match.group("pr_p")), Fraction(match.group("pr_value")))
        else:
            element = CyclicElement(int(match.group("cyc_m")), int(match.group("cyc_r")))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(_offset(text, start), EXPECTED, "invalid element literal: {}".format(e))
    return element, match.end()


def parse_element(text, group=None):
    """
    Parses an element literal. Sum literals need ``group``, either a ``SumGroup`` or an expression
    (string or ``GroupExpr``) whose flattened summands the positions refer to.
    """
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        element, _ = _atom_literal(text)
        return element
    if group is None:
        raise ParseError(_offset(text, len(text) - len(stripped)), ("group expression",), "sum literals need a group")
    if isinstance(group, str):
        group = parse(group)
    if not isinstance(group, SumGroup):
        group = SumGroup(group)
    pos = len(text) - len(stripped) + 1
    entries = {}
    closing = text.rstrip()
    if not closing.endswith("}"):
        raise ParseError(_offset(text, len(closing)), ("}",))
    body_end = len(closing) - 1
    if text[pos:body_end].strip():
        while True:
            match = ENTRY.match(text, pos)
            if not match:
                raise ParseError(_offset(text, pos), ("pos<N>.tag<M>=",))
            element, pos = _atom_literal(text[:body_end], match.end(), full=False)
            coord = (int(match.group("pos")), int(match.group("tag")))
            if coord in entries:
                raise ParseError(_offset(text, match.start()), ("new coordinate",), "duplicate coordinate")
            entries[coord] = element
            if pos >= body_end:
                break
            if text[pos] != ",":
                raise ParseError(_offset(text, pos), (",", "}"))
            pos += 1
    try:
        return SumElement(group, entries)
    except ValueError as e:
        raise ParseError(_offset(text, 0), ("valid coordinate",), str(e))


def _fraction(value):
    return str(value.numerator) if value.denominator == 1 else "{}/{}".format(value.numerator, value.denominator)


def format_element(element):
    if isinstance(element, RationalElement):
        return "q:{}".format(_fraction(element.value))
    if isinstance(element, IntegerElement):
        return "z:{}".format(element.value)
    if isinstance(element, RationalModOne):
        return "qz:{}".format(_fraction(element.value))
    if isinstance(element, PruferElement):
        return "pr:{}^inf:{}".format(element.p, _fraction(element.value))
    if isinstance(element, CyclicElement):
        return "cyc:{}:{}".format(element.m, element.r)
    if isinstance(element, SumElement):
        return "{{{}}}".format(
            ", ".join("pos{}.tag{}={}".format(pos, tag, format_element(e)) for (pos, tag), e in element.entries)
        )
    raise ValueError("Not a group element: {!r}".format(element))
