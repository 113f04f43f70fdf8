"""
Recursive-descent parser for direct-sum expressions::

    expr     := term { "(+)" term } ;
    term     := atom [ "^" cardinal ] ;
    atom     := "0" | "Z" | "Q" | "Q/Z" | "Z/" nat | "Z(" nat "^inf)" | "R" [ "^" nat ] | "C*" | "S^1"
              | "(" expr ")" ;
    cardinal := nat | "aleph0" | "c" ;

Whitespace is allowed between any two tokens. Error offsets are 0-based byte offsets into the
UTF-8 encoding of the input.
"""

from pyabel.arith import ALEPH0, CONTINUUM, Cardinal
from pyabel.errors import ParseError

from .ast import Atom, Kind, Power, Sum

SUM = "(+)"


class Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def offset(self, pos=None):
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def peek(self, literal):
        self.skip()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal):
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal):
        if not self.accept(literal):
            self.fail(literal)

    def at_end(self):
        self.skip()
        return self.pos >= len(self.text)

    def fail(self, *expected):
        self.skip()
        raise ParseError(self.offset(), expected)

    def nat(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("nat")
        return int(self.text[start : self.pos]), start


class Parser:
    def __init__(self, text):
        self.scanner = Scanner(text)

    def parse(self):
        expr = self.expr()
        if not self.scanner.at_end():
            self.scanner.fail(SUM, "end of input")
        return expr

    def expr(self):
        terms = [self.term()]
        while self.scanner.accept(SUM):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(terms)

    def term(self):
        atom = self.atom()
        if self.scanner.accept("^"):
            return Power(atom, self.cardinal())
        return atom

    def cardinal(self):
        s = self.scanner
        if s.accept("aleph0"):
            return ALEPH0
        if s.accept("c"):
            return CONTINUUM
        s.skip()
        if s.pos >= len(s.text) or s.text[s.pos] not in "0123456789":
            s.fail("nat", "aleph0", "c")
        value, _ = s.nat()
        return Cardinal.finite(value)

    def atom(self):
        s = self.scanner
        if s.peek(SUM):
            s.fail("atom")
        if s.accept("("):
            expr = self.expr()
            s.expect(")")
            return expr
        if s.accept("0"):
            return Atom(Kind.ZERO)
        if s.accept("Q"):
            if s.accept("/"):
                s.expect("Z")
                return Atom(Kind.QMODZ)
            return Atom(Kind.Q)
        if s.accept("Z"):
            if s.accept("/"):
                return Atom(Kind.CYCLIC, self.positive("modulus"))
            if s.peek("(") and not s.peek(SUM):
                s.accept("(")
                p, start = s.nat()
                s.expect("^")
                s.expect("inf")
                s.expect(")")
                try:
                    return Atom(Kind.PRUFER, p)
                except ValueError:
                    raise ParseError(s.offset(start), ("prime",), "Z(p^inf) needs a prime base (got {})".format(p))
            return Atom(Kind.Z)
        if s.accept("R"):
            if s.peek("^"):
                save = s.pos
                s.accept("^")
                s.skip()
                if s.pos < len(s.text) and s.text[s.pos] in "0123456789":
                    return Atom(Kind.RPOW, self.positive("exponent"))
                s.pos = save
            return Atom(Kind.R)
        if s.accept("C"):
            s.expect("*")
            return Atom(Kind.CSTAR)
        if s.accept("S"):
            s.expect("^")
            s.expect("1")
            return Atom(Kind.CIRCLE)
        s.fail("0", "Z", "Q", "Q/Z", "Z/", "Z(", "R", "C*", "S^1", "(")

    def positive(self, what):
        value, start = self.scanner.nat()
        if value < 1:
            raise ParseError(self.scanner.offset(start), ("nat >= 1",), "{} must be at least 1".format(what))
        return value


def parse(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return Parser(text).parse()
