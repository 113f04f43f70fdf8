import itertools
import json
import os
import tempfile
import unittest
from fractions import Fraction
from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix
from typer.testing import CliRunner

from pyabel.arith import (
    ALEPH0,
    CONTINUUM,
    INFINITE_ORDER,
    ONE,
    ZERO,
    Cardinal,
    OrderValue,
    card_add,
    card_direct_power,
    card_mul,
    ext_gcd,
    ext_gcd_multi,
    factorize,
    is_squarefree,
    valuation,
)
from pyabel.cli import app, run
from pyabel.elements import (
    CyclicElement,
    IntegerElement,
    PruferElement,
    RationalElement,
    RationalModOne,
    SumElement,
    SumGroup,
    chain_lift,
    divisibility_chain,
    elem_add,
    elem_divide,
    elem_order,
    elem_smul,
    format_element,
    identity_of,
    in_socle,
    parse_element,
    rational_scale,
)
from pyabel.errors import (
    BoundExceeded,
    ConfigError,
    DimensionMismatch,
    InfiniteOrder,
    MatrixFormatError,
    NoElementModel,
    NoSolution,
    NotDivisible,
    NotFinitelyGenerated,
    NotTorsion,
    NotTorsionFree,
    ParentMismatch,
    ParseError,
    UnsupportedMix,
)
from pyabel.independence import (
    is_independent,
    is_independent_rational,
    is_independent_torsion,
    max_independent_subset,
)
from pyabel.lang import (
    QMODZ,
    ZERO_GROUP,
    Atom,
    Kind,
    Power,
    Q,
    Sum,
    Z,
    cyclic,
    expand_aliases,
    flatten,
    from_summands,
    normalize,
    parse,
    prufer,
)
from pyabel.matrix import IntMatrix, fp_classify, invariant_factors, smith_normal_form
from pyabel.settings import DEFAULT, Settings
from pyabel.structure import (
    classify,
    count_division_solutions,
    divisible_hull,
    group_cardinality,
    is_divisible,
    is_isomorphic,
    isomorphic_by_counts,
    p_component_element,
    primary_decompose_element,
    primary_decompose_expr,
    socle_expr,
    solution_profile,
    split_divisible,
    torsion_split,
)

R = Atom(Kind.R)
CSTAR = Atom(Kind.CSTAR)
CIRCLE = Atom(Kind.CIRCLE)

cardinals = st.one_of(st.integers(0, 5).map(Cardinal.finite), st.just(ALEPH0), st.just(CONTINUUM))
group_atoms = st.one_of(
    st.sampled_from([ZERO_GROUP, Z, Q, QMODZ, R, CSTAR, CIRCLE]),
    st.integers(1, 60).map(cyclic),
    st.sampled_from([2, 3, 5, 7]).map(prufer),
    st.integers(1, 4).map(lambda n: Atom(Kind.RPOW, n)),
)
group_exprs = st.recursive(
    group_atoms,
    lambda children: st.one_of(
        st.builds(Power, children, cardinals),
        st.lists(children, min_size=2, max_size=4).map(Sum),
    ),
    max_leaves=8,
)
divisible_atoms = st.one_of(
    st.sampled_from([Q, QMODZ, R, CSTAR, CIRCLE]),
    st.sampled_from([2, 3, 5]).map(prufer),
)
divisible_exprs = st.lists(st.tuples(divisible_atoms, cardinals), min_size=1, max_size=4).map(
    lambda pairs: from_summands([(atom, mult) for atom, mult in pairs])
)


def triples(elements):
    return st.tuples(elements, elements, elements)


model_triples = {
    "Z": triples(st.integers(-(10**6), 10**6).map(IntegerElement)),
    "Q": triples(st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 1000)).map(RationalElement)),
    "Q/Z": triples(st.builds(Fraction, st.integers(0, 1000), st.integers(1, 1000)).map(RationalModOne)),
    "Z(p^inf)": st.sampled_from([2, 3, 5]).flatmap(
        lambda p: triples(
            st.builds(lambda a, k: PruferElement(p, Fraction(a, p**k)), st.integers(0, 10**4), st.integers(0, 8))
        )
    ),
    "Z/m": st.integers(1, 60).flatmap(lambda m: triples(st.integers(0, m - 1).map(lambda r: CyclicElement(m, r)))),
}


def brute_force_modulus(m, q):
    """The idempotent e of Z/m with e = 1 mod q and e = 0 mod m/q."""
    return next(e for e in range(m) if e % q == 1 % q and e % (m // q) == 0)


class ImportTests(unittest.TestCase):
    def test_package_imports(self):
        import pyabel
        import pyabel.cli

        self.assertTrue(pyabel.__version__)
        self.assertEqual(pyabel.ext_gcd(3, 4), (1, -1, 1))
        self.assertEqual(pyabel.ext_gcd(240, 46), (2, -9, 47))
        self.assertIs(pyabel.cli.app, app)


class ArithmeticTests(unittest.TestCase):
    def test_ext_gcd_examples(self):
        self.assertEqual(ext_gcd(3, 4), (1, -1, 1))
        self.assertEqual(ext_gcd(0, 0), (0, 0, 0))
        g, x, y = ext_gcd(12, 18)
        self.assertEqual(g, 6)
        self.assertEqual(12 * x + 18 * y, 6)

    @given(st.integers(-(10**9), 10**9), st.integers(-(10**9), 10**9))
    @settings(max_examples=1000, deadline=None)
    def test_ext_gcd_identity(self, a, b):
        g, x, y = ext_gcd(a, b)
        self.assertGreaterEqual(g, 0)
        self.assertEqual(a * x + b * y, g)

    def test_ext_gcd_multi(self):
        self.assertEqual(ext_gcd_multi([3, 4]), (1, [-1, 1]))
        self.assertEqual(ext_gcd_multi([5]), (5, [1]))
        g, coeffs = ext_gcd_multi([4, 6, 9])
        self.assertEqual(g, 1)
        self.assertEqual(4 * coeffs[0] + 6 * coeffs[1] + 9 * coeffs[2], 1)
        g, coeffs = ext_gcd_multi([-6, 10])
        self.assertEqual(g, 2)
        self.assertEqual(-6 * coeffs[0] + 10 * coeffs[1], 2)
        with self.assertRaises(ValueError):
            ext_gcd_multi([])

    def test_factorize(self):
        self.assertEqual(factorize(12).pairs, ((2, 2), (3, 1)))
        self.assertEqual(factorize(1).pairs, ())
        self.assertEqual(factorize(97).pairs, ((97, 1),))
        self.assertEqual(factorize(360).primes, [2, 3, 5])
        self.assertEqual(factorize(360).prime_powers(), [(2, 8), (3, 9), (5, 5)])
        with self.assertRaises(ValueError):
            factorize(0)

    def test_factorize_reconstructs(self):
        for n in range(1, 10**5 + 1):
            self.assertEqual(factorize(n).value, n)

    def test_factorize_bound(self):
        with self.assertLogs("pyabel.arith", level="INFO"):
            with self.assertRaises(BoundExceeded) as cm:
                factorize(10**12 + 1)
        self.assertEqual(cm.exception.kind, "BoundExceeded")
        self.assertEqual(factorize(10**12).value, 10**12)
        with self.assertRaises(BoundExceeded):
            factorize(1000, settings=Settings(factor_bound=999))

    def test_is_squarefree(self):
        self.assertTrue(is_squarefree(6))
        self.assertFalse(is_squarefree(4))
        self.assertTrue(is_squarefree(30))
        self.assertTrue(is_squarefree(1))
        for n in range(1, 10**4 + 1):
            scan = all(n % (d * d) for d in range(2, int(n**0.5) + 1))
            self.assertEqual(is_squarefree(n), scan, n)

    def test_cardinal_arithmetic(self):
        self.assertEqual(card_add(Cardinal.finite(2), Cardinal.finite(3)), Cardinal.finite(5))
        self.assertEqual(card_add(ALEPH0, CONTINUUM), CONTINUUM)
        self.assertEqual(card_mul(ZERO, CONTINUUM), ZERO)
        self.assertEqual(card_mul(Cardinal.finite(3), ALEPH0), ALEPH0)
        self.assertEqual(card_mul(2, 3), 6)
        self.assertEqual(Cardinal.finite(4) + 1, 5)
        self.assertLess(Cardinal.finite(10**9), ALEPH0)
        self.assertLess(ALEPH0, CONTINUUM)
        self.assertFalse(ZERO)
        self.assertTrue(ALEPH0)

    def test_cardinal_laws(self):
        values = [ZERO, ONE, Cardinal.finite(3), ALEPH0, CONTINUUM]
        for a, b, c in itertools.product(values, repeat=3):
            self.assertEqual(card_add(a, b), card_add(b, a))
            self.assertEqual(card_add(card_add(a, b), c), card_add(a, card_add(b, c)))
            self.assertEqual(card_mul(a, b), card_mul(b, a))
            self.assertEqual(card_mul(card_mul(a, b), c), card_mul(a, card_mul(b, c)))

    def test_direct_power(self):
        self.assertEqual(card_direct_power(2, 3), 8)
        self.assertEqual(card_direct_power(2, ALEPH0), ALEPH0)
        self.assertEqual(card_direct_power(2, CONTINUUM), CONTINUUM)
        self.assertEqual(card_direct_power(ALEPH0, 2), ALEPH0)
        self.assertEqual(card_direct_power(1, CONTINUUM), ONE)
        self.assertEqual(card_direct_power(CONTINUUM, 0), ONE)

    def test_cardinal_format(self):
        self.assertEqual(str(ALEPH0), "aleph0")
        self.assertEqual(str(CONTINUUM), "c")
        self.assertEqual(repr(Cardinal.finite(3)), "Finite(3)")
        self.assertEqual(Cardinal.finite(3).to_json(), {"finite": 3})
        self.assertEqual(ALEPH0.to_json(), "aleph0")
        self.assertEqual(CONTINUUM.to_json(), "continuum")
        with self.assertRaises(ValueError):
            Cardinal.finite(-1)

    def test_order_value(self):
        self.assertEqual(OrderValue(6), 6)
        self.assertFalse(INFINITE_ORDER.is_finite)
        self.assertEqual(INFINITE_ORDER.to_json(), "infinite")
        self.assertEqual(repr(OrderValue(2)), "Fin(2)")
        with self.assertRaises(ValueError):
            OrderValue(0)


class SettingsTests(unittest.TestCase):
    def test_defaults(self):
        self.assertEqual(DEFAULT.factor_bound, 10**12)
        self.assertEqual(DEFAULT.enum_bound, 10**6)
        self.assertEqual(DEFAULT.chain_length, 4)
        self.assertEqual(Settings().enum_bound, Settings.enum_bound.default)

    def test_inheritance(self):
        parent = Settings(enum_bound=10)
        child = Settings(factor_bound=100)
        self.assertEqual(child.enum_bound, Settings.enum_bound.default)
        child.inherit(parent)
        self.assertEqual(child.enum_bound, 10)
        self.assertEqual(child.factor_bound, 100)
        copied = parent.copy(chain_length=2)
        self.assertEqual((copied.enum_bound, copied.chain_length), (10, 2))

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            Settings(bogus=1)
        with self.assertRaises(ConfigError):
            Settings(enum_bound=0)
        with self.assertRaises(ConfigError):
            Settings(enum_bound="many")

    def test_load(self):
        with tempfile.TemporaryDirectory() as root:
            path = os.path.join(root, "settings.json")
            with open(path, "w") as f:
                json.dump({"name": "small", "settings": {"enum_bound": 3}}, f)
            loaded = Settings(path)
            self.assertEqual(loaded.enum_bound, 3)
            self.assertEqual(loaded.name, "small")
            with open(path, "w") as f:
                json.dump({"settings": {"unknown": 3}}, f)
            with self.assertRaises(ConfigError):
                Settings(path)
            with self.assertRaises(ConfigError):
                Settings(os.path.join(root, "missing.json"))


class LanguageTests(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse("Z(2^inf)^3 (+) Q"), Sum([Power(prufer(2), 3), Q]))
        self.assertEqual(parse("Q/Z"), QMODZ)
        self.assertEqual(parse("  Z/12 "), cyclic(12))
        self.assertEqual(parse("R^2"), Atom(Kind.RPOW, 2))
        self.assertEqual(parse("R^c"), Power(R, CONTINUUM))
        self.assertEqual(parse("C* (+) S^1"), Sum([CSTAR, CIRCLE]))
        self.assertEqual(parse("(Z (+) Q)^aleph0"), Power(Sum([Z, Q]), ALEPH0))
        self.assertEqual(parse(b"0"), ZERO_GROUP)

    def test_parse_errors(self):
        with self.assertRaises(ParseError) as cm:
            parse("Z(2^inf")
        self.assertEqual(cm.exception.offset, 7)
        self.assertEqual(cm.exception.expected, (")",))
        with self.assertRaises(ParseError) as cm:
            parse("Z/0")
        self.assertIn("modulus must be at least 1", cm.exception.message)
        with self.assertRaises(ParseError) as cm:
            parse("Z(4^inf)")
        self.assertEqual(cm.exception.offset, 2)
        with self.assertRaises(ParseError) as cm:
            parse("Q\u00a0(+) X")
        self.assertEqual(cm.exception.offset, 7)
        with self.assertRaises(ParseError):
            parse("Q Q")
        with self.assertRaises(ParseError):
            parse("")

    def test_print(self):
        self.assertEqual(str(Sum([Q, Q])), "Q (+) Q")
        self.assertEqual(str(Power(prufer(3), ALEPH0)), "Z(3^inf)^aleph0")
        self.assertEqual(str(ZERO_GROUP), "0")
        self.assertEqual(str(Power(R, CONTINUUM)), "(R)^c")
        self.assertEqual(str(Sum([Z, Sum([Q, QMODZ])])), "Z (+) (Q (+) Q/Z)")

    @given(group_exprs)
    @settings(max_examples=200, deadline=None)
    def test_print_parse_roundtrip(self, expr):
        self.assertEqual(parse(str(expr)), expr)

    def test_single_term_sums(self):
        with self.assertRaises(ValueError):
            Sum([Q])
        with self.assertRaises(ValueError):
            Sum([])
        self.assertEqual(parse("(Q/Z)^2"), Power(QMODZ, 2))
        self.assertEqual(parse("(Q)"), Q)
        for expr in [Power(QMODZ, 2), Power(Sum([Q, QMODZ]), ALEPH0), Sum([Power(Z, 2), cyclic(4)])]:
            self.assertEqual(parse(str(expr)), expr)
        self.assertEqual(from_summands([(Q, 1)]), Q)
        self.assertEqual(from_summands([(Q, 0), (Z, 1)]), Z)
        self.assertEqual(from_summands([]), ZERO_GROUP)

    def test_normalize(self):
        nf = normalize(parse("C*"))
        self.assertEqual(nf.default_prufer, ONE)
        self.assertEqual(nf.q_mult, CONTINUUM)
        self.assertEqual(nf.free_rank, ZERO)
        self.assertEqual(nf.elementary_divisors, ())
        nf = normalize(parse("Z/12"))
        self.assertEqual(nf.elementary_divisors, ((2, 2, ONE), (3, 1, ONE)))
        self.assertEqual(normalize(parse("Q (+) Q^aleph0")).q_mult, ALEPH0)
        nf = normalize(parse("Q/Z (+) Z(3^inf)^2"))
        self.assertEqual(nf.m_p(3), 3)
        self.assertEqual(nf.m_p(5), 1)
        self.assertEqual(nf.exceptional_primes, [3])
        self.assertTrue(normalize(parse("0 (+) Z/1 (+) Q^0")).is_trivial)

    def test_normalize_bound(self):
        with self.assertRaises(BoundExceeded):
            normalize(parse("Z/1000"), settings=Settings(factor_bound=100))

    @given(group_exprs)
    @settings(max_examples=100, deadline=None)
    def test_normalize_idempotent(self, expr):
        nf = normalize(expr)
        self.assertEqual(normalize(nf.to_expr()), nf)
        self.assertEqual(normalize(parse(str(nf.to_expr()))), nf)

    @given(group_exprs, group_exprs)
    @settings(max_examples=100, deadline=None)
    def test_normalize_permutation(self, a, b):
        self.assertEqual(normalize(Sum([a, b])), normalize(Sum([b, a])))

    @given(group_atoms, st.integers(0, 6), st.integers(0, 6))
    @settings(max_examples=100, deadline=None)
    def test_normalize_split_multiplicity(self, atom, a, b):
        self.assertEqual(normalize(Power(atom, a + b)), normalize(Sum([Power(atom, a), Power(atom, b)])))

    def test_flatten_and_aliases(self):
        self.assertEqual(
            flatten(parse("(Z (+) Q^2)^3 (+) 0")), [(Z, Cardinal.finite(3)), (Q, Cardinal.finite(6))]
        )
        self.assertEqual(str(expand_aliases(parse("S^1 (+) R^3"))), "Q/Z (+) Q^c (+) Q^c")


class ElementTests(unittest.TestCase):
    def test_prufer_generators(self):
        c3 = PruferElement.generator(2, 3)
        self.assertEqual(c3, parse_element("pr:2^inf:1/8"))
        self.assertEqual(2 * PruferElement.generator(2, 4), c3)
        x = PruferElement(2, Fraction(3, 8))
        self.assertEqual((x.a, x.k), (3, 3))
        self.assertEqual(PruferElement(2, Fraction(11, 8)), x)
        with self.assertRaises(ValueError):
            PruferElement(2, Fraction(1, 3))
        with self.assertRaises(ValueError):
            PruferElement(4, Fraction(1, 4))

    def check_group_axioms(self, x, y, z):
        zero = x.zero()
        self.assertEqual((x + y) + z, x + (y + z))
        self.assertEqual(x + y, y + x)
        self.assertEqual(x + zero, x)
        self.assertEqual(x + (-x), zero)
        self.assertEqual(elem_smul(2, x), x + x)

    @given(model_triples["Z"])
    @settings(max_examples=1000, deadline=None)
    def test_integer_axioms(self, xyz):
        self.check_group_axioms(*xyz)

    @given(model_triples["Q"])
    @settings(max_examples=1000, deadline=None)
    def test_rational_axioms(self, xyz):
        self.check_group_axioms(*xyz)

    @given(model_triples["Q/Z"])
    @settings(max_examples=1000, deadline=None)
    def test_rationals_mod_one_axioms(self, xyz):
        self.check_group_axioms(*xyz)

    @given(model_triples["Z(p^inf)"])
    @settings(max_examples=1000, deadline=None)
    def test_prufer_axioms(self, xyz):
        self.check_group_axioms(*xyz)

    @given(model_triples["Z/m"])
    @settings(max_examples=1000, deadline=None)
    def test_cyclic_axioms(self, xyz):
        self.check_group_axioms(*xyz)

    def test_add_and_smul(self):
        self.assertEqual(elem_add(parse_element("qz:1/2"), parse_element("qz:2/3")), RationalModOne(Fraction(1, 6)))
        self.assertEqual(elem_smul(3, parse_element("cyc:12:7")), CyclicElement(12, 9))
        self.assertEqual(elem_smul(-1, parse_element("q:3/5")), RationalElement(Fraction(-3, 5)))
        self.assertEqual(-IntegerElement(4), IntegerElement(-4))
        self.assertEqual(parse_element("pr:3^inf:1/9") - parse_element("pr:3^inf:1/3"), PruferElement(3, Fraction(7, 9)))
        self.assertEqual(identity_of(parse_element("cyc:5:2")), CyclicElement(5, 0))
        with self.assertRaises(ParentMismatch):
            elem_add(parse_element("qz:1/2"), parse_element("q:1/2"))
        with self.assertRaises(ParentMismatch):
            elem_add(parse_element("cyc:4:1"), parse_element("cyc:6:1"))

    def test_order(self):
        self.assertEqual(elem_order(parse_element("qz:1/6")), 6)
        self.assertEqual(elem_order(parse_element("q:3/5")), INFINITE_ORDER)
        self.assertEqual(elem_order(parse_element("q:0")), 1)
        self.assertEqual(elem_order(parse_element("cyc:12:8")), 3)
        self.assertEqual(elem_order(parse_element("pr:5^inf:3/25")), 25)

    def test_divide(self):
        division = elem_divide(2, parse_element("qz:1/2"))
        self.assertEqual([str(y) for y in division.solutions], ["qz:1/4", "qz:3/4"])
        self.assertEqual(division.count, 2)
        self.assertFalse(division.truncated)
        division = elem_divide(3, parse_element("cyc:12:6"))
        self.assertEqual(division.solutions, [CyclicElement(12, 2), CyclicElement(12, 6), CyclicElement(12, 10)])
        division = elem_divide(6, parse_element("pr:2^inf:1/2"))
        self.assertEqual([str(y) for y in division.solutions], ["pr:2^inf:1/4", "pr:2^inf:3/4"])
        self.assertEqual(elem_divide(4, parse_element("z:8")).solutions, [IntegerElement(2)])
        self.assertEqual(elem_divide(3, parse_element("q:1")).solutions, [RationalElement(Fraction(1, 3))])
        with self.assertRaises(NoSolution):
            elem_divide(2, parse_element("cyc:4:1"))
        with self.assertRaises(NoSolution):
            elem_divide(2, parse_element("z:3"))
        with self.assertRaises(ValueError):
            elem_divide(0, parse_element("q:1"))

    def test_divide_truncates(self):
        with self.assertLogs("pyabel.elements.model", level="INFO"):
            division = elem_divide(10, parse_element("qz:0"), settings=Settings(enum_bound=5))
        self.assertTrue(division.truncated)
        self.assertEqual(division.count, 10)
        self.assertEqual(division.solutions, [RationalModOne(0)])

    @given(
        st.one_of(
            st.builds(lambda a, b: RationalElement(Fraction(a, b)), st.integers(-50, 50), st.integers(1, 50)),
            st.builds(lambda a, b: RationalModOne(Fraction(a, b)), st.integers(0, 50), st.integers(1, 50)),
            st.builds(lambda a, k: PruferElement(2, Fraction(a, 2**k)), st.integers(0, 64), st.integers(0, 6)),
            st.builds(lambda a, k: PruferElement(5, Fraction(a, 5**k)), st.integers(0, 125), st.integers(0, 3)),
        ),
        st.integers(1, 50),
    )
    @settings(max_examples=200, deadline=None)
    def test_divisible_groups_divide(self, x, n):
        division = elem_divide(n, x)
        self.assertFalse(division.truncated)
        self.assertEqual(division.count, len(division.solutions))
        self.assertEqual(len(set(division.solutions)), len(division.solutions))
        for y in division.solutions:
            self.assertEqual(y.scale(n), x)

    def test_chain_lift(self):
        x = parse_element("pr:3^inf:2/3")
        self.assertEqual(chain_lift(x), PruferElement(3, Fraction(2, 9)))
        self.assertEqual(chain_lift(x, 2), PruferElement(3, Fraction(2, 27)))
        self.assertEqual(chain_lift(PruferElement(3, 0)), PruferElement(3, Fraction(1, 3)))
        with self.assertRaises(ValueError):
            chain_lift(parse_element("qz:1/2"))
        with self.assertRaises(ValueError):
            chain_lift(x, 0)

    def test_divisibility_chain(self):
        chain = divisibility_chain(parse_element("pr:2^inf:1/2"))
        self.assertEqual([str(a) for a in chain], ["pr:2^inf:1/2", "pr:2^inf:1/4", "pr:2^inf:1/8", "pr:2^inf:1/16"])
        for a, b in zip(chain, chain[1:]):
            self.assertEqual(2 * b, a)
        self.assertEqual(len(divisibility_chain(chain[0], settings=Settings(chain_length=2))), 2)
        self.assertEqual(len(divisibility_chain(chain[0], 6)), 6)

    def test_rational_scale(self):
        self.assertEqual(rational_scale(Fraction(1, 2), parse_element("q:3")), RationalElement(Fraction(3, 2)))
        self.assertEqual(rational_scale(Fraction(1, 2), parse_element("z:4")), IntegerElement(2))
        with self.assertRaises(NoSolution):
            rational_scale(Fraction(1, 2), parse_element("z:3"))
        with self.assertRaises(NotTorsionFree):
            rational_scale(Fraction(1, 2), parse_element("qz:1/3"))
        with self.assertRaises(NotTorsionFree):
            rational_scale(2, parse_element("cyc:4:1"))

    def test_in_socle(self):
        self.assertTrue(in_socle(parse_element("cyc:12:2")))
        self.assertFalse(in_socle(parse_element("cyc:12:3")))
        self.assertTrue(in_socle(parse_element("qz:0")))
        self.assertTrue(in_socle(parse_element("qz:1/30")))
        self.assertFalse(in_socle(parse_element("q:1")))
        with self.assertRaises(BoundExceeded):
            in_socle(parse_element("cyc:1000:1"), settings=Settings(factor_bound=100))

    @given(
        st.lists(
            st.builds(lambda a, b: RationalModOne(Fraction(a, b)), st.integers(0, 60), st.integers(1, 60)).filter(
                in_socle
            ),
            min_size=2,
            max_size=2,
        )
    )
    @settings(max_examples=2000, deadline=None)
    def test_socle_closed(self, pair):
        x, y = pair
        self.assertTrue(in_socle(x - y))
        self.assertTrue(in_socle(x + y))

    def test_order_minimal(self):
        def check(x):
            k = elem_order(x).k
            self.assertTrue(elem_smul(k, x).is_zero)
            for p in factorize(k).primes:
                self.assertFalse(elem_smul(k // p, x).is_zero, (x, p))

        for m in range(1, 301):
            for r in range(m):
                check(CyclicElement(m, r))
        for b in range(1, 301):
            for a in range(b):
                check(RationalModOne(Fraction(a, b)))

    def test_prufer_divide_exhaustive(self):
        for p in (2, 3, 5):
            for n in range(1, 51):
                v = valuation(n, p)
                for k in range(3):
                    for a in range(p**k):
                        x = PruferElement(p, Fraction(a, p**k))
                        grid = [PruferElement(p, Fraction(b, p ** (k + v))) for b in range(p ** (k + v))]
                        expected = set(y for y in grid if elem_smul(n, y) == x)
                        division = elem_divide(n, x)
                        self.assertEqual(set(division.solutions), expected, (p, n, x))
                        self.assertEqual(division.count, p**v)

    @given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), st.integers(0, 4), st.integers(1, 4))
    @settings(max_examples=500, deadline=None)
    def test_chain_lift_inverts_smul(self, p, a, j, k):
        x = PruferElement(p, Fraction(a, p**j))
        y = chain_lift(x, k)
        self.assertEqual(elem_smul(p**k, y), x)
        self.assertEqual(elem_order(y).k, elem_order(x).k * p**k)

    def test_literals(self):
        for text in ["q:-3/5", "z:4", "qz:1/6", "pr:2^inf:3/8", "cyc:12:7"]:
            self.assertEqual(format_element(parse_element(text)), text)
        self.assertEqual(str(parse_element("qz:7/6")), "qz:1/6")
        self.assertEqual(str(parse_element("cyc:12:-1")), "cyc:12:11")
        for bad in ["q:1/0", "pr:4^inf:1/4", "pr:2^inf:1/3", "w:1", "cyc:0:1", "q:1 junk"]:
            with self.assertRaises(ParseError):
                parse_element(bad)

    def test_sum_elements(self):
        group = "Q/Z (+) Q^aleph0"
        x = parse_element("{pos0.tag0=qz:1/2, pos1.tag3=q:1/3}", group)
        self.assertEqual(str(x), "{pos0.tag0=qz:1/2, pos1.tag3=q:1/3}")
        self.assertEqual(x[(1, 3)], RationalElement(Fraction(1, 3)))
        self.assertEqual(x[(1, 7)], RationalElement(0))
        self.assertEqual(elem_order(x), INFINITE_ORDER)
        y = parse_element("{pos1.tag3=q:2/3, pos0.tag0=qz:1/2}", group)
        self.assertEqual(str(x + y), "{pos1.tag3=q:1}")
        self.assertEqual(x.scale(0), SumGroup(parse(group)).zero())
        division = elem_divide(2, x)
        self.assertEqual(division.count, 2)
        self.assertEqual(
            [str(s) for s in division.solutions],
            ["{pos0.tag0=qz:1/4, pos1.tag3=q:1/6}", "{pos0.tag0=qz:3/4, pos1.tag3=q:1/6}"],
        )
        for s in division.solutions:
            self.assertEqual(2 * s, x)

    def test_sum_division_counts(self):
        group = SumGroup(parse("Z/2^2"))
        division = elem_divide(2, group.zero())
        self.assertEqual(division.count, 4)
        self.assertEqual(len(division.solutions), 4)
        x = parse_element("{pos0.tag0=qz:1/3}", "Q/Z^aleph0")
        division = elem_divide(2, x)
        self.assertEqual(division.count, ALEPH0)
        self.assertTrue(division.truncated)
        self.assertEqual(2 * division.solutions[0], x)

    def test_sum_errors(self):
        with self.assertRaises(NoElementModel):
            SumGroup(parse("R (+) Q"))
        with self.assertRaises(ParseError):
            parse_element("{pos0.tag0=qz:1/2}")
        with self.assertRaises(ParseError):
            parse_element("{pos0.tag0=qz:1/2", "Q/Z")
        with self.assertRaises(ParseError):
            parse_element("{pos0.tag1=qz:1/2}", "Q/Z")
        with self.assertRaises(ParseError):
            parse_element("{pos0.tag0=q:1/2}", "Q/Z")
        a = parse_element("{pos0.tag0=q:1}", "Q^2")
        b = parse_element("{pos0.tag0=q:1}", "Q^3")
        with self.assertRaises(ParentMismatch):
            a + b
        with self.assertRaises(NotTorsionFree):
            rational_scale(2, parse_element("{pos0.tag0=q:1}", "Q (+) Z/2"))
        self.assertEqual(
            rational_scale(Fraction(1, 2), a), parse_element("{pos0.tag0=q:1/2}", "Q^2")
        )


class StructureTests(unittest.TestCase):
    def test_is_divisible(self):
        self.assertEqual(is_divisible(parse("Z")), (False, (Z, 2)))
        self.assertEqual(is_divisible(parse("Q (+) Z/12")), (False, (cyclic(12), 2)))
        self.assertEqual(is_divisible(parse("Q (+) Z/9")), (False, (cyclic(9), 3)))
        self.assertEqual(is_divisible(parse("C* (+) Q/Z (+) Z/1")), (True, None))

    def test_torsion_split(self):
        torsion, free = torsion_split(parse("C* (+) Z"))
        self.assertEqual(str(torsion), "Q/Z")
        self.assertEqual(str(free), "Q^c (+) Z")
        self.assertEqual(torsion_split(parse("Q")), (ZERO_GROUP, Q))

    @given(group_exprs)
    @settings(max_examples=200, deadline=None)
    def test_torsion_split_coherence(self, expr):
        torsion, free = torsion_split(expr)
        self.assertEqual(classify(Sum([torsion, free])).normal, classify(expr).normal)
        self.assertTrue(classify(torsion).is_torsion)
        self.assertTrue(classify(free).is_torsion_free)
        if classify(expr).is_divisible:
            self.assertTrue(is_divisible(torsion).divisible)

    def test_split_divisible(self):
        divisible, reduced = split_divisible(parse("Z (+) Q (+) Z/4 (+) Z(2^inf) (+) Z/1"))
        self.assertEqual(str(divisible), "Q (+) Z(2^inf)")
        self.assertEqual(str(reduced), "Z (+) Z/4")
        self.assertTrue(classify(reduced).is_reduced)

    @given(group_exprs)
    @settings(max_examples=300, deadline=None)
    def test_split_divisible_fuzzed(self, expr):
        divisible, reduced = split_divisible(expr)
        self.assertTrue(is_divisible(divisible).divisible)
        self.assertTrue(classify(reduced).is_reduced)
        self.assertEqual(classify(Sum([divisible, reduced])).normal, classify(expr).normal)

    def test_primary_decompose_expr(self):
        decomposition = primary_decompose_expr(parse("Z/12 (+) Q/Z"))
        self.assertEqual([p for p, _ in decomposition.components], [2, 3])
        self.assertEqual(
            decomposition.describe(),
            "T_2 = Z/4 (+) Z(2^inf); T_3 = Z/3 (+) Z(3^inf); T_p = Z(p^inf) for every other prime p",
        )
        self.assertEqual(decomposition.normal_form(), normalize(parse("Z/12 (+) Q/Z")))
        decomposition = primary_decompose_expr(parse("Z/12"))
        self.assertEqual([(p, str(c)) for p, c in decomposition.components], [(2, "Z/4"), (3, "Z/3")])
        self.assertEqual(decomposition.default, ZERO)
        self.assertEqual(primary_decompose_expr(parse("Q/Z")).describe(), "T_p = Z(p^inf) for every prime p")
        with self.assertRaises(NotTorsion) as cm:
            primary_decompose_expr(parse("Z/2 (+) Q"))
        self.assertEqual(cm.exception.atom, Q)

    def test_primary_decompose_element(self):
        parts = primary_decompose_element(parse_element("cyc:12:1"))
        self.assertEqual(parts, [(2, CyclicElement(12, 9)), (3, CyclicElement(12, 4))])
        parts = dict(primary_decompose_element(parse_element("qz:1/6")))
        self.assertEqual(parts, {2: RationalModOne(Fraction(1, 2)), 3: RationalModOne(Fraction(2, 3))})
        self.assertEqual(primary_decompose_element(parse_element("qz:0")), [])
        self.assertEqual(p_component_element(parse_element("qz:1/6"), 3), RationalModOne(Fraction(2, 3)))
        self.assertEqual(p_component_element(parse_element("qz:1/6"), 5), RationalModOne(0))
        with self.assertRaises(InfiniteOrder):
            primary_decompose_element(parse_element("q:1"))

    def test_primary_decomposition_matches_oracle(self):
        for m in range(1, 301):
            idempotents = {p: brute_force_modulus(m, q) for p, q in factorize(m).prime_powers()}
            for g in range(m):
                x = CyclicElement(m, g)
                parts = dict(primary_decompose_element(x))
                total = x.zero()
                for p, part in parts.items():
                    order = part.order().k
                    self.assertEqual(order, p ** factorize(order).pairs[0][1] if order > 1 else 1)
                    total = total + part
                self.assertEqual(total, x)
                for p, e in idempotents.items():
                    self.assertEqual(parts.get(p, x.zero()), CyclicElement(m, g * e))

    def test_rationals_mod_one_decompose(self):
        for b in range(1, 201):
            for a in range(b):
                x = RationalModOne(Fraction(a, b))
                parts = primary_decompose_element(x)
                total = x.zero()
                for p, part in parts:
                    self.assertEqual(factorize(part.order().k).primes, [p])
                    total = total + part
                self.assertEqual(total, x)

    @given(
        st.builds(Fraction, st.integers(0, 500), st.integers(1, 200)),
        st.builds(Fraction, st.integers(0, 500), st.integers(1, 200)),
    )
    @settings(max_examples=500, deadline=None)
    def test_rationals_mod_one_decompose_additive(self, a, b):
        x, y = RationalModOne(a), RationalModOne(b)
        px = dict(primary_decompose_element(x))
        py = dict(primary_decompose_element(y))
        pxy = dict(primary_decompose_element(x + y))
        zero = x.zero()
        for p in set(px) | set(py) | set(pxy):
            self.assertEqual(pxy.get(p, zero), px.get(p, zero) + py.get(p, zero))

    def test_socle(self):
        socle = socle_expr(parse("Z/12 (+) Z(5^inf) (+) Q/Z"))
        self.assertEqual(str(socle), "Z/2 (+) Z/3 (+) Z/5 (+) (+)_p Z/p")
        self.assertEqual(str(socle_expr(parse("Q/Z"))), "(+)_p Z/p")
        self.assertEqual(str(socle_expr(parse("Q (+) Z"))), "0")
        self.assertEqual(str(socle_expr(parse("Q/Z^2"))), "(+)_p (Z/p)^2")
        self.assertEqual(socle_expr(parse("C*")).to_json(), {"expr": "0", "every_prime": {"finite": 1}})

    def test_socle_is_essential(self):
        for p in (2, 3, 5, 7, 11, 13):
            for k in itertools.count(1):
                m = p**k
                if m > 256:
                    break
                self.assertEqual(socle_expr(cyclic(m)).expr, cyclic(p))
                socle = set(r for r in range(m) if in_socle(CyclicElement(m, r)))
                self.assertEqual(len(socle), p)
                for g in range(1, m):
                    subgroup = set((c * g) % m for c in range(m))
                    self.assertTrue((subgroup & socle) - {0}, (m, g))
        for m in [p for p in range(17, 256) if factorize(p).pairs == ((p, 1),)]:
            self.assertEqual(socle_expr(cyclic(m)).expr, cyclic(m))

    def test_classify(self):
        report = classify(parse("Q/Z"))
        self.assertEqual(report.normal.default_prufer, ONE)
        self.assertEqual(report.n, ZERO)
        self.assertTrue(report.is_divisible)
        self.assertTrue(report.is_torsion)
        report = classify(parse("Z^2 (+) Q (+) Z(3^inf)"))
        self.assertEqual(report.torsion_free_rank, 3)
        self.assertEqual(report.m_p(3), 1)
        self.assertEqual(report.m_p(2), 0)
        self.assertFalse(report.is_divisible)
        self.assertFalse(report.is_reduced)
        data = classify(parse("C*")).to_json()
        self.assertEqual(data["m_p_default"], {"finite": 1})
        self.assertEqual(data["n"], "continuum")
        self.assertTrue(data["is_divisible"])

    def test_isomorphism_claims(self):
        self.assertTrue(is_isomorphic(parse("C*"), parse("S^1")))
        self.assertTrue(is_isomorphic(parse("R"), parse("R^2")))
        self.assertFalse(is_isomorphic(parse("R"), parse("S^1")))
        self.assertFalse(is_isomorphic(parse("Z(2^inf)"), parse("Z(3^inf)")))
        self.assertFalse(is_isomorphic(parse("Q"), parse("Q/Z")))
        self.assertTrue(is_isomorphic(parse("Z/6"), parse("Z/2 (+) Z/3")))
        self.assertFalse(is_isomorphic(parse("Z/4"), parse("Z/2^2")))
        self.assertTrue(is_isomorphic(parse("C*"), parse("Q/Z (+) R")))

    def test_isomorphism_is_equivalence(self):
        corpus = [
            parse(text)
            for text in [
                "C*",
                "S^1",
                "Q/Z (+) R",
                "R",
                "R^2",
                "Q^c",
                "Q",
                "Q^2",
                "Q/Z",
                "Z(2^inf) (+) Z(3^inf)",
                "Z/6",
                "Z/2 (+) Z/3",
                "Z/4",
                "Z/2^2",
                "Z",
                "0",
                "Z/1",
                "Q (+) Q^aleph0",
                "Q^aleph0",
                "(Q/Z)^2 (+) Q^c",
            ]
        ]
        iso = [[is_isomorphic(a, b) for b in corpus] for a in corpus]
        indices = range(len(corpus))
        for i in indices:
            self.assertTrue(iso[i][i])
            for j in indices:
                self.assertEqual(iso[i][j], iso[j][i])
                for k in indices:
                    if iso[i][j] and iso[j][k]:
                        self.assertTrue(iso[i][k], (i, j, k))
        self.assertTrue(iso[0][2])
        self.assertTrue(iso[3][5])
        self.assertTrue(iso[15][16])
        self.assertFalse(iso[8][19])

    def test_divisible_hull(self):
        self.assertEqual(str(divisible_hull(parse("Z^2 (+) Z/12"))), "Q^2 (+) Z(2^inf) (+) Z(3^inf)")
        self.assertEqual(divisible_hull(parse("Z/1")), ZERO_GROUP)
        with self.assertRaises(NotFinitelyGenerated):
            divisible_hull(parse("Q"))
        with self.assertRaises(NotFinitelyGenerated):
            divisible_hull(parse("Z^aleph0"))

    def test_count_solutions(self):
        for p in (2, 3, 5, 7):
            for k in range(1, 6):
                count = count_division_solutions(prufer(p), p**k)
                self.assertEqual(count, p**k)
                kernel = elem_divide(p**k, PruferElement(p, 0)).solutions
                self.assertEqual(set(kernel), set(PruferElement(p, Fraction(a, p**k)) for a in range(p**k)))
        self.assertEqual(count_division_solutions(parse("Q/Z"), 6), 6)
        self.assertEqual(count_division_solutions(parse("C*"), 8), 8)
        self.assertEqual(count_division_solutions(parse("Q^c"), 5), 1)
        self.assertEqual(count_division_solutions(parse("Z(2^inf)^aleph0"), 2), ALEPH0)
        self.assertEqual(count_division_solutions(parse("Z(2^inf)^2 (+) Z(3^inf)"), 6), 12)
        with self.assertRaises(NotDivisible) as cm:
            count_division_solutions(parse("Q (+) Z"), 2)
        self.assertEqual(cm.exception.witness, (Z, 2))

    @given(
        divisible_exprs,
        st.tuples(st.integers(1, 60), st.integers(1, 60)).filter(lambda mn: gcd(*mn) == 1),
    )
    @settings(max_examples=300, deadline=None)
    def test_count_solutions_multiplicative(self, expr, mn):
        m, n = mn
        self.assertEqual(
            count_division_solutions(expr, m * n),
            card_mul(count_division_solutions(expr, m), count_division_solutions(expr, n)),
        )

    def test_solution_profile(self):
        profile = solution_profile(parse("Q/Z"), [2, 3], 2)
        self.assertEqual(profile, {(2, 1): 2, (2, 2): 4, (3, 1): 3, (3, 2): 9})
        with self.assertRaises(NotDivisible):
            solution_profile(parse("Z/2"), [2], 1)

    def test_isomorphic_by_counts(self):
        self.assertTrue(isomorphic_by_counts(parse("C*"), parse("S^1")))
        self.assertFalse(isomorphic_by_counts(parse("Q"), parse("Q^2")))
        self.assertFalse(isomorphic_by_counts(parse("Q/Z"), parse("Z(2^inf)")))
        self.assertFalse(isomorphic_by_counts(parse("Q/Z"), parse("Q/Z (+) Z(2^inf)")))
        with self.assertRaises(NotDivisible):
            isomorphic_by_counts(parse("Z"), parse("Q"))

    @given(divisible_exprs, divisible_exprs)
    @settings(max_examples=200, deadline=None)
    def test_counts_agree_with_invariants(self, a, b):
        self.assertEqual(isomorphic_by_counts(a, b), is_isomorphic(a, b))
        self.assertTrue(isomorphic_by_counts(a, a))

    def test_cardinality(self):
        self.assertEqual(group_cardinality(parse("Z/2 (+) Z/3")), 6)
        self.assertEqual(group_cardinality(parse("0")), 1)
        self.assertEqual(group_cardinality(parse("Q")), ALEPH0)
        self.assertEqual(group_cardinality(parse("Z/2^aleph0")), ALEPH0)
        self.assertEqual(group_cardinality(parse("Z/2^c")), CONTINUUM)
        self.assertEqual(group_cardinality(parse("S^1 (+) Z")), CONTINUUM)
        self.assertEqual(group_cardinality(parse("Z/5^3")), 125)


class MatrixTests(unittest.TestCase):
    def test_smith_normal_form(self):
        A = IntMatrix([[2, 0], [0, 3]])
        snf = smith_normal_form(A)
        self.assertEqual(snf.D, IntMatrix.diagonal(1, 6))
        self.assertEqual(snf.U @ A @ snf.V, snf.D)
        zero = smith_normal_form(IntMatrix.zeros(2, 3))
        self.assertEqual(zero.D, IntMatrix.zeros(2, 3))
        self.assertEqual(zero.U, IntMatrix.identity(2))
        self.assertEqual(invariant_factors(IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])), [2, 6, 12])

    @given(
        st.integers(1, 6).flatmap(
            lambda rows: st.integers(1, 6).flatmap(
                lambda cols: st.lists(
                    st.lists(st.integers(-20, 20), min_size=cols, max_size=cols), min_size=rows, max_size=rows
                )
            )
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_smith_normal_form_certificates(self, entries):
        A = IntMatrix(entries)
        U, D, V = smith_normal_form(A)
        self.assertEqual(U @ A @ V, D)
        self.assertEqual(abs(U.determinant()), 1)
        self.assertEqual(abs(V.determinant()), 1)
        self.assertTrue(D.is_diagonal())
        diagonal = D.diagonal_entries()
        self.assertTrue(all(d >= 0 for d in diagonal))
        for d, e in zip(diagonal, diagonal[1:]):
            if d:
                self.assertEqual(e % d, 0)
            else:
                self.assertEqual(e, 0)
        self.assertEqual(sum(1 for d in diagonal if d), Matrix(entries).rank())

    def test_fp_classify(self):
        self.assertTrue(is_isomorphic(fp_classify(IntMatrix.diagonal(2, 3)), parse("Z/6")))
        self.assertEqual(fp_classify(IntMatrix([[2, 0], [0, 3]])), cyclic(6))
        self.assertEqual(str(fp_classify(IntMatrix([[1, 0, 0], [0, 2, 0]]))), "Z (+) Z/2")
        self.assertEqual(fp_classify(IntMatrix([], 0, 2)), Power(Z, 2))
        self.assertEqual(fp_classify(IntMatrix([[1]])), ZERO_GROUP)

    def test_matrix_json(self):
        A = IntMatrix.from_json('{"rows": 2, "cols": 2, "entries": [[1, 2], [3, 4]]}')
        self.assertEqual(A, IntMatrix([[1, 2], [3, 4]]))
        self.assertEqual(IntMatrix.from_json(A.to_json()), A)
        self.assertEqual(A.transpose(), IntMatrix([[1, 3], [2, 4]]))
        self.assertEqual(A.determinant(), -2)
        for bad in ['{"rows": 1}', "not json", '{"rows": 1, "cols": 1, "entries": [[true]]}',
                    '{"rows": 2, "cols": 1, "entries": [[1]]}']:
            with self.assertRaises(MatrixFormatError):
                IntMatrix.from_json(bad)
        with self.assertRaises(MatrixFormatError):
            IntMatrix.load("/nonexistent/matrix.json")


def field_independent(vectors, p):
    nonzero = [v for v in vectors if v != (0, 0)]
    if len(nonzero) <= 1:
        return True
    if len(nonzero) == 2:
        (a, b), (c, d) = nonzero
        return (a * d - b * c) % p != 0
    return False


class IndependenceTests(unittest.TestCase):
    def test_torsion(self):
        self.assertEqual(is_independent_torsion([parse_element("qz:1/2"), parse_element("qz:1/3")]), (True, None))
        verdict = is_independent_torsion([parse_element("qz:1/2"), parse_element("qz:1/4")])
        self.assertFalse(verdict.independent)
        self.assertEqual(verdict.certificate, [1, 2])
        self.assertTrue(is_independent_torsion([]).independent)
        with self.assertRaises(InfiniteOrder):
            is_independent_torsion([parse_element("q:1")])
        with self.assertRaises(BoundExceeded):
            is_independent_torsion(
                [parse_element("qz:1/2"), parse_element("qz:1/3")], settings=Settings(enum_bound=5)
            )
        with self.assertRaises(ParentMismatch):
            is_independent_torsion([parse_element("qz:1/2"), parse_element("cyc:2:1")])

    def test_torsion_matches_field_rank(self):
        for p in (2, 3, 5):
            group = SumGroup(parse("Z/{}^2".format(p)))
            vectors = [(a, b) for a in range(p) for b in range(p)]
            elements = [
                SumElement(group, {(0, 0): CyclicElement(p, a), (0, 1): CyclicElement(p, b)}) for a, b in vectors
            ]
            for size in (1, 2, 3):
                for combo in itertools.combinations(range(len(vectors)), size):
                    verdict = is_independent_torsion([elements[i] for i in combo])
                    expected = field_independent([vectors[i] for i in combo], p)
                    self.assertEqual(verdict.independent, expected, (p, combo))
                    if not verdict.independent:
                        terms = [elements[i].scale(c) for i, c in zip(combo, verdict.certificate)]
                        self.assertTrue(any(not t.is_zero for t in terms))
                        self.assertTrue(sum(terms[1:], terms[0]).is_zero)

    def test_rational(self):
        self.assertEqual(is_independent_rational([[1, 0], [0, 1]]), (True, None))
        self.assertEqual(is_independent_rational([[1, 0], [0, 1], [1, 1]]), (False, [1, 1, -1]))
        self.assertEqual(is_independent_rational([[2, 4], [1, 2]]), (False, [1, -2]))
        self.assertEqual(is_independent_rational([[Fraction(1, 2), 1], [1, 2]]), (False, [2, -1]))
        self.assertEqual(is_independent_rational([[0, 0]]), (False, [1]))
        self.assertTrue(is_independent_rational([]).independent)
        with self.assertRaises(DimensionMismatch):
            is_independent_rational([[1], [1, 2]])

    def test_max_independent_subset(self):
        self.assertEqual(max_independent_subset([[1, 0], [2, 0], [0, 1]]), [0, 2])
        self.assertEqual(max_independent_subset([[0, 0], [0, 0]]), [])
        self.assertEqual(max_independent_subset([[3, 1]]), [0])
        self.assertEqual(max_independent_subset([]), [])
        with self.assertRaises(DimensionMismatch):
            max_independent_subset([[1], [1, 2]])

    @given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), max_size=5))
    @settings(max_examples=200, deadline=None)
    def test_max_independent_subset_is_maximal(self, vs):
        chosen = max_independent_subset(vs)
        self.assertEqual(len(chosen), Matrix(vs).rank() if vs else 0)
        self.assertTrue(is_independent_rational([vs[i] for i in chosen]).independent)
        for j in range(len(vs)):
            if j not in chosen:
                self.assertFalse(is_independent_rational([vs[i] for i in chosen] + [vs[j]]).independent)
        self.assertEqual(len(max_independent_subset(list(reversed(vs)))), len(chosen))

    def test_dispatch(self):
        self.assertTrue(is_independent([parse_element("qz:1/2"), parse_element("qz:1/3")]).independent)
        self.assertEqual(is_independent([parse_element("q:1"), parse_element("q:2")]), (False, [2, -1]))
        self.assertEqual(is_independent([parse_element("z:0"), parse_element("z:3")]), (True, None))
        self.assertTrue(is_independent([]).independent)
        group = "Q^2"
        a = parse_element("{pos0.tag0=q:1}", group)
        b = parse_element("{pos0.tag1=q:1}", group)
        c = parse_element("{pos0.tag0=q:1, pos0.tag1=q:1}", group)
        self.assertTrue(is_independent([a, b]).independent)
        self.assertEqual(is_independent([a, b, c]), (False, [1, 1, -1]))
        self.assertEqual(is_independent([a, SumGroup(parse(group)).zero(), a]), (False, [1, 0, -1]))
        mixed = "Q (+) Q/Z"
        with self.assertRaises(UnsupportedMix):
            is_independent([parse_element("{pos0.tag0=q:1}", mixed), parse_element("{pos1.tag0=qz:1/2}", mixed)])
        with self.assertRaises(UnsupportedMix):
            is_independent([parse_element("{pos0.tag0=q:1}", mixed)])


class CommandLineTests(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke_json(self, *args):
        result = self.runner.invoke(app, ["--json"] + list(args))
        return result, json.loads(result.stdout)

    def test_iso_text(self):
        result = self.runner.invoke(app, ["iso", "C*", "S^1"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, "isomorphic: true\n")
        result = self.runner.invoke(app, ["iso", "R", "S^1"])
        self.assertEqual(result.stdout, "isomorphic: false\n")

    def test_invariants_json(self):
        result, payload = self.invoke_json("invariants", "Q/Z")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["command"], "invariants")
        self.assertEqual(payload["input"], {"expr": "Q/Z"})
        self.assertIsNone(payload["error"])
        self.assertEqual(payload["result"]["m_p_default"], {"finite": 1})
        self.assertEqual(payload["result"]["n"], {"finite": 0})

    def test_parse_error(self):
        result, payload = self.invoke_json("iso", "Z(2^inf", "Q")
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(payload["error"]["kind"], "ParseError")
        self.assertIn("offset 7", payload["error"]["message"])
        self.assertIsNone(payload["result"])
        result = self.runner.invoke(app, ["iso", "Z(2^inf", "Q"])
        self.assertEqual(result.exit_code, 2)

    def test_domain_errors(self):
        result, payload = self.invoke_json("hull", "Q")
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(payload["error"]["kind"], "NotFinitelyGenerated")
        result, payload = self.invoke_json("count-solutions", "Z", "2")
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(payload["error"]["kind"], "NotDivisible")
        result, payload = self.invoke_json("--max-factor-bound", "10", "normalize", "Z/12")
        self.assertEqual(payload["error"]["kind"], "BoundExceeded")
        result, payload = self.invoke_json("snf", '{"rows": 1}')
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(payload["error"]["kind"], "MatrixFormatError")

    def test_structure_commands(self):
        self.assertEqual(self.invoke_json("normalize", "Z/6 (+) S^1")[1]["result"]["expr"], "Z/2 (+) Z/3 (+) Q/Z (+) Q^c")
        self.assertEqual(
            self.invoke_json("torsion", "C* (+) Z")[1]["result"], {"torsion": "Q/Z", "torsion_free": "Q^c (+) Z"}
        )
        self.assertEqual(
            self.invoke_json("split-divisible", "Z (+) Q")[1]["result"], {"divisible": "Q", "reduced": "Z"}
        )
        self.assertEqual(self.invoke_json("socle", "Q/Z")[1]["result"]["every_prime"], {"finite": 1})
        self.assertEqual(self.invoke_json("hull", "Z/4")[1]["result"], "Z(2^inf)")
        self.assertEqual(self.invoke_json("count-solutions", "Z(3^inf)", "9")[1]["result"], {"finite": 9})
        self.assertEqual(self.invoke_json("cardinality", "R")[1]["result"], "continuum")
        primary = self.invoke_json("primary", "Z/12")[1]["result"]
        self.assertEqual(primary["components"], [{"p": 2, "component": "Z/4"}, {"p": 3, "component": "Z/3"}])
        result = self.runner.invoke(app, ["primary", "Q/Z"])
        self.assertEqual(result.stdout, "T_p = Z(p^inf) for every prime p\n")

    def test_element_commands(self):
        self.assertEqual(self.invoke_json("order", "qz:1/6")[1]["result"], {"finite": 6})
        self.assertEqual(self.invoke_json("order", "q:1")[1]["result"], "infinite")
        self.assertEqual(self.invoke_json("add", "qz:1/2", "qz:2/3")[1]["result"], "qz:1/6")
        self.assertEqual(self.invoke_json("smul", "3", "cyc:12:7")[1]["result"], "cyc:12:9")
        divide = self.invoke_json("divide", "2", "qz:1/2")[1]["result"]
        self.assertEqual(divide, {"solutions": ["qz:1/4", "qz:3/4"], "count": {"finite": 2}, "truncated": False})
        divide = self.invoke_json("--max-enum", "1", "divide", "2", "qz:1/2")[1]["result"]
        self.assertEqual(divide, {"solutions": ["qz:1/4"], "count": {"finite": 2}, "truncated": True})
        parts = self.invoke_json("decompose-element", "cyc:12:1")[1]["result"]
        self.assertEqual(parts, [{"p": 2, "component": "cyc:12:9"}, {"p": 3, "component": "cyc:12:4"}])
        added = self.invoke_json("add", "{pos0.tag0=q:1}", "{pos0.tag1=q:1}", "--group", "Q^2")[1]["result"]
        self.assertEqual(added, "{pos0.tag0=q:1, pos0.tag1=q:1}")
        self.assertEqual(self.invoke_json("lift", "pr:2^inf:1/2")[1]["result"], "pr:2^inf:1/4")
        chain = self.invoke_json("lift", "pr:3^inf:1/3", "--chain", "3")[1]["result"]
        self.assertEqual(chain, ["pr:3^inf:1/3", "pr:3^inf:1/9", "pr:3^inf:1/27"])
        result, payload = self.invoke_json("add", "qz:1/2", "q:1")
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(payload["error"]["kind"], "ParentMismatch")

    def test_independent_command(self):
        payload = self.invoke_json("independent", "qz:1/2", "qz:1/4")[1]
        self.assertEqual(payload["result"], {"independent": False, "certificate": [1, 2]})
        result = self.runner.invoke(app, ["independent", "--vectors", "1,0", "2,0", "0,1"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(
            result.stdout,
            "independent: false\ncertificate: 2 -1 0\nmaximal independent subset: 0 2\n",
        )

    def test_matrix_commands(self):
        matrix = '{"rows": 2, "cols": 2, "entries": [[2, 0], [0, 3]]}'
        payload = self.invoke_json("snf", matrix)[1]
        self.assertEqual(payload["result"]["D"]["entries"], [[1, 0], [0, 6]])
        result = self.runner.invoke(app, ["classify-fp", matrix])
        self.assertEqual(result.stdout, "Z/6\n")
        with tempfile.TemporaryDirectory() as root:
            path = os.path.join(root, "relations.json")
            with open(path, "w") as f:
                f.write('{"rows": 1, "cols": 2, "entries": [[4, 0]]}')
            self.assertEqual(self.invoke_json("classify-fp", "--matrix-file", path)[1]["result"], "Z (+) Z/4")

    def test_config_file(self):
        with tempfile.TemporaryDirectory() as root:
            path = os.path.join(root, "settings.json")
            with open(path, "w") as f:
                json.dump({"settings": {"enum_bound": 1}}, f)
            payload = self.invoke_json("--config", path, "divide", "2", "qz:1/2")[1]
            self.assertTrue(payload["result"]["truncated"])
            result = self.runner.invoke(app, ["--config", os.path.join(root, "missing.json"), "iso", "Q", "Q"])
            self.assertEqual(result.exit_code, 1)

    def test_usage_errors(self):
        result = self.runner.invoke(app, ["frobnicate"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("subcommands", result.output)
        self.assertIn("cardinality", result.output)
        for args in (["divide", "0", "q:1"], ["count-solutions", "Q", "0"], ["lift", "pr:2^inf:1/2", "0"]):
            result = self.runner.invoke(app, args)
            self.assertEqual(result.exit_code, 2, args)
        self.assertEqual(run(["frobnicate"]), (None, 2))
        self.assertEqual(run(["divide", "0", "q:1"])[1], 2)
        self.assertEqual(run(["count-solutions", "Q", "0"])[1], 2)
        self.assertEqual(run(["--help"]), (None, 0))

    def test_run(self):
        outcome, code = run(["--json", "iso", "C*", "S^1"])
        self.assertEqual(code, 0)
        self.assertTrue(outcome.ok)
        self.assertIs(outcome.result, True)
        outcome, code = run(["iso", "Z(2^inf", "Q"])
        self.assertEqual(code, 2)
        self.assertEqual(outcome.error["kind"], "ParseError")
        outcome, code = run(["hull", "Q"])
        self.assertEqual(code, 1)

    def test_deterministic(self):
        args = ["--json", "primary", "Z/360 (+) Q/Z^2 (+) Z(7^inf)"]
        first = self.runner.invoke(app, args).stdout
        second = self.runner.invoke(app, args).stdout
        self.assertEqual(first, second)


if __name__ == "__main__":
    unittest.main()
