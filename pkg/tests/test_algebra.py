from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clansing.algebra import (
    Polynomial, Ring, buchberger, contains, dimension, linear_part_rank_at_origin,
    normal_form, parse_polynomial, radical_member, rank_of_rows,
)
from clansing.algebra.groebner import _Budget, _Poly, _reduce, _spoly
from clansing.algebra.polynomial import ORDERS
from clansing.errors import NonVanishingAtOrigin, ResourceLimit

R3 = Ring(("x", "y", "z"))
x, y, z = R3.gens()


def P(text, ring=R3):
    return parse_polynomial(text, ring)


@st.composite
def polys(draw, ring=R3, max_terms=4, max_exp=2):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        m = tuple(draw(st.integers(0, max_exp)) for _ in range(ring.nvars))
        c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
        terms[m] = terms.get(m, 0) + c
    return Polynomial(ring, terms)


def to_sympy(f, syms):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** e for s, e in zip(syms, m)])
               for m, c in f.terms.items())


class TestArithmetic:
    @given(polys(), polys(), polys())
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == R3.zero()
        assert a * R3.one() == a

    @given(polys(), polys())
    @settings(max_examples=40)
    def test_matches_sympy(self, a, b):
        syms = sympy.symbols("x y z")
        assert sympy.expand(to_sympy(a * b, syms) - to_sympy(a, syms) * to_sympy(b, syms)) == 0

    def test_rendering(self):
        f = P("x^2 + 2*x*y - 1/2*z")
        assert f.to_str() == "x^2+2xy-\\frac{1}{2}z"
        assert f.to_str(style="plain") == "x^2+2*x*y-1/2*z"
        assert parse_polynomial(f.to_str(style="plain"), R3) == f

    def test_m2_names(self):
        ring = Ring(("z_{3,2}", "z_{5,5}"))
        f = ring.gen(0) * ring.gen(1) - ring.const(Fraction(1, 2))
        assert f.to_str(style="m2") == "z_(3,2)*z_(5,5)-(1/2)"

    def test_primitive(self):
        f = P("-1/8*x*y - 1/8*z + 1/4*x")
        assert f.primitive() == P("x*y + z - 2*x")

    def test_json_round_trip(self):
        f = P("3*x^2*y - 5/7*z + 1")
        assert Polynomial.from_json_obj(f.to_json_obj()) == f

    def test_zero_coefficients_dropped(self):
        assert Polynomial(R3, {(1, 0, 0): 0}).is_zero()
        assert len(x + y - x) == 1

    def test_evaluate_and_linear_part(self):
        f = P("x*y + 3*z - 2*x + 5")
        assert f.evaluate([1, 2, 3]) == 1 * 2 + 9 - 2 + 5
        assert f.linear_part() == {0: -2, 2: 3}
        assert f.constant_term() == 5

    def test_ring_mismatch(self):
        other = Ring(("a",))
        with pytest.raises(ValueError):
            x + other.gen(0)


def sympy_basis(gens, order, syms):
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order=order, domain="QQ")
    return {sympy.expand(g / sympy.Poly(g, *syms).LC(order=order)) for g in G.exprs}


class TestGroebner:
    @pytest.mark.parametrize("order", ["grevlex", "lex"])
    @pytest.mark.parametrize("gens", [
        ["x^2 - y", "x*y - z", "y^2 - x*z"],
        ["x*y - 1", "y*z - x"],
        ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
        ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
    ])
    def test_against_sympy(self, gens, order):
        fs = [P(g) for g in gens]
        gb = buchberger(fs, order=order)
        syms = sympy.symbols("x y z")
        ours = {sympy.expand(to_sympy(g, syms)) for g in gb.generators}
        assert ours == sympy_basis(fs, "grevlex" if order == "grevlex" else "lex", syms)

    def test_single_generator_is_its_own_basis(self):
        ring = Ring(("z_{3,2}", "z_{4,2}", "z_{5,5}", "z_{5,6}"))
        a, b, c, d = ring.gens()
        f = a * c + b * d
        gb = buchberger([f])
        assert gb.generators == (f,)
        assert gb.dimension == 3

    def test_duplicates(self):
        assert buchberger([x, x]).generators == (x,)

    def test_unit_ideal(self):
        gb = buchberger([x, x - 1])
        assert gb.is_unit
        assert dimension(gb) == -1

    def test_output_is_reduced_and_closed(self):
        fs = [P("x^2 - y"), P("x*y - z"), P("y^2 - x*z")]
        gb = buchberger(fs)
        key = ORDERS["grevlex"]
        polys_ = [_Poly(g.terms, key) for g in gb.generators]
        for f in fs:
            assert contains(gb, f)
        for i, f in enumerate(polys_):
            assert f.lc == 1
            for g in polys_[i + 1:]:
                assert not _reduce(_spoly(f, g), polys_, key, _Budget(10**6))
                assert not all(a <= b for a, b in zip(f.lm, g.lm))
                assert not all(a <= b for a, b in zip(g.lm, f.lm))

    def test_normal_form(self):
        gb = buchberger([P("x^2 - y")])
        assert normal_form(P("x^3"), gb) == P("x*y")
        assert normal_form(R3.one(), gb) == R3.one()
        f = P("x*y*z + y^3 - 1")
        assert normal_form(f, buchberger([f])).is_zero()

    def test_budget(self):
        fs = [P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")]
        with pytest.raises(ResourceLimit):
            buchberger(fs, budget=3)

    @pytest.mark.parametrize("gens,dim", [
        ([], 3), (["x", "y", "z"], 0), (["x*y"], 2), (["x", "y*z"], 1), (["x^2 - y", "x*y - z"], 1),
    ])
    def test_dimension(self, gens, dim):
        gb = buchberger([P(g) for g in gens], ring=R3)
        assert gb.dimension == dim

    @given(polys())
    @settings(max_examples=30)
    def test_hypersurface_dimension(self, f):
        if f.is_constant():
            return
        assert buchberger([f]).dimension == 2


class TestRadical:
    def test_basic(self):
        assert radical_member(x, [x ** 2])
        assert not radical_member(y, [x ** 2])

    def test_needs_rabinowitsch(self):
        gens = [x ** 2, y ** 3 - x * z]
        assert not contains(buchberger(gens), y)
        assert radical_member(y, gens)
        assert not radical_member(z, gens)


class TestLinearPart:
    def test_examples(self):
        ring = Ring(("z_{3,2}", "z_{4,2}", "z_{5,5}", "z_{5,6}"))
        a, b, c, d = ring.gens()
        assert linear_part_rank_at_origin([a * c + b * d]) == 0
        assert linear_part_rank_at_origin([x, y ** 2]) == 1
        assert linear_part_rank_at_origin([x + y, 2 * x + 2 * y + z ** 2, z]) == 2

    def test_nonvanishing(self):
        with pytest.raises(NonVanishingAtOrigin):
            linear_part_rank_at_origin([x + 1])

    def test_rank(self):
        assert rank_of_rows([[1, 2], [2, 4]]) == 1
        assert rank_of_rows([]) == 0
        assert rank_of_rows([[0, 1], [1, 0], [1, 1]]) == 2
