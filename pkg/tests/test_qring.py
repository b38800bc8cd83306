import pytest
from hypothesis import given, settings, strategies as st

from usl2.qring import (
    IdealIl,
    LaurentPoly,
    RatFunc,
    cyclotomic,
    cyclotomic_valuation,
    f_exponent,
    ideal_membership,
    ideal_product_generators,
    min_cyclotomic_valuation,
    parse_poly,
    poly_gcd,
    q_binom,
    q_brace,
    q_brace_falling,
    q_factorial,
    q_int,
    q_int_factorial,
    render,
    v_int,
)

Q = LaurentPoly.q_pow
V = LaurentPoly.v_pow
U = LaurentPoly.u_pow


def poly_strategy():
    return st.dictionaries(st.integers(-12, 12), st.integers(-9, 9), max_size=6).map(LaurentPoly)


class TestLaurentPoly:
    def test_basic_aliases(self):
        assert Q(1) == U(4)
        assert V(1) == U(2)
        assert Q(1) == V(2)

    def test_zero_coefficients_stripped(self):
        p = LaurentPoly({3: 0, 1: 2})
        assert p.coeffs == {1: 2}
        assert (p - p).is_zero()

    @given(poly_strategy(), poly_strategy(), poly_strategy())
    @settings(max_examples=150, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    def test_pow(self):
        p = Q(1) + 1
        assert p ** 3 == p * p * p
        assert U(2) ** -3 == U(-6)
        assert (U(2) * -1) ** -3 == U(-6) * -1
        with pytest.raises(ValueError):
            (Q(1) + 1) ** -1

    def test_divexact(self):
        a = (Q(2) - 1) * (Q(3) + Q(-1))
        assert a.divexact(Q(3) + Q(-1)) == Q(2) - 1
        assert (Q(1) - 1).divexact(Q(2) - 1) is None
        assert LaurentPoly.zero().divexact(Q(1)) == LaurentPoly.zero()

    def test_render_units(self):
        assert render(Q(-2) - Q(-1) + 1) == "q^-2 - q^-1 + 1"
        assert render(U(3)) == "u^3"
        assert render(V(1) + V(-1)) == "v^-1 + v"
        assert render(LaurentPoly.zero()) == "0"

    @given(poly_strategy())
    @settings(max_examples=150, deadline=None)
    def test_parse_render_roundtrip(self, p):
        assert parse_poly(render(p)) == p


class TestQCombinatorics:
    def test_q_brace_paper_example(self):
        # {3}_q = q^3 - 1
        assert q_brace(3) == Q(3) - 1

    def test_trivial_identities(self):
        assert q_int(1) == LaurentPoly.one()
        assert q_factorial(0) == LaurentPoly.one()
        assert q_int_factorial(0) == LaurentPoly.one()

    def test_q_binom_derived(self):
        # {2}_q / {1}_q by exact division
        assert q_binom(2, 1) == Q(1) + 1

    def test_q_binom_negative_top(self):
        assert q_binom(-1, 1) == Q(-1) * -1

    def test_falling_vs_binom(self):
        for i in range(-8, 9):
            for n in range(0, 9):
                assert q_brace_falling(i, n) == q_binom(i, n) * q_factorial(n)

    def test_v_int(self):
        assert v_int(2) == V(1) + V(-1)
        assert v_int(0).is_zero()
        assert v_int(3) == V(2) + 1 + V(-2)
        assert v_int(-2) == -(V(1) + V(-1))


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == Q(1) - 1
        assert cyclotomic(2) == Q(1) + 1
        assert cyclotomic(6) == Q(2) - Q(1) + 1

    def test_product_over_divisors(self):
        for m in range(1, 25):
            prod = LaurentPoly.one()
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == Q(m) - 1, m

    def test_valuation(self):
        assert cyclotomic_valuation(Q(2) - 1, 1) == 1
        p = ((Q(3) - 1) * (Q(2) - 1)).divexact(Q(1) - 1)
        assert cyclotomic_valuation(p, 1) == 1
        assert cyclotomic_valuation(LaurentPoly.const(5), 2) == 0
        with pytest.raises(ZeroDivisionError):
            cyclotomic_valuation(LaurentPoly.zero(), 1)

    def test_f_exponent(self):
        assert f_exponent(1, 1) == 1
        assert f_exponent(1, 2) == 0
        for m in range(1, 13):
            assert f_exponent(0, m) == 0

    def test_ideal_generator_valuations_dominate_f(self):
        # witnesses I_l contained in (prod_m Phi_m^{f(l,m)})
        for l in range(0, 6):
            gens = IdealIl(l).generators
            for m in range(1, 13):
                vmin = min_cyclotomic_valuation(gens, m)
                assert vmin >= f_exponent(l, m), (l, m)


class TestIdealMembership:
    def test_i1_membership(self):
        gens = IdealIl(1).generators
        assert ideal_membership((Q(1) - 1) ** 2, gens) == "member"

    def test_valuation_obstruction(self):
        assert ideal_membership(Q(1) - 1, [(Q(1) - 1) ** 2]) == "nonmember"

    def test_zero_member(self):
        assert ideal_membership(LaurentPoly.zero(), [Q(1) + 1]) == "member"

    def test_i2_is_principal(self):
        # {1}!{1}! = (q-1)^2 divides the other generators, so I_2 = ((q-1)^2)
        gens = IdealIl(2).generators
        assert ideal_membership((Q(1) - 1) ** 2, gens) == "member"
        assert ideal_membership((Q(2) - 1) * (Q(1) - 1), gens) == "member"
        assert ideal_membership(Q(1) - 1, gens) == "nonmember"

    def test_exact_backend_non_principal(self):
        # (2, q-1) is not principal; valuations see nothing, Groebner decides
        gens = [LaurentPoly.const(2), Q(1) - 1]
        assert ideal_membership(Q(1) + 1, gens) == "member"
        assert ideal_membership(Q(1), gens) == "nonmember"
        assert ideal_membership(LaurentPoly.one(), gens) == "nonmember"

    def test_exact_backend_disabled(self):
        gens = [LaurentPoly.const(2), Q(1) - 1]
        assert ideal_membership(Q(1) + 1, gens, exact=False) == "unknown"

    def test_product_ideal_generators(self):
        g = ideal_product_generators(IdealIl(1).generators, IdealIl(1).generators)
        assert all(x == (Q(1) - 1) ** 2 for x in g)

    def test_laurent_shifted_member(self):
        gens = IdealIl(1).generators
        assert ideal_membership(Q(-3) * (Q(1) - 1), gens) == "member"


class TestRatFunc:
    def test_reduction(self):
        r = RatFunc(Q(2) - 1, Q(1) - 1)
        assert r.den.is_one()
        assert r.as_poly() == Q(1) + 1

    def test_arith(self):
        a = RatFunc(LaurentPoly.one(), Q(1) - 1)
        b = RatFunc(Q(1), Q(1) - 1)
        assert (b - a).as_poly() == LaurentPoly.one()
        assert (a * (Q(1) - 1)).as_poly() == LaurentPoly.one()
        assert a + (-a) == RatFunc(0)

    def test_canonical_sign(self):
        r = RatFunc(LaurentPoly.one(), -(Q(1) - 1))
        assert r.den.coeffs[r.den.max_exp()] > 0

    def test_eq_cross_multiplication(self):
        assert RatFunc(Q(1) + 1, Q(2) - 1) == RatFunc(LaurentPoly.one(), Q(1) - 1)

    def test_gcd(self):
        g = poly_gcd((Q(1) - 1) * (Q(2) + 1), (Q(1) - 1) * (Q(1) + 3))
        assert g.divexact(Q(1) - 1) is not None or (Q(1) - 1).divexact(g) is not None
