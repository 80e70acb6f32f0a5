from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charvar.polynomials import (
    GREVLEX,
    LEX,
    Monomial,
    MonomialOrder,
    PolynomialError,
    TracePolynomial,
    TraceVariable,
    evaluate,
    primitive_part,
    render,
    tvar,
)

T1, T2, T3 = tvar(1), tvar(2), tvar(3)
T12, T13, T123 = tvar(1, 2), tvar(1, 3), tvar(1, 2, 3)

VARS = [TraceVariable((1,)), TraceVariable((2,)), TraceVariable((1, 2)), TraceVariable((1, 2, 3))]

coeff_st = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=4),
)
mono_st = st.dictionaries(st.sampled_from(VARS), st.integers(min_value=1, max_value=3), max_size=2)
poly_st = st.lists(st.tuples(coeff_st, mono_st), max_size=4).map(
    lambda ts: TracePolynomial([(Monomial.of(m), c) for c, m in ts])
)


class TestVariables:
    def test_validation(self):
        with pytest.raises(PolynomialError):
            TraceVariable((2, 1))
        with pytest.raises(PolynomialError):
            TraceVariable((1, 1))
        with pytest.raises(PolynomialError):
            TraceVariable((1, 2, 3, 4))
        with pytest.raises(PolynomialError):
            TraceVariable(())

    def test_aux_reserved(self):
        u = TraceVariable.aux()
        assert u.is_aux and str(u) == "u"

    def test_str(self):
        assert str(TraceVariable((1, 2))) == "t{1,2}"


class TestArithmetic:
    def test_square_minus_two(self):
        assert T1 * T1 - 2 == tvar(1) ** 2 - 2

    def test_additive_inverse(self):
        p = 3 * T1 * T12 - T2
        assert (p + (-1) * p).is_zero()

    def test_difference_of_squares(self):
        assert (T1 + T2) * (T1 - T2) == T1 ** 2 - T2 ** 2

    def test_pow(self):
        assert (T1 + 1) ** 3 == T1 ** 3 + 3 * T1 ** 2 + 3 * T1 + 1

    @given(poly_st, poly_st, poly_st)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    def test_no_zero_terms_stored(self):
        p = T1 - T1
        assert p.is_zero() and len(p.terms_dict()) == 0


class TestPrimitivePart:
    def test_clears_content(self):
        p = Fraction(3, 2) * T1 ** 2 - 3
        assert primitive_part(p) == T1 ** 2 - 2

    def test_sign_fix_with_custom_ranking(self):
        # rank t{1} above t{2}
        order = MonomialOrder("lex", var_key=lambda v: (len(v.indices), tuple(-i for i in v.indices)))
        assert primitive_part(-T1 + T2, order) == T1 - T2

    def test_integer_rescale(self):
        assert primitive_part(36 * T12 ** 2 - 144) == T12 ** 2 - 4

    def test_zero_rejected(self):
        with pytest.raises(PolynomialError):
            primitive_part(TracePolynomial.zero())

    @given(poly_st.filter(lambda p: not p.is_zero()),
           st.builds(
               Fraction,
               st.integers(min_value=-7, max_value=7).filter(lambda n: n != 0),
               st.integers(min_value=1, max_value=5),
           ))
    def test_idempotent_and_scale_invariant(self, p, q):
        pp = primitive_part(p)
        assert primitive_part(pp) == pp
        assert primitive_part(p.scale(q)) == pp


class TestEvaluate:
    def test_examples(self):
        assert evaluate(T1 ** 2 - 2, {TraceVariable((1,)): 2}) == 2
        asg = {TraceVariable((1,)): 1, TraceVariable((2,)): 1, TraceVariable((1, 2)): 1}
        assert evaluate(T1 * T2 * T12, asg) == 1

    def test_whitehead_point(self):
        x, y, z = tvar(1), tvar(2), tvar(1, 2)
        factor = -x * y - 2 * z + x * x * z + y * y * z - x * y * z * z + z ** 3
        asg = {TraceVariable((1,)): 2, TraceVariable((2,)): 2, TraceVariable((1, 2)): 1 + 1j}
        assert abs(evaluate(factor, asg)) <= 1e-10

    def test_missing_assignment(self):
        with pytest.raises(PolynomialError):
            evaluate(T1, {})

    @given(poly_st, poly_st, st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60)
    def test_ring_homomorphism(self, a, b, salt):
        import cmath

        asg = {
            v: cmath.exp(2j * cmath.pi * ((salt + 17 * k) % 97) / 97) * (1 + 0.1 * k)
            for k, v in enumerate(VARS)
        }
        lhs = evaluate(a * b, asg) + evaluate(a + b, asg)
        rhs = evaluate(a, asg) * evaluate(b, asg) + evaluate(a, asg) + evaluate(b, asg)
        scale = 1 + max(abs(lhs), abs(rhs))
        assert abs(lhs - rhs) <= 1e-12 * scale


class TestOrdersAndRendering:
    def test_default_ranking_graded(self):
        key = GREVLEX.var_key
        assert key(TraceVariable((2,))) < key(TraceVariable((1, 2)))
        assert key(TraceVariable((1,))) < key(TraceVariable((2,)))
        assert key(TraceVariable((2, 3))) < key(TraceVariable((1, 2, 3)))
        assert key(TraceVariable((1, 2))) < key(TraceVariable((1, 3)))
        assert key(TraceVariable((1, 2, 3))) < key(TraceVariable.aux())

    def test_lex_vs_grevlex(self):
        # under lex, t{1,2} beats any power of lower variables; under
        # grevlex total degree wins
        p = T12 + T1 ** 3
        assert LEX.leading(p)[0] == Monomial.of({TraceVariable((1, 2)): 1})
        assert GREVLEX.leading(p)[0] == Monomial.of({TraceVariable((1,)): 3})

    def test_grevlex_tiebreak(self):
        # equal total degree: the monomial with the smaller exponent on the
        # lowest-ranked variable wins
        a = Monomial.of({TraceVariable((1,)): 2})
        b = Monomial.of({TraceVariable((1,)): 1, TraceVariable((2,)): 1})
        assert GREVLEX.monomial_key(b) > GREVLEX.monomial_key(a)

    def test_render_goldens(self):
        assert render(T12 ** 2 - 4) == "t{1,2}^2 - 4"
        assert render(T1 * T12 ** 2 - T2 * T12 - 2 * T1) == "t{1,2}^2*t{1} - t{1,2}*t{2} - 2*t{1}"
        assert render(TracePolynomial.zero()) == "0"
        assert render(-T1 + Fraction(1, 2)) == "-t{1} + 1/2"

    def test_terms_sorted_descending(self):
        p = T1 + T123 + T12 ** 2
        monos = [m for m, _ in p.terms(GREVLEX)]
        keys = [GREVLEX.monomial_key(m) for m in monos]
        assert keys == sorted(keys, reverse=True)
