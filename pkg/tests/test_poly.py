"""Sparse multivariate polynomials: arithmetic, ordering, text format."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3family import GF, QQ, ZZ, ContextError, NotDivisibleError, PolyRing
from k3family.poly import (
    as_univariate,
    derivative,
    divides,
    eval_poly,
    exact_div,
    from_univariate,
    grevlex_key,
    is_univariate_in,
    leading_coeff,
    to_str,
    univariate_gcd,
    vanishing_order_at,
)

R2 = PolyRing(("x", "y"), ZZ)
R3 = PolyRing(("x", "y", "z"), ZZ)


def p2(text):
    return R2.parse(text)


# -- ring construction ---------------------------------------------------------------


def test_duplicate_variables_rejected():
    with pytest.raises(ContextError):
        PolyRing(("x", "x"))


def test_bad_variable_names_rejected():
    for bad in ("2x", "a-b", "", "x y"):
        with pytest.raises(ContextError):
            PolyRing((bad,))


def test_unknown_variable_lookup():
    with pytest.raises(ContextError):
        R2.var("q")
    with pytest.raises(ContextError):
        R2.index("q")


def test_monomial_drops_zero_and_coerces():
    assert R2.monomial(0, {"x": 3}).is_zero()
    q = PolyRing(("x",), QQ).monomial(1, {"x": 1})
    (coef,) = q.terms.values()
    assert coef == Fraction(1) and isinstance(coef, Fraction)


# -- grevlex ordering ----------------------------------------------------------------


def test_grevlex_degree_dominates():
    assert grevlex_key((2, 0)) > grevlex_key((0, 1))


def test_grevlex_tie_break():
    # x^2 > x*y > y^2 at total degree 2
    assert grevlex_key((2, 0)) > grevlex_key((1, 1)) > grevlex_key((0, 2))


def test_grevlex_differs_from_lex_style_orders():
    # degree wins even when the first variable loses: y^3 > x^2
    assert grevlex_key((0, 3)) > grevlex_key((2, 0))


def test_sorted_terms_descending():
    p = p2("x^2 + x*y + y^2 + x + 1")
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 0)]


# -- canonical text format -----------------------------------------------------------


def test_to_str_canonical_examples():
    x, y = R2.var("x"), R2.var("y")
    assert to_str(x**2 + x * y + y**2) == "x^2 + x*y + y^2"
    assert to_str(R2.zero()) == "0"
    assert to_str(R2.one()) == "1"
    assert to_str(-x) == "-x"
    assert to_str(3 * x - 4) == "3*x - 4"
    assert to_str(x - y) == "x - y"
    assert to_str(2 * x**3 * y) == "2*x^3*y"


def test_to_str_rational_coefficients():
    r = PolyRing(("u",), QQ)
    u = r.var("u")
    assert to_str(u.scale(Fraction(-2, 3)) + r.const(Fraction(1, 2))) == "-2/3*u + 1/2"


def test_to_str_sorts_factors_by_name():
    r = PolyRing(("u", "b"), ZZ)
    p = r.parse("-21*b^2*u^5 + 70*b^3*u^4")
    assert to_str(p) == "-21*b^2*u^5 + 70*b^3*u^4"


def test_parse_round_trip_hand_cases():
    for text in ("x^2 + x*y + y^2", "-x + 3", "7", "0", "x^10 - y^10"):
        assert to_str(p2(text)) == text


def test_parse_whitespace_and_signs():
    assert p2("x+-y") == p2("x - y")
    assert p2(" - -x ") == p2("x")
    assert p2("2*x^2+3") == p2("3 + 2*x^2")


def test_parse_rejects_unknown_variable():
    with pytest.raises(ContextError):
        p2("x + q")


def test_parse_rejects_fraction_over_zz():
    with pytest.raises(Exception):
        p2("1/2*x")


def test_parse_fraction_over_qq():
    r = PolyRing(("x",), QQ)
    p = r.parse("1/2*x + 3/4")
    assert p.coeff({"x": 1}) == Fraction(1, 2)
    assert p.coeff({}) == Fraction(3, 4)


# -- arithmetic laws (property tests) -------------------------------------------------

coeffs = st.integers(min_value=-8, max_value=8)
exps = st.tuples(
    st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)
)


@st.composite
def polys(draw):
    n = draw(st.integers(min_value=0, max_value=5))
    terms = {}
    for _ in range(n):
        terms[draw(exps)] = draw(coeffs)
    return R2.from_terms(terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + R2.zero() == a
    assert a * R2.one() == a
    assert a - a == R2.zero()
    assert a + (-a) == R2.zero()


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_to_str_parse_round_trips(a, b):
    p = a * b + a
    assert R2.parse(to_str(p)) == p


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_exact_div_recovers_factor(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert exact_div(a * b, b) == a
    assert divides(b, a * b)


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_derivative_is_a_derivation(a, b):
    da, db = derivative(a, "x"), derivative(b, "x")
    assert derivative(a * b, "x") == da * b + a * db
    assert derivative(a + b, "x") == da + db


def test_not_divisible_raises():
    with pytest.raises(NotDivisibleError):
        exact_div(p2("x^2 + 1"), p2("x"))
    assert not divides(p2("x"), p2("x^2 + 1"))


def test_division_by_zero_poly():
    with pytest.raises(Exception):
        exact_div(p2("x"), R2.zero())


def test_pow():
    x, y = R2.var("x"), R2.var("y")
    assert (x + y) ** 0 == R2.one()
    assert (x + y) ** 3 == p2("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    with pytest.raises(Exception):
        (x + y) ** -1


def test_int_operands_coerce():
    x = R2.var("x")
    assert 2 + x == x + 2 == p2("x + 2")
    assert 2 - x == p2("2 - x")
    assert 3 * x == x * 3 == p2("3*x")


def test_mixed_ring_arithmetic_rejected():
    with pytest.raises(ContextError):
        R2.var("x") + R3.var("x")
    with pytest.raises(ContextError):
        R2.var("x") * PolyRing(("x", "y"), QQ).var("x")


# -- structure queries ---------------------------------------------------------------


def test_degree_conventions():
    p = p2("x^3*y + y^2")
    assert p.degree("x") == 3
    assert p.degree("y") == 2
    assert p.total_degree() == 4
    z = R2.zero()
    assert z.degree("x") == -1
    assert z.total_degree() == -1


def test_coeff_and_constant():
    p = p2("5*x^2*y - 3")
    assert p.coeff({"x": 2, "y": 1}) == 5
    assert p.coeff({"x": 1}) == 0
    assert p.coeff({}) == -3
    assert R2.zero().constant() == 0
    assert p2("7").is_constant() and p2("7").constant() == 7
    assert not p.is_constant()
    with pytest.raises(ContextError):
        p.constant()


def test_variables_used():
    assert p2("x^2 + 1").variables_used() == ("x",)
    assert R3.parse("x*z").variables_used() == ("x", "z")
    assert R2.zero().variables_used() == ()


def test_lead_term():
    exp, c = p2("2*x^2 - y").lead_term()
    assert exp == (2, 0) and c == 2


def test_len_counts_terms():
    assert len(p2("x^2 + x*y + 1")) == 3
    assert len(R2.zero()) == 0


# -- substitution --------------------------------------------------------------------


def test_eval_poly_full_substitution():
    p = p2("x^2*y - 3*y + 4")
    out = eval_poly(p, {"x": 2, "y": 5})
    assert out.is_constant() and out.constant() == 2 * 2 * 5 - 15 + 4


def test_eval_poly_partial_substitution():
    p = p2("x^2*y - 3*y + 4")
    out = eval_poly(p, {"x": R2.var("y")})
    assert out == p2("y^3 - 3*y + 4")


def test_eval_poly_substitutes_polynomials():
    p = p2("x^2")
    out = eval_poly(p, {"x": p2("x + y")})
    assert out == p2("x^2 + 2*x*y + y^2")


# -- univariate views ----------------------------------------------------------------


def test_as_univariate_layout():
    p = p2("x^2*y + 2*x^2 + y^3")
    cs = as_univariate(p, "x")
    assert len(cs) == 3
    assert cs[0] == p2("y^3")
    assert cs[1] == R2.zero()
    assert cs[2] == p2("y + 2")


def test_as_univariate_zero():
    assert as_univariate(R2.zero(), "x") == []


def test_from_univariate_round_trip():
    p = p2("x^3*y - 2*x + y^2")
    assert from_univariate(as_univariate(p, "x"), "x", R2) == p


def test_from_univariate_rejects_coefficients_containing_variable():
    with pytest.raises(ContextError):
        from_univariate([R2.var("x")], "x", R2)


def test_leading_coeff():
    assert leading_coeff(p2("3*y*x^2 + x + 1"), "x") == p2("3*y")
    assert leading_coeff(p2("5"), "x") == p2("5")


def test_is_univariate_in():
    assert is_univariate_in(p2("x^2 - 4"), "x")
    assert not is_univariate_in(p2("x^2 - y"), "x")
    assert is_univariate_in(p2("7"), "x")


def test_vanishing_order_at():
    r = PolyRing(("u",), QQ)
    u = r.var("u")
    p = (u - 2) ** 3 * (u + 1)
    assert vanishing_order_at(p, "u", 2) == 3
    assert vanishing_order_at(p, "u", -1) == 1
    assert vanishing_order_at(p, "u", 0) == 0


def test_univariate_gcd_over_qq():
    r = PolyRing(("u",), QQ)
    u = r.var("u")
    a = (u - 1) ** 2 * (u + 3)
    b = (u - 1) * (u - 5)
    g = univariate_gcd(a, b, "u")
    # monic normalization over a field
    assert g == u - 1


def test_univariate_gcd_over_zz():
    u = PolyRing(("u",), ZZ).var("u")
    a = (2 * u + 4) * (u - 1)
    b = (2 * u + 4) * (u + 5)
    g = univariate_gcd(a, b, "u")
    assert divides(g, a) and divides(g, b)
    assert g.degree("u") == 1


def test_univariate_gcd_over_gf():
    r = PolyRing(("u",), GF(13))
    u = r.var("u")
    a = (u - 3) ** 2
    b = (u - 3) * (u - 7)
    assert univariate_gcd(a, b, "u") == u - 3


def test_univariate_gcd_coprime():
    r = PolyRing(("u",), QQ)
    u = r.var("u")
    g = univariate_gcd(u**2 + 1, u - 4, "u")
    assert g.is_constant() and not g.is_zero()


def test_scale():
    p = p2("x + 2")
    assert p.scale(3) == p2("3*x + 6")
    assert p.scale(0).is_zero()


def test_hash_consistent_with_eq():
    a = p2("x^2 + y")
    b = p2("y + x^2")
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
