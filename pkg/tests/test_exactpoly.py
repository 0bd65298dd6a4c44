from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhsing.errors import InexactDivision, ParseError, UnknownVariable
from qhsing.exactpoly import (
    IntPoly,
    Poly,
    cyclotomic,
    differentiate,
    evaluate_complex,
    parse_polynomial,
)

from conftest import P


def test_parse_fermat_cubic():
    p = P("z1^3+z2^3+z3^3")
    assert len(p) == 3
    assert all(c == 1 for _, c in p)
    assert set(p.monomials()) == {(3, 0, 0), (0, 3, 0), (0, 0, 3)}


def test_parse_zero():
    assert parse_polynomial("0", ["x"]).is_zero()


def test_parse_morse_presentation():
    p = parse_polynomial("x*y + y^100 + z^2 + t^2", ["x", "y", "z", "t"])
    assert len(p) == 4
    assert p.coefficient((1, 1, 0, 0)) == 1
    assert p.coefficient((0, 100, 0, 0)) == 1


def test_parse_rational_and_signs():
    p = parse_polynomial("-3/6*x^2*y + 2 - x*x", ["x", "y"])
    assert p.coefficient((2, 1)) == Fraction(-1, 2)
    assert p.coefficient((0, 0)) == 2
    assert p.coefficient((2, 0)) == -1


def test_parse_combines_like_terms():
    assert parse_polynomial("x + x - 2*x", ["x"]).is_zero()


def test_variable_order_comes_from_list():
    a = parse_polynomial("x^2 + y^3", ["x", "y"])
    b = parse_polynomial("x^2 + y^3", ["y", "x"])
    assert a.monomials() != b.monomials()
    assert b.coefficient((3, 0)) == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("x^-2", "exponent < 0"),
        ("x^1.5", "non-negative integer"),
        ("x^y", "non-negative integer"),
        ("2x", "missing '*'"),
        ("x y", "missing '*'"),
        ("x +", "expected a coefficient or variable"),
        ("(x+1)", "unexpected character"),
        ("1/0*x", "zero denominator"),
        ("0.5*x", "decimal"),
        ("x*2", "expected a variable"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, ["x", "y"])
    assert fragment in str(info.value)
    assert info.value.position is not None


def test_unknown_variable_reports_position():
    with pytest.raises(UnknownVariable) as info:
        parse_polynomial("x + w^2", ["x", "y"])
    assert info.value.position == 4


def test_printing_is_canonical_grlex():
    p = parse_polynomial("1 + y + x + y^2 + x*y + x^2", ["x", "y"])
    assert p.to_string(["x", "y"]) == "x^2 + x*y + y^2 + x + y + 1"
    assert parse_polynomial("-x + 1/2", ["x"]).to_string(["x"]) == "-x + 1/2"


def test_differentiate_examples():
    cubic = P("z1^3+z2^3+z3^3")
    assert differentiate(cubic, 0) == P("3*z1^2")
    xy = parse_polynomial("x*y", ["x", "y"])
    assert differentiate(xy, 0) == parse_polynomial("y", ["x", "y"])
    assert differentiate(Poly.constant(1, 5), 0).is_zero()
    with pytest.raises(IndexError):
        differentiate(xy, 2)


def test_evaluate_examples():
    assert evaluate_complex(P("z1^3+z2^3+z3^3"), [1, -1, 0]) == 0
    assert evaluate_complex(parse_polynomial("x*y", ["x", "y"]), [0, 2]) == 0
    # 9 + 16 - 25
    assert evaluate_complex(P("z1^2+z2^2+z3^2"), [3, 4, 5j]) == 0
    with pytest.raises(ValueError):
        evaluate_complex(P("z1"), [1, 2])


# random polynomials for the algebraic properties

NAMES = ["x", "y", "z"]

coefficients = st.fractions(min_value=-1000, max_value=1000, max_denominator=12)
monomials = st.tuples(*[st.integers(0, 4)] * 3)
polys = st.dictionaries(monomials, coefficients, max_size=6).map(lambda d: Poly(3, d))
points = st.lists(
    st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False), min_size=3, max_size=3
)


@given(polys)
def test_print_parse_round_trip(p):
    text = p.to_string(NAMES)
    q = parse_polynomial(text, NAMES)
    assert q == p
    assert q.to_string(NAMES) == text


@given(polys, polys)
def test_add_sub_inverse(p, q):
    assert (p + q) - q == p


@given(polys, polys, st.integers(0, 2))
def test_derivative_linear_and_leibniz(p, q, i):
    assert differentiate(p + q, i) == differentiate(p, i) + differentiate(q, i)
    assert differentiate(p * q, i) == differentiate(p, i) * q + p * differentiate(q, i)


@settings(max_examples=200)
@given(polys, polys, points)
def test_evaluation_is_additive(p, q, z):
    lhs = evaluate_complex(p + q, z)
    rhs = evaluate_complex(p, z) + evaluate_complex(q, z)
    scale = max(abs(evaluate_complex(p, z)), abs(evaluate_complex(q, z)), 1.0)
    assert abs(lhs - rhs) <= 1e-12 * scale


@given(polys, points)
def test_horner_matches_term_sum(p, z):
    direct = sum(complex(c) * z[0] ** a * z[1] ** b * z[2] ** e for (a, b, e), c in p)
    assert abs(evaluate_complex(p, z) - direct) <= 1e-9 * max(1.0, abs(direct))


def test_intpoly_exact_division():
    t3m1 = IntPoly([-1, 0, 0, 1])
    assert t3m1.exact_div(IntPoly([-1, 1])) == IntPoly([1, 1, 1])
    with pytest.raises(InexactDivision):
        t3m1.exact_div(IntPoly([1, 1]))


def test_cyclotomic_small_cases():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])
    assert cyclotomic(30) == IntPoly([1, 1, 0, -1, -1, -1, 0, 1, 1])


def test_cyclotomic_product_is_t_k_minus_one():
    for k in range(1, 40):
        prod = IntPoly([1])
        for j in range(1, k + 1):
            if k % j == 0:
                prod = prod * cyclotomic(j)
        assert prod == IntPoly.monomial(k) - IntPoly([1])


def test_intpoly_printing():
    assert IntPoly([1, 0, -1, 0, 1]).to_string() == "t^4 - t^2 + 1"
    assert IntPoly([-1, 2]).to_string() == "2*t - 1"
