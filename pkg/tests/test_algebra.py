import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from charvar.algebra import (
    ONE,
    ZERO,
    GradedDims,
    IntegralityViolation,
    IntPolynomial,
    NotASeries,
    NotDivisible,
    RationalFunction,
    poly_add,
    poly_divexact,
    poly_mul,
    poly_pow,
    rat_equal,
    series_expand,
)

P = IntPolynomial
big = st.integers(min_value=-(2**128), max_value=2**128)
polys = st.lists(big, max_size=8).map(P)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_canonical_form_trims_zeros():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero()
    assert P([]).degree == float("-inf")
    assert P([Fraction(4, 2)]) == P([2])
    with pytest.raises(IntegralityViolation):
        P([Fraction(1, 2)])


def test_add_examples():
    assert poly_add(P([1, 1]), P([1, -1])) == P([2])
    p = P([3, 0, 5])
    assert poly_add(ZERO, p) == p
    assert poly_add(P([0, 0, 1]), P([0, 0, -1])) == ZERO
    assert poly_add(P([0, 0, 1]), P([0, 0, -1])).coeffs == ()


def test_mul_and_pow_examples():
    assert poly_mul(P([1, 1]), P([1, -1])) == P([1, 0, -1])
    assert poly_mul(P([7, 8]), ONE) == P([7, 8])
    assert poly_mul(P([1, 1]), P([1, 1])) == P([1, 2, 1])
    assert poly_pow(P([1, 1]), 4) == P([1, 4, 6, 4, 1])
    assert poly_pow(P([1, -1]), 0) == ONE
    assert poly_pow(P([1, 0, 0, 1]), 2) == P([1, 0, 0, 2, 0, 0, 1])


def test_pow_central_binomial_is_exact():
    p = poly_pow(P([1, 1]), 200)
    assert p[100] == math.comb(200, 100)
    assert p[100] > 2**190


def test_divexact_examples():
    assert poly_divexact(P([1, 0, -1]), P([1, -1])) == P([1, 1])
    assert poly_divexact(P([1, 0, 0, 0, 0, 0, -1]), P([1, 0, -1])) == P([1, 0, 1, 0, 1])
    with pytest.raises(NotDivisible) as err:
        poly_divexact(P([1, 0, 1]), P([1, 1]))
    assert err.value.reason == "remainder"


def test_divexact_non_integral_quotient():
    with pytest.raises(NotDivisible) as err:
        poly_divexact(P([1, 1]), P([2]))
    assert err.value.reason == "non-integral"


def test_divexact_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divexact(ONE, ZERO)


def test_series_examples():
    f = RationalFunction(ONE, P([1, 0, -1]))
    s = series_expand(f, 5)
    assert s.dims == (1, 0, 1, 0, 1, 0)
    assert not s.exact
    s = series_expand(RationalFunction(P([1, 1])), 3)
    assert s.dims == (1, 1, 0, 0) and s.exact
    g = 1
    f = RationalFunction(P([1, 1]) ** (2 * g), P([1, 0, -1]))
    assert series_expand(f, 3).dims == (1, 2, 2, 2)


def test_series_errors():
    with pytest.raises(NotASeries):
        series_expand(RationalFunction(ONE, P([0, 1])), 3)
    with pytest.raises(IntegralityViolation):
        series_expand(RationalFunction(ONE, P([2, 1])), 3)
    with pytest.raises(ValueError):
        series_expand(RationalFunction(ONE), -1)


def test_rat_equal_examples():
    assert rat_equal(RationalFunction(P([1, 0, -1]), P([1, -1])), RationalFunction(P([1, 1])))
    assert not rat_equal(RationalFunction(ONE, P([1, -1])), RationalFunction(ONE, P([1, 1])))
    assert rat_equal(RationalFunction(ZERO, P([1, 0, 0, 0, -1])), RationalFunction(ZERO, P([1, 1])))


def test_rational_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(ONE, ZERO)


def test_graded_dims_validation():
    with pytest.raises(ValueError):
        GradedDims((1, 2), 5)
    d = GradedDims.from_polynomial(P([1, 0, 3]))
    assert d.dims == (1, 0, 3) and d.exact
    assert GradedDims.from_polynomial(P([1, 0, 3]), 5).dims == (1, 0, 3, 0, 0, 0)


def test_palindromic_and_evaluation():
    p = P([1, 4, 7, 4, 1])
    assert p.is_palindromic(4)
    assert not P([1, 2]).is_palindromic(1)
    assert p(1) == 17 and p(-1) == 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys)
def test_mul_matches_sympy(a, b):
    t = sympy.Symbol("t")
    expected = sympy.Poly(sympy.expand(a(t) * b(t)), t).all_coeffs()[::-1] if not (a * b).is_zero() else []
    assert list((a * b).coeffs) == [int(x) for x in expected]


@given(polys, nonzero_polys)
def test_divexact_round_trip(q, d):
    assert poly_divexact(q * d, d) == q


@given(polys, st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_mul(p, n):
    expected = ONE
    for _ in range(n):
        expected = expected * p
    assert poly_pow(p, n) == expected


@settings(max_examples=50)
@given(
    st.lists(st.integers(-50, 50), max_size=6).map(P),
    st.lists(st.integers(-5, 5), max_size=4).map(lambda cs: P([1] + cs)),
    st.integers(min_value=0, max_value=15),
    st.integers(min_value=0, max_value=10),
)
def test_series_truncation_is_stable(num, den, n, extra):
    f = RationalFunction(num, den)
    short = series_expand(f, n)
    long = series_expand(f, n + extra)
    assert long.dims[: n + 1] == short.dims
    # the truncated series times the denominator agrees with the numerator up to t^n
    back = P(short.dims) * den
    assert all(back[k] == num[k] for k in range(n + 1))


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_rat_equal_under_common_factor(a, b, c):
    assert rat_equal(RationalFunction(a * c, b * c), RationalFunction(a, b))
