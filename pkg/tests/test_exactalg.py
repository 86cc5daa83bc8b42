from fractions import Fraction

import pytest
from hypothesis import given

from cmhilb import (
    LaurentPolynomial,
    NonPolynomialError,
    QPolynomial,
    RationalFunction,
    laurent_arith,
    laurent_as_ratfun,
    poly_gcd,
    ratfun_arith,
    ratfun_to_laurent,
)
from strategies import laurent_polys, nonzero_qpolys, qpolys, ratfuns

Q = LaurentPolynomial.monomial(1)
QINV = LaurentPolynomial.monomial(-1)


def test_binomial_square():
    p = Q + QINV
    assert p * p == LaurentPolynomial({2: 1, 0: 2, -2: 1})


def test_geometric_telescope():
    assert laurent_arith(
        LaurentPolynomial({0: 1, 1: -1}),
        LaurentPolynomial({0: 1, 1: 1, 2: 1}),
        "mul",
    ) == LaurentPolynomial({0: 1, 3: -1})


@given(laurent_polys)
def test_additive_identity(p):
    assert laurent_arith(p, LaurentPolynomial.zero(), "add") == p
    assert p * LaurentPolynomial.one() == p


@given(laurent_polys, laurent_polys, laurent_polys)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@given(laurent_polys)
def test_neg_and_sub(p):
    assert p - p == LaurentPolynomial.zero()
    assert -(-p) == p


def test_laurent_rejects_nonintegers():
    with pytest.raises(TypeError):
        LaurentPolynomial({0: 1.5})


def test_laurent_invariants_hold():
    p = LaurentPolynomial([(2, 3), (2, -3), (0, 1)])
    assert p.terms == {0: 1}
    assert not LaurentPolynomial().terms


def test_exact_div():
    num = LaurentPolynomial({0: 1, 3: -1})
    den = LaurentPolynomial({0: 1, 1: -1})
    assert num.exact_div(den) == LaurentPolynomial({0: 1, 1: 1, 2: 1})
    with pytest.raises(NonPolynomialError):
        den.exact_div(num)
    with pytest.raises(ZeroDivisionError):
        num.exact_div(LaurentPolynomial.zero())


def test_to_text():
    p = LaurentPolynomial({-1: 1, 0: 2, 3: 1})
    assert p.to_text() == "q^-1 + 2 + q^3"
    assert LaurentPolynomial.zero().to_text() == "0"
    assert LaurentPolynomial({1: -2, 0: 1}).to_text() == "1 - 2q"


@given(laurent_polys)
def test_json_roundtrip(p):
    assert LaurentPolynomial.from_json(p.to_json()) == p


def test_evaluate():
    p = LaurentPolynomial({-1: 1, 1: 1})
    assert p.evaluate(1) == 2
    assert p.evaluate(2) == Fraction(5, 2)
    assert p.evaluate(Fraction(1, 2)) == Fraction(5, 2)


def test_ratfun_add():
    one_over = RationalFunction(QPolynomial.one(), QPolynomial((1, -1)))
    two_over = RationalFunction(QPolynomial.constant(2), QPolynomial((1, -1)))
    assert ratfun_arith(one_over, one_over, "add") == two_over


def test_ratfun_reduces_common_factor():
    f = RationalFunction(QPolynomial((1, 0, -1)), QPolynomial((1, -1)))
    assert f == RationalFunction(QPolynomial((1, 1)))
    assert f.denominator == QPolynomial.one()


@given(ratfuns())
def test_ratfun_self_division(f):
    if f:
        assert ratfun_arith(f, f, "div") == RationalFunction(1)


def test_ratfun_division_by_zero():
    f = RationalFunction(QPolynomial.one(), QPolynomial((1, -1)))
    with pytest.raises(ZeroDivisionError):
        ratfun_arith(f, RationalFunction(0), "div")
    with pytest.raises(ZeroDivisionError):
        RationalFunction(QPolynomial.one(), QPolynomial.zero())


@given(ratfuns(), ratfuns(), ratfuns())
def test_ratfun_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f


@given(ratfuns(), nonzero_qpolys)
def test_reduction_is_canonical(f, blower):
    blown = RationalFunction(f.numerator * blower, f.denominator * blower)
    assert blown == f


@given(ratfuns())
def test_normalization_idempotent(f):
    assert RationalFunction(f.numerator, f.denominator) == f
    assert f.denominator.is_zero or f.denominator.leading == 1


@given(qpolys, nonzero_qpolys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g:
        assert (a % g).is_zero
        assert (b % g).is_zero


def test_ratfun_to_laurent_geometric():
    f = laurent_as_ratfun(LaurentPolynomial({-1: 1, 2: -1}))  # q^-1 (1 - q^3)
    f = f / laurent_as_ratfun(LaurentPolynomial({0: 1, 1: -1}))
    assert ratfun_to_laurent(f) == LaurentPolynomial({-1: 1, 0: 1, 1: 1})


def test_ratfun_to_laurent_constant():
    assert ratfun_to_laurent(RationalFunction(5)) == LaurentPolynomial({0: 5})


def test_ratfun_to_laurent_rejects_series():
    f = RationalFunction(QPolynomial.one(), QPolynomial((1, -1)))
    with pytest.raises(NonPolynomialError):
        ratfun_to_laurent(f)


def test_ratfun_to_laurent_rejects_fractional():
    with pytest.raises(NonPolynomialError):
        ratfun_to_laurent(RationalFunction(Fraction(5, 2)))


@given(laurent_polys)
def test_laurent_ratfun_roundtrip(p):
    assert ratfun_to_laurent(laurent_as_ratfun(p)) == p


def test_unknown_ops_rejected():
    p = LaurentPolynomial.one()
    with pytest.raises(ValueError):
        laurent_arith(p, p, "pow")
    f = RationalFunction(1)
    with pytest.raises(ValueError):
        ratfun_arith(f, f, "mod")
