from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weightposets.polynomial import IntPoly, one_minus_t_pow, q_pochhammer, t_integer

coeffs = st.lists(st.integers(-20, 20), max_size=7)
monic = st.lists(st.integers(-5, 5), max_size=4).map(lambda c: IntPoly(c + [1]))


@given(coeffs, coeffs, st.integers(-3, 3))
def test_ring_operations_agree_with_evaluation(a, b, x):
    p, q = IntPoly(a), IntPoly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(coeffs, monic)
def test_exact_division_roundtrip(a, d):
    p = IntPoly(a)
    assert (p * d) // d == p
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.degree < d.degree


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        IntPoly([1, 1]) // IntPoly([0, 0, 1])
    with pytest.raises(ValueError):
        IntPoly([1]).divmod(IntPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        IntPoly([1]).divmod(IntPoly())


def test_normalisation_and_printing():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly().degree == -1
    assert IntPoly([0, 0]) == IntPoly()
    assert str(IntPoly([1, 16, 10])) == "1 + 16*t + 10*t^2"
    assert str(IntPoly([0, -1, 0, 2])) == "-t + 2*t^3"
    assert str(IntPoly()) == "0"
    with pytest.raises(AttributeError):
        IntPoly([1]).coeffs = (2,)


def test_helpers():
    assert one_minus_t_pow(3) == IntPoly([1, 0, 0, -1])
    assert t_integer(4) == IntPoly([1, 1, 1, 1])
    assert q_pochhammer(2) == IntPoly([1, -1, -1, 1])
    assert (one_minus_t_pow(6) // one_minus_t_pow(2)) == IntPoly([1, 0, 1, 0, 1])
    assert IntPoly([0, 0, 3]).shift(-2) == IntPoly([3])
    with pytest.raises(ArithmeticError):
        IntPoly([1, 3]).shift(-1)


def test_shape_predicates():
    assert IntPoly([1, 3, 3, 1]).is_palindromic()
    assert not IntPoly([1, 2]).is_palindromic()
    assert IntPoly([1, 4, 4, 1]).is_unimodal()
    assert not IntPoly([2, 1, 2]).is_unimodal()
    assert IntPoly([1, 14, 7]).mean() == Fraction(28, 22)
