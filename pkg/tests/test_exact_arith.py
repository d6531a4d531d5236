from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adoforge.exact_arith import (
    Cyclotomic,
    cyclotomic_polynomial,
    euler_phi,
    root_of_unity,
    to_complex,
)

ORDERS = [1, 2, 3, 4, 6, 8, 12]

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(small_q, min_size=euler_phi(n), max_size=euler_phi(n)))
    return Cyclotomic(n, coeffs)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


def test_roots_of_unity_basics():
    z3 = root_of_unity(3)
    assert z3 ** 3 == 1
    assert z3 ** 2 == -1 - z3
    assert z3.inv() == z3 ** 2
    i = root_of_unity(4)
    assert i * i == -1
    assert root_of_unity(4, 5) == i
    assert root_of_unity(3, -1) == z3 ** 2


def test_mixed_orders_lift():
    z3, i = root_of_unity(3), root_of_unity(4)
    z12 = root_of_unity(12)
    assert (z3 * i).order == 12
    assert z12 ** 4 == z3
    assert z12 ** 3 == i
    # sqrt(3) = zeta_12 + zeta_12^-1
    s3 = z12 + z12 ** 11
    assert s3 * s3 == 3


def test_equal_across_fields_hash_consistently():
    a = root_of_unity(3)
    b = a.lift(12)
    assert a == b and hash(a) == hash(b)
    assert Cyclotomic.from_rational(Fraction(1, 2), 8) == Fraction(1, 2)
    assert hash(Cyclotomic.from_rational(5, 4)) == hash(Cyclotomic.from_rational(5, 6))


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(4).inv()


def test_rational_value():
    assert Cyclotomic.from_rational(Fraction(3, 7), 6).rational_value() == Fraction(3, 7)
    with pytest.raises(ValueError):
        root_of_unity(4).rational_value()


def test_galois_and_conjugate():
    i = root_of_unity(4)
    assert i.conjugate() == -i
    z8 = root_of_unity(8)
    assert z8.galois(3) == z8 ** 3
    with pytest.raises(ValueError):
        z8.galois(2)


def test_to_complex_matches_mpmath():
    z = root_of_unity(12, 5)
    with mpmath.workdps(40):
        v = to_complex(z)
        assert abs(v - mpmath.expjpi(mpmath.mpf(10) / 12)) < mpmath.mpf(10) ** -25


def test_json_round_trip():
    x = Cyclotomic(12, [Fraction(1, 3), -2, 0, Fraction(5, 7)])
    assert Cyclotomic.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        Cyclotomic.from_json({"order": 4, "coeffs": [["1", "1"]]})


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms(data):
    n = data.draw(st.sampled_from(ORDERS))
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inv() == 1
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(elements(), elements())
def test_cross_field_arithmetic_agrees_numerically(a, b):
    with mpmath.workdps(40):
        exact = to_complex(a * b + a)
        approx = to_complex(a) * to_complex(b) + to_complex(a)
        assert abs(exact - approx) < mpmath.mpf(10) ** -20


@settings(max_examples=40, deadline=None)
@given(elements(), elements())
def test_equality_implies_equal_hash(a, b):
    s = a + b - b
    assert s == a and hash(s) == hash(a)


@settings(max_examples=30, deadline=None)
@given(elements(), st.integers(min_value=-4, max_value=6))
def test_powers(a, k):
    if not a and k < 0:
        return
    p = Cyclotomic.from_rational(1, a.order)
    for _ in range(abs(k)):
        p = p * a
    if k < 0:
        p = p.inv()
    assert a ** k == p
