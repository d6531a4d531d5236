from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adoforge.exact_arith import root_of_unity
from adoforge.laurent import HalfLaurent
from adoforge.torus_fk import (
    InconclusiveError,
    TorusKnot,
    default_mmax,
    epsilon,
    fk_at_root,
    fk_series,
    mmr_order0_check,
    positive_half,
)


def test_knot_validation():
    assert TorusKnot.two_strand(3) == TorusKnot(2, 7)
    assert TorusKnot(3, 4).genus == 3
    with pytest.raises(ValueError):
        TorusKnot(2, 4)
    with pytest.raises(ValueError):
        TorusKnot(1, 5)


def test_trefoil_signs_and_exponents():
    k = TorusKnot(2, 3)
    assert [epsilon(k, m) for m in (1, 3, 5, 7, 9, 11, 13)] == [-1, 0, 1, 1, 0, -1, -1]
    series = fk_series(k, 13)
    assert series.prefactor_exponent == 1
    assert [(m, sign) for m, (sign, _) in series.items()] == [(1, -1), (5, 1), (7, 1), (11, -1), (13, -1)]
    for m, (_, qe) in series.items():
        assert qe == Fraction(m * m - 1, 24)


def test_single_term_at_mmax_one():
    series = fk_series(TorusKnot(2, 3), 1)
    assert len(series) == 1


def test_epsilon_rejects_even():
    with pytest.raises(ValueError):
        epsilon(TorusKnot(2, 3), 4)


pairs = st.tuples(st.integers(2, 15), st.integers(2, 15)).filter(lambda p: p[0] != p[1] and gcd(*p) == 1)


@settings(max_examples=50, deadline=None)
@given(pairs, st.integers(0, 200))
def test_epsilon_is_a_residue_function(pair, j):
    k = TorusKnot(*pair)
    m = 2 * j + 1
    n = 2 * k.s * k.t
    assert epsilon(k, m) == epsilon(k, m + n)
    assert sum(k.residues().values()) == 0


@settings(max_examples=30, deadline=None)
@given(pairs)
def test_combined_exponent_integral(pair):
    k = TorusKnot(*pair)
    series = fk_series(k, 4 * k.s * k.t + 7)
    for m, _ in series.items():
        assert isinstance(series.combined_exponent(m), int)


def test_at_root_is_odd_under_inversion():
    root = fk_at_root(TorusKnot(2, 5), 3, 61)
    full = root.full()
    assert full.invert() == -full
    # q = 1 positive half against the direct specialization
    at_one = fk_at_root(TorusKnot(2, 5), 1, 61).positive
    assert at_one == positive_half(fk_series(TorusKnot(2, 5), 61))


def test_at_root_values():
    root = fk_at_root(TorusKnot(2, 3), 4, 13)
    i = root_of_unity(4)
    # m=5: q^(1 + 1) = i^2 = -1, sign +
    assert root.positive[5] == Fraction(-1, 2)
    assert root.positive[7] == Fraction(1, 2) * i ** 3


@pytest.mark.parametrize("s", [1, 2, 3])
def test_mmr_order_zero(s):
    res = mmr_order0_check(TorusKnot.two_strand(s), 10)
    assert res, f"first mismatch at {res.first_mismatch}"


def test_mmr_unstable_is_inconclusive():
    with pytest.raises(InconclusiveError):
        mmr_order0_check(TorusKnot(2, 3), 30, m_max=3)


def test_default_mmax_policy():
    k = TorusKnot(2, 5)
    assert default_mmax(k, 4) == 4 * 10 * 4 + 3
