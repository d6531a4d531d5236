import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adoforge.ado import (
    AdoPolynomial,
    ado3_closed,
    ado4_algorithm,
    ado4_seed,
    ado_from_fk,
    compare_up_to_normalization,
    gaussian,
    verify_against_fk,
)
from adoforge.cli import fixture_dir, load_fixture
from adoforge.exact_arith import root_of_unity
from adoforge.laurent import HalfLaurent
from adoforge.torus_fk import InconclusiveError, TorusKnot

z = root_of_unity(3)
zi = root_of_unity(3, 2)
i = root_of_unity(4)


def sym(positive):
    return HalfLaurent.symmetric(positive)


def g(a, b=0):
    return gaussian(a, b)


# closed forms for p = 3


def test_ado3_trefoil():
    assert ado3_closed(1).poly == sym({2: z, 1: z, 0: z - zi})


def test_ado3_case_two():
    assert ado3_closed(2).poly == sym({4: zi, 3: zi, 2: zi - 1, 1: -1, 0: -1})


def test_ado3_case_three():
    assert ado3_closed(3).poly == sym({6: 1, 5: 1, 4: 1 - z, 3: -z, 2: -z, 0: 1})


def test_ado3_full_cycle():
    expected = {8: z, 7: z, 6: z - zi, 5: -zi, 4: -zi, 2: z, 1: z, 0: z - zi}
    assert ado3_closed(4).poly == sym(expected)


# p = 4 seeds and the algorithm


def test_seed_trefoil():
    assert ado4_seed(3).poly == sym({3: i, 2: i, 1: g(1, 1), 0: g(1, 2)})


def test_seed_t27():
    expected = {9: -i, 8: -i, 7: g(-1, -1), 6: g(-1, -1), 5: -1, 4: -1, 2: -i, 1: -2 * i, 0: g(1, -2)}
    assert ado4_seed(7).poly == sym(expected)


def test_seed_t211_leading_terms():
    a = ado4_seed(11)
    assert a.coefficient(15) == i and a.coefficient(14) == i and a.coefficient(13) == g(1, 1)
    assert a.coefficient(0) == -1


def test_seed_range():
    with pytest.raises(ValueError):
        ado4_seed(15)
    with pytest.raises(ValueError):
        ado4_seed(4)


def test_algorithm_range():
    with pytest.raises(ValueError):
        ado4_algorithm(6)


@pytest.mark.parametrize("s", [7, 8, 9, 10])
def test_algorithm_worked_examples(s):
    ref = load_fixture(fixture_dir() / "ado4" / f"T2_{2 * s + 1}.json")
    assert ref["source"] == "worked"
    assert ado4_algorithm(s).poly == ref["poly"]


def test_algorithm_leading_sextuples():
    leads = {
        3: [-i, -i, g(-1, -1), g(-1, -1), -1, -1],
        0: [1, 1, g(1, -1), g(1, -1), -i, -i],
        1: [i, i, g(1, 1), g(1, 1), 1, 1],
        2: [-1, -1, g(-1, 1), g(-1, 1), i, i],
    }
    for s in range(7, 20):
        a = ado4_algorithm(s)
        assert [a.coefficient(3 * s - k) for k in range(6)] == leads[s % 4]


def test_algorithm_self_verifies():
    assert ado4_algorithm(12, verify=True).poly == ado4_algorithm(12).poly
    assert verify_against_fk(ado4_algorithm(7))


# extraction from F_K


def test_from_fk_trefoil_p3():
    assert ado_from_fk(3, TorusKnot(2, 3)).poly == ado3_closed(1).poly


def test_from_fk_t25_p4():
    expected = {6: -1, 5: -1, 4: g(-1, 1), 3: g(-1, 1), 2: i, 1: g(1, 1), 0: 1}
    assert ado_from_fk(4, TorusKnot(2, 5)).poly == sym(expected)


def test_from_fk_rejects_small_p():
    with pytest.raises(ValueError):
        ado_from_fk(1, TorusKnot(2, 3))


def test_from_fk_too_short_is_inconclusive():
    with pytest.raises(InconclusiveError):
        ado_from_fk(4, TorusKnot(2, 9), m_max=11, retries=0)


def test_from_fk_p5_is_symmetric():
    a = ado_from_fk(5, TorusKnot(2, 5))
    assert a.poly.is_symmetric() and a.poly.max_exp == 2 * 4 * 2


@pytest.mark.parametrize("s", range(1, 9))
def test_closed_vs_fk(s):
    assert compare_up_to_normalization(ado3_closed(s), ado_from_fk(3, TorusKnot.two_strand(s))).kind == "equal"


@pytest.mark.parametrize("s", range(7, 20))
def test_algorithm_vs_fk(s):
    cmp = compare_up_to_normalization(ado4_algorithm(s), ado_from_fk(4, TorusKnot.two_strand(s)))
    assert cmp.kind == "equal"


# normalization comparison


def test_compare_identity_and_rescale():
    a = ado3_closed(2)
    assert compare_up_to_normalization(a, a).kind == "equal"
    rescaled = a.poly.rescale(z)
    cmp = compare_up_to_normalization(a.poly, rescaled, p=3)
    assert cmp.kind == "equal_after"
    assert a.poly.rescale(cmp.c).shift(cmp.shift).scale(cmp.u) == rescaled
    assert compare_up_to_normalization(a.poly, rescaled, allow_rescale=False, p=3).kind == "different"


def test_compare_monomial_and_constant():
    a = ado4_seed(9).poly
    b = a.shift(6).scale(g(2, -1))
    cmp = compare_up_to_normalization(a, b, p=4)
    assert cmp and cmp.shift == 6


def test_compare_different_reports_witness():
    a, b = ado3_closed(2), ado3_closed(5)
    cmp = compare_up_to_normalization(a, b)
    assert not cmp and cmp.witness is not None
    with pytest.raises(ValueError):
        compare_up_to_normalization(ado3_closed(1), ado4_seed(3))


def test_ado_polynomial_invariants():
    with pytest.raises(ValueError):
        AdoPolynomial(3, TorusKnot(2, 3), HalfLaurent.from_integer_exponents({2: 1, 0: 1}))
    with pytest.raises(ValueError):
        AdoPolynomial(3, TorusKnot(2, 3), HalfLaurent({1: 1, -1: 1}))
    with pytest.raises(ValueError):
        AdoPolynomial(1, TorusKnot(2, 3), HalfLaurent({0: 1}))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 40))
def test_weyl_symmetry_of_closed_forms(s):
    p = ado3_closed(s).poly
    assert p.invert() == p
    assert p.max_exp == 4 * s


@settings(max_examples=10, deadline=None)
@given(st.integers(7, 40))
def test_weyl_symmetry_of_algorithm(s):
    p = ado4_algorithm(s).poly
    assert p.invert() == p
    assert p.max_exp == 6 * s
