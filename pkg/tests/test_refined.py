import pytest

from adoforge.alexander import alexander_torus
from adoforge.ado import ado3_closed
from adoforge.cli import fixture_dir, load_fixture
from adoforge.exact_arith import root_of_unity
from adoforge.laurent import MPoly
from adoforge.refined import (
    VARS,
    XT,
    default_k1max,
    fk_refined,
    mirror,
    q_binom,
    q_pochhammer,
    refined_ado3,
    refined_alexander,
    refined_weyl_check,
    superpoly,
)
from adoforge.refined import _qbinom_value
from adoforge.torus_fk import InconclusiveError, TorusKnot


def poly(terms, vars=VARS):
    """Sum of coeff * monomial; terms is [(coeff, {var: exp})]."""
    out = MPoly({}, vars)
    for c, m in terms:
        out = out + MPoly.monomial(m, c, vars)
    return out


def scalar(p):
    items = p.items()
    if not items:
        return 0
    (k, c), = items
    assert not any(k)
    return c


# q-binomials and Pochhammer symbols


def test_qbinom_small():
    expected = poly([(1, {"q": 4}), (1, {"q": 3}), (2, {"q": 2}), (1, {"q": 1}), (1, {})], ("q",))
    assert q_binom(4, 2) == expected


@pytest.mark.parametrize("w", range(0, 9))
def test_qbinom_symmetry_and_q1(w):
    for n in range(w + 1):
        b = q_binom(w, n)
        assert b == q_binom(w, w - n)
        from math import comb

        assert scalar(b.evaluate("q", 1)) == comb(w, n)


def test_qbinom_out_of_range_is_zero():
    assert not q_binom(3, 4)


@pytest.mark.parametrize("order", [3, 4, 6])
def test_qbinom_lucas_at_roots(order):
    zeta = root_of_unity(order)
    for w in range(0, 14):
        for n in range(w + 1):
            assert _qbinom_value(w, n, zeta) == scalar(q_binom(w, n).evaluate("q", zeta)), (w, n)


def test_pochhammer():
    x = MPoly.var("x", VARS)
    assert q_pochhammer(x, 0) == MPoly.monomial({}, 1, VARS)
    expected = poly([(1, {"x": 2, "q": 1}), (-1, {"x": 1, "q": 1}), (-1, {"x": 1}), (1, {})])
    assert q_pochhammer(x, 2) == expected
    with pytest.raises(ValueError):
        q_pochhammer(x, -1)


# superpolynomials


def test_superpoly_trivial_color():
    for s in range(1, 4):
        assert superpoly(s, 0) == MPoly.monomial({}, 1, VARS).drop_vars(["x"])


def test_superpoly_trefoil():
    expected = poly([(1, {"q": 1, "a": 1, "t": 2}), (1, {"a": 2, "t": 3}), (1, {"q": -1, "a": 1})])
    assert superpoly(1, 1) == expected.drop_vars(["x"])


def test_superpoly_five_one():
    expected = poly(
        [
            (1, {"q": 2, "a": 2, "t": 4}),
            (1, {"q": 1, "a": 3, "t": 5}),
            (1, {"a": 2, "t": 2}),
            (1, {"q": -1, "a": 3, "t": 3}),
            (1, {"q": -2, "a": 2}),
        ]
    )
    assert superpoly(2, 1) == expected.drop_vars(["x"])


@pytest.mark.parametrize("s", [1, 2, 3])
def test_superpoly_positive_at_t1(s):
    # all coefficients of a superpolynomial are non-negative integers
    assert all(c > 0 for _, c in superpoly(s, 2).items())


# refined Alexander


@pytest.mark.parametrize("s", range(1, 7))
def test_refined_alexander_reduces(s):
    r = refined_alexander(s)
    assert r.vars == XT
    assert r.evaluate("t", -1).to_half_laurent("x") == alexander_torus(TorusKnot.two_strand(s))


@pytest.mark.parametrize("s", range(1, 7))
def test_refined_alexander_weyl(s):
    r = refined_alexander(s)
    assert r.negate_exponents(["x"]) == r.substitute("x", 1, {"x": 1, "t": -2})


@pytest.mark.parametrize("s", [2, 3, 4])
def test_refined_alexander_fixture(s):
    ref = load_fixture(fixture_dir() / f"refined/alexander_T2_{2 * s + 1}.json")
    assert refined_alexander(s) == ref["poly"]


def test_refined_alexander_rejects_bad_s():
    with pytest.raises(ValueError):
        refined_alexander(0)


# refined ADO_3


@pytest.mark.parametrize("s", [2, 3, 4])
def test_refined_ado3_fixture(s):
    ref = load_fixture(fixture_dir() / f"refined/ado3_T2_{2 * s + 1}.json")
    assert refined_ado3(s).poly == ref["poly"]


@pytest.mark.parametrize("s", range(1, 6))
def test_refined_ado3_reduces_to_ado3(s):
    r = refined_ado3(s)
    assert r.reduced() == ado3_closed(s).poly
    assert refined_weyl_check(r)


def test_refined_ado3_top_term():
    for s in (1, 2, 3):
        p = refined_ado3(s).poly
        assert p.degrees("x") == (-2 * s, 2 * s)
        top = [(k, c) for k, c in p.items() if k[0] == 2 * s]
        assert top == [((2 * s, 2 * s), 1)]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_refined_ado3_truncation_independent(s):
    k = default_k1max(s)
    assert refined_ado3(s, k).poly == refined_ado3(s, 2 * k).poly


def test_refined_ado3_too_short_truncation():
    with pytest.raises(InconclusiveError):
        refined_ado3(3, 4, retries=0)


def test_refined_ado3_retry_recovers():
    # doubling from a short truncation still lands on the same answer
    assert refined_ado3(2, 8, retries=2).poly == refined_ado3(2).poly


def test_weyl_check_rejects_perturbation():
    p = refined_ado3(2).poly
    assert not refined_weyl_check(p + MPoly.monomial({"x": 1}, 1, XT))


# the series itself


def test_mirror_is_involution():
    p = superpoly(2, 1)
    assert mirror(mirror(p)) == p
    f = fk_refined(2, 4)
    g = mirror(mirror(f))
    assert g.bodies == f.bodies and g.mirrored == f.mirrored


def test_mirror_rejects_other_types():
    with pytest.raises(TypeError):
        mirror(3)


def test_numeric_q_matches_symbolic():
    # evaluating the bodies at q = zeta_3 up front agrees with doing it afterwards
    zeta = root_of_unity(3)
    sym = fk_refined(2, 5)
    num = fk_refined(2, 5, q_value=zeta)
    for k1, body in sym.bodies.items():
        assert body.evaluate("q", zeta) == num.bodies[k1]


def test_x_truncation_commutes():
    full = fk_refined(2, 6)
    cut = fk_refined(2, 6, x_max=6)
    for k1, body in cut.bodies.items():
        assert body == full.bodies[k1].truncate("x", None, 6)


def test_specialize_a_rejects_a():
    with pytest.raises(ValueError):
        fk_refined(1, 2).specialize_a(1, {"a": 1})


def test_fk_refined_bad_args():
    with pytest.raises(ValueError):
        fk_refined(0, 3)
    with pytest.raises(ValueError):
        fk_refined(1, -1)
