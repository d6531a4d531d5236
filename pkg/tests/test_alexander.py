import pytest

from adoforge.alexander import alexander_composed, alexander_torus, evaluate_at_one
from adoforge.laurent import HalfLaurent
from adoforge.torus_fk import TorusKnot


def poly(d):
    return HalfLaurent.from_integer_exponents(d)


@pytest.mark.parametrize(
    "knot, expected",
    [
        (TorusKnot(2, 3), {1: 1, 0: -1, -1: 1}),
        (TorusKnot(2, 5), {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}),
        (TorusKnot(3, 4), {3: 1, 2: -1, 0: 1, -2: -1, -3: 1}),
    ],
)
def test_known_polynomials(knot, expected):
    assert alexander_torus(knot) == poly(expected)


@pytest.mark.parametrize("s,t", [(2, 7), (3, 5), (4, 5), (5, 7)])
def test_normalization(s, t):
    d = alexander_torus(TorusKnot(s, t))
    assert evaluate_at_one(d) == 1
    assert d.is_symmetric()
    assert d.max_exp == 2 * TorusKnot(s, t).genus


def test_composed():
    d = alexander_composed(TorusKnot(2, 3), 3)
    assert d == poly({3: 1, 0: -1, -3: 1})
    with pytest.raises(ValueError):
        alexander_composed(TorusKnot(2, 3), 0)
