"""Alexander polynomials of torus knots in balanced form."""
from __future__ import annotations

from fractions import Fraction

from .laurent import HalfLaurent
from .torus_fk import TorusKnot

__all__ = ["alexander_torus", "alexander_composed", "evaluate_at_one"]


def _bracket(k: int) -> HalfLaurent:
    # x^(k/2) - x^(-k/2)
    return HalfLaurent({k: 1, -k: -1})


def alexander_torus(knot: TorusKnot) -> HalfLaurent:
    """Delta of T(s,t), symmetric under x -> 1/x with Delta(1) = 1."""
    s, t = knot.s, knot.t
    num = _bracket(s * t) * _bracket(1)
    den = _bracket(s) * _bracket(t)
    q, r = num.divmod(den)
    assert not r, f"Alexander division left a remainder for {knot}"
    # the quotient is already balanced; fix the sign so that Delta(1) = 1
    if evaluate_at_one(q) < 0:
        q = -q
    return q


def alexander_composed(knot: TorusKnot, p: int) -> HalfLaurent:
    """Delta_K(x^p)."""
    if p < 1:
        raise ValueError("p must be positive")
    return alexander_torus(knot).power_substitute(p)


def evaluate_at_one(poly: HalfLaurent):
    return sum((c for _, c in poly.items()), Fraction(0))
