"""The two-variable series F_K(x, q) of right-handed torus knots T(s, t)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact_arith import Cyclotomic, root_of_unity
from .laurent import HalfLaurent, QSeries

__all__ = [
    "TorusKnot",
    "InconclusiveError",
    "epsilon",
    "fk_series",
    "fk_at_root",
    "RootSeries",
    "default_mmax",
    "positive_half",
    "mmr_order0_check",
    "MMRResult",
]


class InconclusiveError(RuntimeError):
    """A truncated computation did not stabilize; retry with a larger bound."""


@dataclass(frozen=True)
class TorusKnot:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 2 or self.t < 2:
            raise ValueError("torus knot parameters must satisfy s, t > 1")
        if gcd(self.s, self.t) != 1:
            raise ValueError(f"T({self.s},{self.t}) is a link, gcd must be 1")

    @classmethod
    def two_strand(cls, s: int) -> "TorusKnot":
        """T(2, 2s+1)."""
        return cls(2, 2 * s + 1)

    @property
    def genus(self) -> int:
        return (self.s - 1) * (self.t - 1) // 2

    def residues(self) -> dict[int, int]:
        """Residues mod 2st carrying a nonzero epsilon, mapped to that sign."""
        s, t = self.s, self.t
        n = 2 * s * t
        out = {}
        for r, sign in (
            (s * t + s + t, -1),
            (s * t - s - t, -1),
            (s * t + s - t, 1),
            (s * t - s + t, 1),
        ):
            r %= n
            if r in out:
                raise ArithmeticError(f"residue clash at {r} for {self}")
            out[r] = sign
        return out

    def __str__(self):
        return f"T({self.s},{self.t})"


def epsilon(knot: TorusKnot, m: int) -> int:
    if m < 1 or m % 2 == 0:
        raise ValueError("epsilon is defined for odd positive m")
    return knot.residues().get(m % (2 * knot.s * knot.t), 0)


def fk_series(knot: TorusKnot, m_max: int) -> QSeries:
    s, t = knot.s, knot.t
    c = s * t - s - t
    prefactor = Fraction((s - 1) * (t - 1), 2)
    res = knot.residues()
    n = 2 * s * t
    terms = {}
    for m in range(1, max(m_max, 0) + 1, 2):
        sign = res.get(m % n, 0)
        if sign:
            terms[m] = (sign, Fraction(m * m - c * c, 4 * s * t))
    return QSeries(prefactor, terms, max(m_max, 0))


def default_mmax(knot: TorusKnot, p: int) -> int:
    s, t = knot.s, knot.t
    return 4 * s * t * p + (s * t - s - t)


@dataclass(frozen=True)
class RootSeries:
    """F_K at q = zeta_p, stored as its positive half.

    The full object is sum_m c_m (x^(m/2) - x^(-m/2)); ``positive`` holds
    sum_m c_m x^(m/2), and the negative half is minus its mirror image.
    """

    knot: TorusKnot
    p: int
    positive: HalfLaurent
    truncation_m: int
    odd_mirror: bool = True

    def full(self) -> HalfLaurent:
        return self.positive - self.positive.invert()


def fk_at_root(knot: TorusKnot, p: int, m_max: int) -> RootSeries:
    if p < 1:
        raise ValueError("root of unity order must be positive")
    series = fk_series(knot, m_max)
    zeta_powers = [root_of_unity(p, k) * Fraction(1, 2) for k in range(p)]
    terms = {}
    for m, (sign, _) in series.items():
        c = zeta_powers[series.combined_exponent(m) % p]
        terms[m] = c if sign > 0 else -c
    return RootSeries(knot, p, HalfLaurent(terms), m_max)


def positive_half(series: QSeries) -> HalfLaurent:
    """The q = 1 positive half 1/2 sum_m sign_m x^(m/2)."""
    half = Fraction(1, 2)
    return HalfLaurent({m: half * sign for m, (sign, _) in series.items()})


@dataclass(frozen=True)
class MMRResult:
    ok: bool
    first_mismatch: int | None = None
    m_max: int = 0

    def __bool__(self):
        return self.ok


def _mmr_expansion(knot: TorusKnot, x_order: int, m_max: int) -> HalfLaurent:
    # F/(x^(1/2) - x^(-1/2)) at q = 1, positive half: 2 P+(x) / (x^(1/2) - x^(-1/2))
    # expanded in ascending powers, so 2 P+ * x^(1/2) / (x - 1) = -2 P+ x^(1/2) sum x^j
    pos = positive_half(fk_series(knot, m_max)).scale(2)
    denom = HalfLaurent({1: 1, -1: -1})
    inv = denom.series_invert(2 * x_order + 2)
    return (pos * inv).truncate(2 * x_order)


def mmr_order0_check(knot: TorusKnot, x_order: int, m_max: int | None = None) -> MMRResult:
    """Compare the hbar^0 term of F_K/(x^(1/2)-x^(-1/2)) with 1/Delta_K(x).

    Both sides are ascending expansions in x compared through x^x_order.
    Raises InconclusiveError if the F_K side is still moving when m_max is
    doubled.
    """
    from .alexander import alexander_torus

    if m_max is None:
        m_max = 2 * x_order + 4 * knot.s * knot.t + 1
    lhs = _mmr_expansion(knot, x_order, m_max)
    if lhs != _mmr_expansion(knot, x_order, 2 * m_max):
        raise InconclusiveError(f"MMR expansion of {knot} unstable at m_max={m_max}")
    rhs = alexander_torus(knot).series_invert(2 * x_order).truncate(2 * x_order)
    for e in sorted(set(lhs.terms) | set(rhs.terms)):
        if lhs[e] != rhs[e]:
            return MMRResult(False, e, m_max)
    return MMRResult(True, None, m_max)
