"""Sparse Laurent polynomials over exact coefficient rings.

``HalfLaurent`` is a Laurent polynomial in x^(1/2); exponents are stored doubled
so that the key ``e`` means x^(e/2). ``MPoly`` is a multivariate Laurent
polynomial with named variables. Coefficients may be ``Fraction``, ``int`` or
``Cyclotomic``; mixed cyclotomic orders are lifted by the coefficient type.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .exact_arith import Cyclotomic

__all__ = ["HalfLaurent", "MPoly", "QSeries", "coeff_inverse", "coeff_to_json", "coeff_from_json"]

_EXP_BOUND = 2**63


def coeff_inverse(c):
    if isinstance(c, Cyclotomic):
        return c.inv()
    if c == 0:
        raise ZeroDivisionError("inverse of zero coefficient")
    return Fraction(1) / c


def coeff_to_json(c):
    if isinstance(c, Cyclotomic):
        return c.to_json()
    c = Fraction(c)
    return [str(c.numerator), str(c.denominator)]


def coeff_from_json(data):
    if isinstance(data, dict):
        return Cyclotomic.from_json(data)
    num, den = data
    return Fraction(int(num), int(den))


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class HalfLaurent:
    """Laurent polynomial in x^(1/2). ``HalfLaurent({3: c})`` is c*x^(3/2)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self._terms = _clean(dict(terms or {}))

    @classmethod
    def monomial(cls, half_exp: int, coeff=1) -> "HalfLaurent":
        return cls({half_exp: coeff})

    @classmethod
    def from_integer_exponents(cls, terms: Mapping[int, object]) -> "HalfLaurent":
        """Build from {k: c} meaning sum c x^k."""
        return cls({2 * k: c for k, c in terms.items()})

    @classmethod
    def symmetric(cls, positive: Mapping[int, object]) -> "HalfLaurent":
        """``positive`` holds integer x-exponents >= 0; the constant is taken once
        and every other monomial is mirrored under x -> 1/x."""
        out = {}
        for k, c in positive.items():
            if k < 0:
                raise ValueError("symmetric() expects non-negative exponents")
            out[2 * k] = c
            if k:
                out[-2 * k] = c
        return cls(out)

    # -- access --------------------------------------------------------------

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def coeff(self, half_exp: int):
        return self._terms.get(half_exp, 0)

    def __getitem__(self, half_exp: int):
        return self.coeff(half_exp)

    def items(self):
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def has_integer_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def integer_terms(self) -> dict[int, object]:
        """{k: c} for sum c x^k; requires integer exponents."""
        if not self.has_integer_exponents():
            raise ValueError("polynomial has half-integer exponents")
        return {e // 2: c for e, c in self._terms.items()}

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, MPoly):
            return None
        return HalfLaurent({0: other})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, HalfLaurent):
            if isinstance(other, MPoly):
                return NotImplemented
            return self.scale(other)
        out: dict[int, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return HalfLaurent(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            (e, c), = self._terms.items()
            return HalfLaurent({-e * (-k): coeff_inverse(c) ** (-k)})
        out = HalfLaurent({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "HalfLaurent":
        return HalfLaurent({e: v * c for e, v in self._terms.items()})

    def shift(self, half_exp: int) -> "HalfLaurent":
        """Multiply by x^(half_exp/2)."""
        return HalfLaurent({e + half_exp: c for e, c in self._terms.items()})

    def map_coeffs(self, f) -> "HalfLaurent":
        return HalfLaurent({e: f(c) for e, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HalfLaurent):
            if isinstance(other, (int, Fraction, Cyclotomic)):
                other = HalfLaurent({0: other})
            else:
                return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[e] == other._terms[e] for e in self._terms)

    __hash__ = None

    # -- substitutions -------------------------------------------------------

    def invert(self) -> "HalfLaurent":
        """x -> 1/x."""
        return HalfLaurent({-e: c for e, c in self._terms.items()})

    def power_substitute(self, k: int) -> "HalfLaurent":
        """x -> x^k for a nonzero integer k."""
        if k == 0:
            raise ValueError("x -> x^0 is not a substitution")
        return HalfLaurent({e * k: c for e, c in self._terms.items()})

    def rescale(self, c) -> "HalfLaurent":
        """x -> c*x. Integer exponents only; c must be a unit."""
        if not c:
            raise ZeroDivisionError("rescaling by a non-unit")
        if not self.has_integer_exponents():
            raise ValueError("x -> c*x needs integer exponents (c^(1/2) is not chosen)")
        cinv = coeff_inverse(c)
        out = {}
        for e, v in self._terms.items():
            k = e // 2
            out[e] = v * (c ** k if k >= 0 else cinv ** (-k))
        return HalfLaurent(out)

    def is_symmetric(self) -> bool:
        return self == self.invert()

    # -- truncated series ----------------------------------------------------

    def truncate(self, max_half_exp: int) -> "HalfLaurent":
        return HalfLaurent({e: c for e, c in self._terms.items() if e <= max_half_exp})

    def series_invert(self, order: int) -> "HalfLaurent":
        """Ascending inverse s with self*s - 1 free of half-exponents <= order."""
        if not self._terms:
            raise ZeroDivisionError("cannot invert the zero polynomial")
        low = self.min_exp
        p = {e - low: c for e, c in self._terms.items()}
        inv0 = coeff_inverse(p[0])
        n = order - low
        s: dict[int, object] = {}
        for k in range(0, n + 1):
            acc = 1 if k == 0 else 0
            for j, pj in p.items():
                if 0 < j <= k and (k - j) in s:
                    acc = acc - pj * s[k - j]
            if acc:
                s[k] = acc * inv0
        return HalfLaurent({k - low: c for k, c in s.items()})

    def divmod(self, d: "HalfLaurent") -> tuple["HalfLaurent", "HalfLaurent"]:
        """Division as polynomials in x^(1/2) after pulling out lowest monomials.

        Returns (q, r) with self == q*d + r.
        """
        if not d._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return HalfLaurent(), HalfLaurent()
        a, b = self.min_exp, d.min_exp
        num = {e - a: c for e, c in self._terms.items()}
        den = {e - b: c for e, c in d._terms.items()}
        dtop = max(den)
        lead_inv = coeff_inverse(den[dtop])
        quot = {}
        while num:
            top = max(num)
            if top < dtop:
                break
            c = num[top] * lead_inv
            shift = top - dtop
            quot[shift] = c
            for e, v in den.items():
                k = e + shift
                nv = num.get(k, 0) - c * v
                if nv:
                    num[k] = nv
                else:
                    num.pop(k, None)
        q = HalfLaurent({e + a - b: c for e, c in quot.items()})
        r = HalfLaurent({e + a: c for e, c in num.items()})
        return q, r

    def exact_divide(self, d: "HalfLaurent") -> "HalfLaurent":
        q, r = self.divmod(d)
        if r:
            raise ArithmeticError(f"division is not exact; remainder {r}")
        return q

    # -- display / serialization ---------------------------------------------

    def __repr__(self):
        return f"HalfLaurent({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e % 2 == 0:
                mono = "x" if e == 2 else f"x^{e // 2}"
            else:
                mono = f"x^({e}/2)"
            cs = str(c)
            if not mono:
                parts.append(f"({cs})")
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "vars": ["x"],
            "half_exponents": True,
            "terms": [{"e": [e], "c": coeff_to_json(c)} for e, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HalfLaurent":
        if list(data.get("vars", [])) != ["x"]:
            raise ValueError("HalfLaurent JSON must have vars ['x']")
        half = bool(data.get("half_exponents", False))
        out = {}
        for term in data["terms"]:
            (e,) = term["e"]
            key = int(e) if half else 2 * int(e)
            if key in out:
                raise ValueError(f"duplicate exponent {e}")
            out[key] = coeff_from_json(term["c"])
        return cls(out)


class MPoly:
    """Sparse multivariate Laurent polynomial with named variables."""

    __slots__ = ("_vars", "_terms")

    DEFAULT_VARS = ("x", "q", "a", "t")

    def __init__(self, terms: Mapping[tuple, object] | None = None, vars: Iterable[str] = DEFAULT_VARS):
        self._vars = tuple(vars)
        n = len(self._vars)
        out = {}
        for k, v in (terms or {}).items():
            k = tuple(int(e) for e in k)
            if len(k) != n:
                raise ValueError(f"exponent vector {k} does not match vars {self._vars}")
            if v:
                out[k] = v
        self._terms = out

    @classmethod
    def _wrap(cls, terms: dict, vars: tuple) -> "MPoly":
        obj = cls.__new__(cls)
        obj._vars = vars
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c, vars: Iterable[str] = DEFAULT_VARS) -> "MPoly":
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Iterable[str] = DEFAULT_VARS, power: int = 1, coeff=1) -> "MPoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls({tuple(exp): coeff}, vars)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, vars: Iterable[str] = DEFAULT_VARS) -> "MPoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        for name, e in exps.items():
            exp[vars.index(name)] = e
        return cls({tuple(exp): coeff}, vars)

    @property
    def vars(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[tuple, object]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exps: tuple):
        return self._terms.get(tuple(exps), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self, name: str) -> tuple[int, int]:
        i = self._vars.index(name)
        es = [k[i] for k in self._terms]
        return min(es), max(es)

    def depends_on(self, name: str) -> bool:
        i = self._vars.index(name)
        return any(k[i] for k in self._terms)

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other._vars != self._vars:
                raise ValueError(f"variable mismatch {self._vars} vs {other._vars}")
            return other
        if isinstance(other, HalfLaurent):
            return None
        return MPoly.constant(other, self._vars)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            if k in out:
                v = out[k] + c
                if v:
                    out[k] = v
                else:
                    del out[k]
            else:
                out[k] = c
        return MPoly._wrap(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._wrap({k: -c for k, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, HalfLaurent):
                return NotImplemented
            return self.scale(other)
        if other._vars != self._vars:
            raise ValueError(f"variable mismatch {self._vars} vs {other._vars}")
        out: dict[tuple, object] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                v = c1 * c2
                out[k] = out[k] + v if k in out else v
        out = {k: v for k, v in out.items() if v}
        for k in out:
            assert all(-_EXP_BOUND < e < _EXP_BOUND for e in k), "exponent overflow"
        return MPoly._wrap(out, self._vars)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            (e, c), = self._terms.items()
            return MPoly._wrap({tuple(-x * (-k) for x in e): coeff_inverse(c) ** (-k)}, self._vars)
        out = MPoly.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c) -> "MPoly":
        if not c:
            return MPoly._wrap({}, self._vars)
        return MPoly._wrap({k: v * c for k, v in self._terms.items()}, self._vars)

    def map_coeffs(self, f) -> "MPoly":
        return MPoly({k: f(c) for k, c in self._terms.items()}, self._vars)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction, Cyclotomic)):
                other = MPoly.constant(other, self._vars)
            else:
                return NotImplemented
        if self._vars != other._vars or self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[k] == other._terms[k] for k in self._terms)

    __hash__ = None

    # -- substitutions -------------------------------------------------------

    def negate_exponents(self, names: Iterable[str] | None = None) -> "MPoly":
        """v -> 1/v for each named variable (all variables by default)."""
        idx = set(range(len(self._vars))) if names is None else {self._vars.index(n) for n in names}
        return MPoly._wrap(
            {tuple(-e if i in idx else e for i, e in enumerate(k)): c for k, c in self._terms.items()},
            self._vars,
        )

    def scale_exponent(self, name: str, factor: int) -> "MPoly":
        """v -> v^factor."""
        i = self._vars.index(name)
        out = {}
        for k, c in self._terms.items():
            nk = list(k)
            nk[i] *= factor
            nk = tuple(nk)
            out[nk] = out[nk] + c if nk in out else c
        return MPoly(out, self._vars)

    def substitute(self, name: str, coeff=1, monomial: Mapping[str, int] | None = None) -> "MPoly":
        """v -> coeff * prod(w^e for w, e in monomial).

        ``monomial`` may mention ``name`` itself (e.g. a -> -q^2/t keeps no a).
        """
        i = self._vars.index(name)
        mono = [0] * len(self._vars)
        for w, e in (monomial or {}).items():
            mono[self._vars.index(w)] = e
        pows: dict[int, object] = {}
        trivial = coeff == 1
        out: dict[tuple, object] = {}
        for k, c in self._terms.items():
            e = k[i]
            nk = list(k)
            nk[i] = 0
            for j, m in enumerate(mono):
                nk[j] += m * e
            nk = tuple(nk)
            if trivial or e == 0:
                v = c
            else:
                f = pows.get(e)
                if f is None:
                    f = coeff ** e if e > 0 else coeff_inverse(coeff) ** (-e)
                    pows[e] = f
                v = c * f
            out[nk] = out[nk] + v if nk in out else v
        return MPoly(out, self._vars)

    def evaluate(self, name: str, value) -> "MPoly":
        return self.substitute(name, value, {})

    def drop_vars(self, names: Iterable[str]) -> "MPoly":
        """Remove variables that no longer appear (exponent zero everywhere)."""
        names = set(names)
        for n in names:
            if self.depends_on(n):
                raise ValueError(f"variable {n} still appears")
        keep = [i for i, v in enumerate(self._vars) if v not in names]
        return MPoly(
            {tuple(k[i] for i in keep): c for k, c in self._terms.items()},
            tuple(self._vars[i] for i in keep),
        )

    def collect(self, name: str) -> dict[int, "MPoly"]:
        """Split into {e: coefficient polynomial of name^e}."""
        i = self._vars.index(name)
        out: dict[int, dict] = {}
        for k, c in self._terms.items():
            nk = list(k)
            e = nk[i]
            nk[i] = 0
            out.setdefault(e, {})[tuple(nk)] = c
        return {e: MPoly(t, self._vars) for e, t in out.items()}

    def truncate(self, name: str, low: int | None = None, high: int | None = None) -> "MPoly":
        i = self._vars.index(name)
        return MPoly._wrap(
            {
                k: c
                for k, c in self._terms.items()
                if (low is None or k[i] >= low) and (high is None or k[i] <= high)
            },
            self._vars,
        )

    def to_half_laurent(self, name: str = "x") -> HalfLaurent:
        """Univariate view: every other variable must be absent."""
        i = self._vars.index(name)
        for k in self._terms:
            if any(e for j, e in enumerate(k) if j != i):
                raise ValueError("polynomial depends on more than one variable")
        return HalfLaurent({2 * k[i]: c for k, c in self._terms.items()})

    # -- display / serialization ---------------------------------------------

    def __repr__(self):
        return f"MPoly({self}, vars={self._vars})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(self._vars, k) if e
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})")
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "vars": list(self._vars),
            "half_exponents": False,
            "terms": [{"e": list(k), "c": coeff_to_json(c)} for k, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MPoly":
        vars = tuple(data["vars"])
        out = {}
        for term in data["terms"]:
            k = tuple(int(e) for e in term["e"])
            if k in out:
                raise ValueError(f"duplicate exponent vector {k}")
            out[k] = coeff_from_json(term["c"])
        return cls(out, vars)


@dataclass(frozen=True)
class QSeries:
    """Truncated 1/2 q^prefactor sum_m sign_m (x^(m/2) - x^(-m/2)) q^(q_exp_m).

    ``terms`` maps odd m to (sign, q_exponent); only nonzero signs are stored.
    """

    prefactor_exponent: Fraction
    terms: dict[int, tuple[int, Fraction]] = field(default_factory=dict)
    truncation_m: int = 0

    def __post_init__(self):
        for m, (sign, qe) in self.terms.items():
            if m % 2 == 0 or m < 1 or m > self.truncation_m:
                raise ValueError(f"bad term index m={m}")
            if sign not in (-1, 1):
                raise ValueError(f"bad sign {sign} at m={m}")
            total = self.prefactor_exponent + qe
            if total.denominator != 1:
                raise ArithmeticError(f"non-integral q-exponent {total} at m={m}")

    def combined_exponent(self, m: int) -> int:
        sign, qe = self.terms[m]
        return int(self.prefactor_exponent + qe)

    def items(self):
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)
