"""Command-line front end, golden fixtures and the all-pairs verification driver.

    adoforge fk --s 2 --t 3 --mmax 101 [--at-root p]
    adoforge alexander --s 2 --t 5 [--compose 3]
    adoforge ado --p 4 --s 7 --method all
    adoforge refined --s 2 --what ado3
    adoforge rmatrix --s 3 --r 3 --compare closed
    adoforge verify --suite all [--jobs 4] [--report out.json]

Every subcommand takes ``--format json|text``. Exit status: 0 success,
1 mismatch, 2 usage error, 3 inconclusive or internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from .exact_arith import Cyclotomic, root_of_unity
from .laurent import HalfLaurent, MPoly
from .torus_fk import InconclusiveError, TorusKnot

__all__ = [
    "SCHEMA",
    "FIXTURE_ENV",
    "Case",
    "VerificationReport",
    "FixtureError",
    "fixture_dir",
    "load_fixture",
    "check_fixtures",
    "expected_fixtures",
    "format_coeff",
    "format_poly",
    "poly_payload",
    "dumps",
    "run_verify",
    "SUITES",
    "main",
]

SCHEMA = "adoforge/1"
FIXTURE_ENV = "ADOFORGE_FIXTURES"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ERROR = 3

FIXTURE_KINDS = {"ado4", "num", "nhat", "refined-alexander", "refined-ado3"}


# -- fixtures ------------------------------------------------------------------


class FixtureError(ValueError):
    """A fixture file is missing or does not follow the schema."""


def fixture_dir(override: str | os.PathLike | None = None) -> Path:
    """Fixture root: explicit override, then $ADOFORGE_FIXTURES, then the packaged copy."""
    if override:
        return Path(override)
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "fixtures"


def load_fixture(path: str | os.PathLike) -> dict:
    """Read and validate one fixture; ``payload["poly"]`` comes back decoded."""
    path = Path(path)
    if not path.is_file():
        raise FixtureError(f"missing fixture {path}")
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(payload, dict):
        raise FixtureError(f"{path}: top level must be an object")
    if payload.get("schema") != SCHEMA:
        raise FixtureError(f"{path}: schema {payload.get('schema')!r}, expected {SCHEMA!r}")
    for key in ("kind", "knot", "poly"):
        if key not in payload:
            raise FixtureError(f"{path}: missing field {key!r}")
    if payload["kind"] not in FIXTURE_KINDS:
        raise FixtureError(f"{path}: unknown kind {payload['kind']!r}")
    poly = payload["poly"]
    try:
        if poly.get("half_exponents"):
            decoded = HalfLaurent.from_json(poly)
        else:
            decoded = MPoly.from_json(poly)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FixtureError(f"{path}: bad polynomial ({exc})") from None
    out = dict(payload)
    out["poly"] = decoded
    out["path"] = str(path)
    return out


def expected_fixtures() -> list[str]:
    """Relative paths of every fixture the verify suites read."""
    names = [f"ado4/T2_{n}.json" for n in range(15, 40, 2)]
    names += ["rmatrix/nhat3_T2_3.json", "rmatrix/nhat4_T2_3.json"]
    names += [f"rmatrix/num3_T2_{n}.json" for n in range(5, 18, 2)]
    names += [f"rmatrix/num4_T2_{n}.json" for n in range(7, 14, 2)]
    for s in (2, 3, 4):
        names += [f"refined/alexander_T2_{2 * s + 1}.json", f"refined/ado3_T2_{2 * s + 1}.json"]
    return sorted(names)


def check_fixtures(base: str | os.PathLike | None = None) -> "VerificationReport":
    """Load every expected fixture; missing or malformed files are mismatches."""
    root = fixture_dir(base)
    cases = []
    for name in expected_fixtures():
        t0 = time.perf_counter()
        try:
            load_fixture(root / name)
            outcome = "equal"
        except FixtureError as exc:
            outcome = f"mismatch({exc})"
        cases.append(Case(f"fixtures/{name}", f"load {name}", "file", "schema", outcome,
                          time.perf_counter() - t0))
    return VerificationReport(cases)


# -- formatting ----------------------------------------------------------------


def _two_term(c: Cyclotomic, w: Cyclotomic):
    # c = a + b w with a, b rational, if possible
    d = w - w.conjugate()
    b = (c - c.conjugate()) * d.inv()
    a = c - b * w
    if a.is_rational() and b.is_rational():
        return a.rational_value(), b.rational_value()
    return None


def _fmt_ab(a: Fraction, b: Fraction, unit: str) -> str:
    if not b:
        return str(a)
    sep = "*" if len(unit) > 1 else ""
    bs = unit if b == 1 else "-" + unit if b == -1 else f"{b}{sep}{unit}"
    if not a:
        return bs
    return f"{a}{bs}" if bs.startswith("-") else f"{a}+{bs}"


def format_coeff(c) -> str:
    """a+bi for Q(i), a+b*zeta3 for Q(zeta_3), power basis otherwise."""
    if not isinstance(c, Cyclotomic):
        return str(c)
    if c.is_rational():
        return str(c.rational_value())
    if c.order % 4 == 0:
        ab = _two_term(c, root_of_unity(4, 1))
        if ab:
            return _fmt_ab(*ab, "i")
    if c.order % 3 == 0:
        ab = _two_term(c, root_of_unity(3, 1))
        if ab:
            return _fmt_ab(*ab, "zeta3")
    return str(c)


def _mono(var: str, e) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if not isinstance(e, Fraction) else f"{var}^({e})"


def _join(parts: list[tuple[str, str]]) -> str:
    out = []
    for cs, mono in parts:
        # a lone product such as 3, -1/2, -2i or zeta3 needs no brackets
        simple = "+" not in cs and "-" not in cs[1:] and " " not in cs
        if not mono:
            out.append(cs if simple else f"({cs})")
        elif cs in ("1", "-1"):
            out.append(mono if cs == "1" else "-" + mono)
        else:
            out.append(f"{cs} {mono}" if simple else f"({cs}) {mono}")
    if not out:
        return "0"
    return " + ".join(out).replace("+ -", "- ")


def format_poly(poly, var: str = "x", scale: int = 2) -> str:
    """Readable form, highest degree first.

    HalfLaurent keys are divided by ``scale`` (2 for x with half-integer
    exponents, 1 when the keys already are the exponents of ``var``).
    """
    if isinstance(poly, HalfLaurent):
        parts = []
        for e, c in sorted(poly.items(), reverse=True):
            exp = e // scale if e % scale == 0 else Fraction(e, scale)
            parts.append((format_coeff(c), _mono(var, exp)))
        return _join(parts)
    if isinstance(poly, MPoly):
        parts = []
        for k, c in sorted(poly.items(), reverse=True):
            mono = " ".join(m for m in (_mono(v, e) for v, e in zip(poly.vars, k)) if m)
            parts.append((format_coeff(c), mono))
        return _join(parts)
    return str(poly)


def poly_payload(kind: str, poly, **meta) -> dict:
    payload = {"schema": SCHEMA, "kind": kind, "poly": poly.to_json()}
    payload.update(meta)
    return payload


def dumps(payload) -> str:
    # byte-identical output for identical inputs
    return json.dumps(payload, sort_keys=True, indent=1)


# -- verification report ---------------------------------------------------------


@dataclass
class Case:
    key: str
    description: str
    method_a: str
    method_b: str
    outcome: str
    seconds: float = 0.0
    truncation: dict = field(default_factory=dict)
    criterion: int | None = None

    @property
    def status(self) -> str:
        return self.outcome.split("(", 1)[0]


@dataclass
class VerificationReport:
    cases: list[Case]

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.key)

    @property
    def summary(self) -> dict[str, int]:
        out = {"equal": 0, "equal_after": 0, "mismatch": 0, "inconclusive": 0}
        for c in self.cases:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["mismatch"] == 0

    def by_criterion(self) -> dict[int, list[Case]]:
        out: dict[int, list[Case]] = {}
        for c in self.cases:
            if c.criterion is not None:
                out.setdefault(c.criterion, []).append(c)
        return out

    def to_json(self, timings: bool = True) -> dict:
        cases = []
        for c in self.cases:
            d = asdict(c)
            if timings:
                d["seconds"] = round(c.seconds, 3)
            else:
                d.pop("seconds")
            cases.append(d)
        return {"schema": SCHEMA, "kind": "verification-report", "summary": self.summary, "ok": self.ok,
                "cases": cases}

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            trunc = " ".join(f"{k}={v}" for k, v in sorted(c.truncation.items()))
            lines.append(f"[{c.status:>12}] {c.key}: {c.method_a} vs {c.method_b} -> {c.outcome}"
                         f"  ({c.seconds:.2f}s{', ' + trunc if trunc else ''})")
        s = self.summary
        lines.append(
            f"{len(self.cases)} cases: {s['equal']} equal, {s['equal_after']} equal after normalization, "
            f"{s['mismatch']} mismatch, {s['inconclusive']} inconclusive"
        )
        return "\n".join(lines)


# -- verification cases ------------------------------------------------------------
#
# Each case is a module-level function returning (outcome, truncation) so it can be
# shipped to a worker process by name.


def _outcome(cmp) -> str:
    if cmp.kind == "different":
        return f"mismatch(first difference at x^({cmp.witness}/2))"
    return str(cmp)


def _exact(a, b) -> str:
    if a == b:
        return "equal"
    from .ado import _first_difference

    if isinstance(a, HalfLaurent) and isinstance(b, HalfLaurent):
        return f"mismatch(first difference at x^({_first_difference(a, b)}/2))"
    diff = a - b
    k, c = diff.items()[0]
    return f"mismatch(differs at exponents {list(k)} by {format_coeff(c)})"


def _fixture_poly(base: str, name: str):
    return load_fixture(Path(base) / name)["poly"]


def case_closed_vs_fk(p: int, s: int, base: str):
    from .ado import ado3_closed, ado4_algorithm, ado4_seed, ado_from_fk, compare_up_to_normalization
    from .torus_fk import default_mmax

    knot = TorusKnot.two_strand(s)
    if p == 3:
        ref = ado3_closed(s)
    else:
        ref = ado4_seed(2 * s + 1) if s <= 6 else ado4_algorithm(s)
    got = ado_from_fk(p, knot)
    return _outcome(compare_up_to_normalization(ref, got)), {"m_max": default_mmax(knot, p)}


def case_rmatrix(p: int, s: int, against: str, base: str):
    from .rmatrix import ado_compare

    return _outcome(ado_compare(s, p, against)), {}


def case_fk_doubled(p: int, s: int, base: str):
    from .ado import ado_from_fk
    from .torus_fk import default_mmax

    knot = TorusKnot.two_strand(s)
    m = default_mmax(knot, p)
    a = ado_from_fk(p, knot, m)
    b = ado_from_fk(p, knot, 2 * m)
    return _exact(a.poly, b.poly), {"m_max": m, "m_max_doubled": 2 * m}


def case_ado4_fixture(s: int, base: str):
    from .ado import ado4_algorithm

    ref = _fixture_poly(base, f"ado4/T2_{2 * s + 1}.json")
    return _exact(ado4_algorithm(s).poly, ref), {}


def case_nhat_fixture(r: int, base: str):
    from .rmatrix import normalized_nhat

    ref = _fixture_poly(base, f"rmatrix/nhat{r}_T2_3.json")
    return _exact(normalized_nhat(1, r).poly.y_part(), ref), {}


def case_num_fixture(r: int, s: int, base: str):
    from .ado import compare_up_to_normalization
    from .rmatrix import num_extract

    ref = _fixture_poly(base, f"rmatrix/num{r}_T2_{2 * s + 1}.json")
    return _outcome(compare_up_to_normalization(num_extract(s, r), ref, p=r)), {}


def case_refined_alexander(s: int, base: str):
    from .refined import refined_alexander

    ref = _fixture_poly(base, f"refined/alexander_T2_{2 * s + 1}.json")
    return _exact(refined_alexander(s), ref), {}


def case_refined_ado3(s: int, base: str):
    from .refined import refined_ado3

    ref = _fixture_poly(base, f"refined/ado3_T2_{2 * s + 1}.json")
    r = refined_ado3(s)
    return _exact(r.poly, ref), {"k1_max": r.k1_max}


def case_refined_reduction(s: int, base: str):
    from .ado import ado3_closed
    from .refined import refined_ado3

    r = refined_ado3(s)
    return _exact(r.reduced(), ado3_closed(s).poly), {"k1_max": r.k1_max}


def case_refined_weyl(s: int, base: str):
    from .refined import refined_ado3, refined_weyl_check

    r = refined_ado3(s)
    ok = refined_weyl_check(r)
    return ("equal" if ok else "mismatch(A(1/x,t) != A(x/(zeta3^2 t^2),t))"), {"k1_max": r.k1_max}


def case_alexander_weyl(s: int, base: str):
    from .refined import refined_alexander

    d = refined_alexander(s)
    lhs = d.negate_exponents(["x"])
    rhs = d.substitute("x", 1, {"x": 1, "t": -2})
    return _exact(lhs, rhs), {}


def case_refined_doubled(s: int, base: str):
    from .refined import default_k1max, refined_ado3

    k = default_k1max(s)
    a = refined_ado3(s, k)
    b = refined_ado3(s, 2 * k)
    return _exact(a.poly, b.poly), {"k1_max": k, "k1_max_doubled": 2 * k}


def case_rinv(r: int, base: str):
    from .rmatrix import rinv_identity_check

    return ("equal" if rinv_identity_check(r) else "mismatch(R R^-1 != 1)"), {}


def case_mmr(s: int, base: str):
    from .torus_fk import mmr_order0_check

    res = mmr_order0_check(TorusKnot.two_strand(s), 10)
    out = "equal" if res else f"mismatch(first difference at x^({res.first_mismatch}/2))"
    return out, {"m_max": res.m_max, "x_order": 10}


def case_zdegree(s: int, r: int, base: str):
    from .rmatrix import evaluate_torus_tangle

    g, _ = evaluate_torus_tangle(s, r)
    zs = g.z_degrees()
    return ("equal" if len(zs) == 1 else f"mismatch(Z-degrees {sorted(zs)})"), {}


def _coprime_pairs(limit: int):
    from math import gcd

    return [(a, b) for a in range(2, limit + 1) for b in range(a + 1, limit + 1) if gcd(a, b) == 1]


def case_residues(limit: int, base: str):
    from .torus_fk import epsilon

    for a, b in _coprime_pairs(limit):
        knot = TorusKnot(a, b)
        res = knot.residues()  # raises on a clash
        n = 2 * a * b
        if len(res) != 4 or sum(res.values()) != 0:
            return f"mismatch(residue table of {knot}: {res})", {}
        for m in range(1, n, 2):
            if epsilon(knot, m) != epsilon(knot, m + n) or epsilon(knot, m) != epsilon(knot, n - m):
                return f"mismatch(epsilon of {knot} at m={m})", {}
    return "equal", {"s,t <=": limit}


def case_q_integrality(limit: int, base: str):
    from .torus_fk import default_mmax, fk_series

    for a, b in _coprime_pairs(limit):
        knot = TorusKnot(a, b)
        series = fk_series(knot, default_mmax(knot, 1))  # QSeries rejects fractional exponents
        for m, _ in series.items():
            series.combined_exponent(m)
    return "equal", {"s,t <=": limit}


def case_ado_weyl(base: str):
    from .ado import AdoPolynomial, ado3_closed, ado4_algorithm, ado4_seed, ado_from_fk

    polys = [ado3_closed(s) for s in range(1, 9)]
    polys += [ado4_seed(n) for n in range(3, 14, 2)]
    polys += [ado4_algorithm(s) for s in range(7, 20)]
    polys += [ado_from_fk(p, TorusKnot.two_strand(s)) for p in (3, 4) for s in range(1, 11)]
    for a in polys:
        if not isinstance(a, AdoPolynomial) or not a.poly.is_symmetric() or a.poly.invert() != a.poly:
            return f"mismatch({a.knot} p={a.p} is not symmetric)", {}
    return "equal", {"polynomials": len(polys)}


CASES = {f.__name__: f for f in (
    case_residues, case_q_integrality, case_ado_weyl,
    case_closed_vs_fk, case_rmatrix, case_fk_doubled, case_ado4_fixture, case_nhat_fixture,
    case_num_fixture, case_refined_alexander, case_refined_ado3, case_refined_reduction,
    case_refined_weyl, case_alexander_weyl, case_refined_doubled, case_rinv, case_mmr, case_zdegree,
)}


@dataclass(frozen=True)
class CaseSpec:
    key: str
    description: str
    method_a: str
    method_b: str
    criterion: int
    fn: str
    args: tuple


def _suite_ado3() -> list[CaseSpec]:
    out = []
    for s in range(1, 9):
        n = 2 * s + 1
        out += [
            CaseSpec(f"c1/ado3/T2_{n:02d}/closed-fk", f"ADO_3 T(2,{n})", "closed", "from-fk", 1,
                     "case_closed_vs_fk", (3, s)),
            CaseSpec(f"c1/ado3/T2_{n:02d}/rmatrix-closed", f"ADO_3 T(2,{n})", "rmatrix", "closed", 1,
                     "case_rmatrix", (3, s, "closed")),
            CaseSpec(f"c1/ado3/T2_{n:02d}/rmatrix-fk", f"ADO_3 T(2,{n})", "rmatrix", "from-fk", 1,
                     "case_rmatrix", (3, s, "from-fk")),
            CaseSpec(f"c7/ado3/T2_{n:02d}/fk-doubled", f"ADO_3 T(2,{n}) with m_max doubled", "from-fk",
                     "from-fk(2 m_max)", 7, "case_fk_doubled", (3, s)),
        ]
    return out


def _suite_ado4() -> list[CaseSpec]:
    out = []
    for s in range(1, 11):
        n = 2 * s + 1
        ref = "seed" if s <= 6 else "algorithm"
        out += [
            CaseSpec(f"c2/ado4/T2_{n:02d}/{ref}-fk", f"ADO_4 T(2,{n})", ref, "from-fk", 2,
                     "case_closed_vs_fk", (4, s)),
            CaseSpec(f"c7/ado4/T2_{n:02d}/fk-doubled", f"ADO_4 T(2,{n}) with m_max doubled", "from-fk",
                     "from-fk(2 m_max)", 7, "case_fk_doubled", (4, s)),
        ]
        if s <= 6:
            out.append(CaseSpec(f"c2/ado4/T2_{n:02d}/rmatrix-seed", f"ADO_4 T(2,{n})", "rmatrix", "seed", 2,
                                "case_rmatrix", (4, s, "closed")))
        else:
            out.append(CaseSpec(f"c2/ado4/T2_{n:02d}/algorithm-worked", f"ADO_4 T(2,{n}) worked example",
                                "algorithm", "fixture", 2, "case_ado4_fixture", (s,)))
    return out


def _suite_ado4_golden() -> list[CaseSpec]:
    return [
        CaseSpec(f"c3/ado4/T2_{2 * s + 1:02d}/algorithm-fixture", f"ADO_4 T(2,{2 * s + 1}) golden",
                 "algorithm", "fixture", 3, "case_ado4_fixture", (s,))
        for s in range(11, 20)
    ]


def _suite_rmatrix_tables() -> list[CaseSpec]:
    out = [
        CaseSpec(f"c4/nhat{r}/T2_03", f"N-hat^{r} T(2,3)", "normalized_nhat", "fixture", 4,
                 "case_nhat_fixture", (r,))
        for r in (3, 4)
    ]
    out += [
        CaseSpec(f"c4/num3/T2_{2 * s + 1:02d}", f"num N^3 T(2,{2 * s + 1})", "num_extract", "fixture", 4,
                 "case_num_fixture", (3, s))
        for s in range(2, 9)
    ]
    out += [
        CaseSpec(f"c4/num4/T2_{2 * s + 1:02d}", f"num N^4 T(2,{2 * s + 1})", "num_extract", "fixture", 4,
                 "case_num_fixture", (4, s))
        for s in range(3, 7)
    ]
    return out


def _suite_refined() -> list[CaseSpec]:
    out = []
    for s in (2, 3, 4):
        n = 2 * s + 1
        out += [
            CaseSpec(f"c5/alexander/T2_{n:02d}", f"refined Alexander T(2,{n})", "refined_alexander", "fixture",
                     5, "case_refined_alexander", (s,)),
            CaseSpec(f"c5/ado3/T2_{n:02d}/fixture", f"refined ADO_3 T(2,{n})", "refined_ado3", "fixture",
                     5, "case_refined_ado3", (s,)),
        ]
    for s in range(1, 7):
        n = 2 * s + 1
        out += [
            CaseSpec(f"c5/ado3/T2_{n:02d}/reduction", f"refined ADO_3 T(2,{n}) at t=-1, x->zeta3^2 x",
                     "refined_ado3", "closed", 5, "case_refined_reduction", (s,)),
            CaseSpec(f"c5/ado3/T2_{n:02d}/weyl", f"refined ADO_3 T(2,{n}) Weyl symmetry", "A(1/x,t)",
                     "A(x/(zeta3^2 t^2),t)", 5, "case_refined_weyl", (s,)),
            CaseSpec(f"c5/alexander/T2_{n:02d}/weyl", f"refined Alexander T(2,{n}) Weyl symmetry",
                     "D(1/x,t)", "D(x/t^2,t)", 5, "case_alexander_weyl", (s,)),
            CaseSpec(f"c7/refined/T2_{n:02d}/k1-doubled", f"refined ADO_3 T(2,{n}) with k1_max doubled",
                     "refined_ado3", "refined_ado3(2 k1_max)", 7, "case_refined_doubled", (s,)),
        ]
    return out


def _suite_properties() -> list[CaseSpec]:
    out = [CaseSpec(f"c6/rinv/r{r}", f"R R^-1 = 1 at r={r}", "R*R^-1", "identity", 6, "case_rinv", (r,))
           for r in range(2, 6)]
    out += [CaseSpec(f"c6/mmr/T2_{2 * s + 1:02d}", f"MMR order 0 T(2,{2 * s + 1})", "F_K", "1/Delta", 6,
                     "case_mmr", (s,)) for s in (1, 2, 3)]
    out += [
        CaseSpec("c6/epsilon/residues", "epsilon residues for s,t <= 15", "residue table", "definition", 6,
                 "case_residues", (15,)),
        CaseSpec("c6/fk/q-integrality", "integral q-exponents of F_K for s,t <= 15", "F_K terms", "Z", 6,
                 "case_q_integrality", (15,)),
        CaseSpec("c6/ado/weyl", "x -> 1/x symmetry of every ADO polynomial", "A(1/x)", "A(x)", 6,
                 "case_ado_weyl", ()),
    ]
    out += [CaseSpec(f"c6/zdegree/r{r}/T2_{2 * s + 1:02d}", f"uniform Z-degree T(2,{2 * s + 1}) r={r}",
                     "tangle", "Z-degree", 6, "case_zdegree", (s, r))
            for r in (2, 3, 4) for s in (1, 2, 3)]
    return out


SUITES = {
    "ado3": _suite_ado3,
    "ado4": _suite_ado4,
    "ado4-golden": _suite_ado4_golden,
    "rmatrix-tables": _suite_rmatrix_tables,
    "refined": _suite_refined,
    "properties": _suite_properties,
}


def suite_cases(name: str) -> list[CaseSpec]:
    if name == "all":
        return [c for f in SUITES.values() for c in f()]
    if name == "robustness":
        return [c for f in SUITES.values() for c in f() if c.criterion == 7]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()


def _run_one(spec: CaseSpec, base: str) -> Case:
    t0 = time.perf_counter()
    trunc: dict = {}
    try:
        outcome, trunc = CASES[spec.fn](*spec.args, base)
    except InconclusiveError as exc:
        outcome = f"inconclusive({exc})"
    except FixtureError as exc:
        outcome = f"mismatch({exc})"
    except (ArithmeticError, ValueError) as exc:
        outcome = f"mismatch({type(exc).__name__}: {exc})"
    return Case(spec.key, spec.description, spec.method_a, spec.method_b, outcome,
                time.perf_counter() - t0, trunc, spec.criterion)


def run_verify(suite: str = "all", fixtures: str | os.PathLike | None = None, jobs: int = 1,
               log=None) -> VerificationReport:
    """Run a suite; with jobs > 1 the cases go to a process pool."""
    base = str(fixture_dir(fixtures))
    specs = suite_cases(suite)
    if jobs <= 1:
        cases = []
        for spec in specs:
            case = _run_one(spec, base)
            if log:
                log(case)
            cases.append(case)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_run_one, specs, [base] * len(specs)))
        if log:
            for case in sorted(cases, key=lambda c: c.key):
                log(case)
    return VerificationReport(cases)


# -- subcommands ---------------------------------------------------------------------


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(dumps(payload))
    else:
        print(text)


def cmd_fk(args) -> int:
    from .torus_fk import fk_at_root, fk_series

    knot = TorusKnot(args.s, args.t)
    if args.mmax < 1:
        raise UsageError("--mmax must be positive")
    if args.at_root:
        if args.at_root < 1:
            raise UsageError("--at-root must be positive")
        root = fk_at_root(knot, args.at_root, args.mmax)
        full = root.full()
        payload = poly_payload("fk-at-root", full, knot=[knot.s, knot.t], p=args.at_root, m_max=args.mmax)
        _emit(args, payload, f"F_{knot}(x, zeta_{args.at_root}) = {format_poly(full)}  (terms with m <= {args.mmax})")
        return EXIT_OK
    series = fk_series(knot, args.mmax)
    terms = [
        {"m": m, "sign": sign, "q_exponent": [qe.numerator, qe.denominator]}
        for m, (sign, qe) in series.items()
    ]
    pre = series.prefactor_exponent
    payload = {"schema": SCHEMA, "kind": "fk", "knot": [knot.s, knot.t], "m_max": args.mmax,
               "prefactor": [pre.numerator, pre.denominator], "terms": terms}
    lines = [f"F_{knot}(x, q) = 1/2 q^({pre}) * sum over m <= {args.mmax}:"]
    for m, (sign, qe) in series.items():
        lines.append(f"  {'+' if sign > 0 else '-'} q^({qe}) (x^({m}/2) - x^(-{m}/2))")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_alexander(args) -> int:
    from .alexander import alexander_composed, alexander_torus

    knot = TorusKnot(args.s, args.t)
    if args.compose:
        if args.compose < 1:
            raise UsageError("--compose must be positive")
        poly = alexander_composed(knot, args.compose)
        label = f"Delta_{knot}(x^{args.compose})"
    else:
        poly = alexander_torus(knot)
        label = f"Delta_{knot}(x)"
    payload = poly_payload("alexander", poly, knot=[knot.s, knot.t], compose=args.compose or 1)
    _emit(args, payload, f"{label} = {format_poly(poly)}")
    return EXIT_OK


def _ado_methods(p: int, s: int, method: str, m_max):
    from .ado import ado3_closed, ado4_algorithm, ado4_seed, ado_from_fk
    from .rmatrix import num_extract

    knot = TorusKnot.two_strand(s)
    out = {}
    want = {"closed", "algorithm", "from-fk", "rmatrix"} if method == "all" else {method}
    if "closed" in want:
        if p == 3:
            out["closed"] = ado3_closed(s).poly
        elif 2 * s + 1 <= 13:
            out["closed"] = ado4_seed(2 * s + 1).poly
        elif method != "all":
            raise UsageError("ADO_4 closed data exists for 2s+1 <= 13 only; use --method algorithm")
    if "algorithm" in want:
        if p == 4 and s >= 7:
            out["algorithm"] = ado4_algorithm(s).poly
        elif method != "all":
            raise UsageError("the algorithm applies to p = 4 and s >= 7")
    if "from-fk" in want:
        out["from-fk"] = ado_from_fk(p, knot, m_max).poly
    if "rmatrix" in want:
        out["rmatrix"] = num_extract(s, p)
    return out


def cmd_ado(args) -> int:
    from .ado import compare_up_to_normalization

    if args.p not in (3, 4) and args.method != "from-fk":
        raise UsageError("closed forms exist for p = 3, 4 only; use --method from-fk")
    if args.p < 2 or args.s < 1:
        raise UsageError("need p >= 2 and s >= 1")
    polys = _ado_methods(args.p, args.s, args.method, args.mmax)
    names = list(polys)
    comparisons = []
    status = EXIT_OK
    for b in names[1:]:
        cmp = compare_up_to_normalization(polys[names[0]], polys[b], p=args.p)
        comparisons.append({"a": names[0], "b": b, "outcome": _outcome(cmp)})
        if not cmp:
            status = EXIT_MISMATCH
    knot = TorusKnot.two_strand(args.s)
    payload = {
        "schema": SCHEMA, "kind": "ado", "p": args.p, "knot": [2, 2 * args.s + 1],
        "methods": {k: v.to_json() for k, v in polys.items()}, "comparisons": comparisons,
    }
    lines = [f"ADO_{args.p}[{knot}] via {k}: {format_poly(v)}" for k, v in polys.items()]
    lines += [f"{c['a']} vs {c['b']}: {c['outcome']}" for c in comparisons]
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_refined(args) -> int:
    from .refined import refined_ado3, refined_alexander, superpoly

    if args.s < 1:
        raise UsageError("need s >= 1")
    knot = [2, 2 * args.s + 1]
    if args.what == "alexander":
        poly = refined_alexander(args.s)
        payload = poly_payload("refined-alexander", poly, knot=knot)
        _emit(args, payload, f"Delta_T(2,{knot[1]})(x, t) = {format_poly(poly)}")
    elif args.what == "ado3":
        res = refined_ado3(args.s, args.k1max)
        payload = poly_payload("refined-ado3", res.poly, knot=knot, k1_max=res.k1_max)
        _emit(args, payload, f"ADO_3[T(2,{knot[1]}); x, t] = {format_poly(res.poly)}  (k1_max={res.k1_max})")
    else:
        if args.r is None or args.r < 0:
            raise UsageError("--what superpoly needs --r R with R >= 0")
        poly = superpoly(args.s, args.r)
        payload = poly_payload("superpoly", poly, knot=[2, -knot[1]], r=args.r)
        _emit(args, payload, f"P_S^{args.r}[T(2,-{knot[1]})](q, a, t) = {format_poly(poly)}")
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    from .ado import compare_up_to_normalization
    from .rmatrix import normalized_nhat, num_extract

    if args.s < 1 or args.r < 2:
        raise UsageError("need s >= 1 and r >= 2")
    if args.compare == "closed" and args.r not in (3, 4):
        raise UsageError("closed forms exist for r = 3, 4 only; use --compare from-fk")
    nh = normalized_nhat(args.s, args.r)
    num = num_extract(args.s, args.r)
    payload = {
        "schema": SCHEMA, "kind": "rmatrix", "knot": [2, 2 * args.s + 1], "r": args.r,
        "nhat": nh.poly.y_part().to_json(), "num": num.to_json(),
    }
    lines = [
        f"N-hat^{args.r}[T(2,{2 * args.s + 1})] = {format_poly(nh.poly.y_part(), 'y', 1)}",
        f"num = {format_poly(num)}",
    ]
    status = EXIT_OK
    if args.compare:
        ref = _ado_methods(args.r, args.s, "from-fk" if args.compare == "from-fk" else "closed", None)
        if not ref and args.r == 4:
            ref = _ado_methods(args.r, args.s, "algorithm", None)
        ref_poly = next(iter(ref.values()))
        cmp = compare_up_to_normalization(num, ref_poly, p=args.r)
        payload["comparison"] = {"against": args.compare, "outcome": _outcome(cmp)}
        lines.append(f"vs {args.compare}: {_outcome(cmp)}")
        if not cmp:
            status = EXIT_MISMATCH
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_verify(args) -> int:
    if args.suite == "fixtures":
        report = check_fixtures(args.fixtures)
    else:
        log = None
        if args.format == "text" and not args.quiet:
            def log(case):
                print(f"[{case.status:>12}] {case.key}: {case.outcome} ({case.seconds:.2f}s)",
                      file=sys.stderr, flush=True)
        report = run_verify(args.suite, args.fixtures, args.jobs, log)
    if args.report:
        Path(args.report).write_text(dumps(report.to_json()) + "\n")
    if args.format == "json":
        print(dumps(report.to_json(timings=False)))
    else:
        print(report.to_text())
    if report.ok:
        return EXIT_OK
    return EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adoforge", description="F_K series and ADO polynomials of torus knots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["json", "text"], default="text")
        return p

    p = common(sub.add_parser("fk", help="F_K(x, q) of T(s,t)"))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--at-root", type=int, dest="at_root")
    p.set_defaults(func=cmd_fk)

    p = common(sub.add_parser("alexander", help="Alexander polynomial of T(s,t)"))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--compose", type=int)
    p.set_defaults(func=cmd_alexander)

    p = common(sub.add_parser("ado", help="ADO_p of T(2,2s+1)"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=["closed", "algorithm", "from-fk", "rmatrix", "all"], default="all")
    p.add_argument("--mmax", type=int, help="F_K truncation for from-fk (default: module policy)")
    p.set_defaults(func=cmd_ado)

    p = common(sub.add_parser("refined", help="t-deformed invariants of T(2,2s+1)"))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--what", choices=["alexander", "ado3", "superpoly"], required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--k1max", type=int, help="k1 truncation (default: module policy)")
    p.set_defaults(func=cmd_refined)

    p = common(sub.add_parser("rmatrix", help="R-matrix evaluation of T(2,2s+1) at q = zeta_2r"))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--compare", choices=["closed", "from-fk"])
    p.set_defaults(func=cmd_rmatrix)

    p = common(sub.add_parser("verify", help="run the acceptance matrix"))
    p.add_argument("--suite", choices=["all", "robustness", "fixtures", *SUITES], default="all")
    p.add_argument("--fixtures", help=f"fixture directory (default: ${FIXTURE_ENV} or the packaged copy)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="also write the JSON report here")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"adoforge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad knot parameters and similar precondition failures
        print(f"adoforge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconclusiveError as exc:
        print(f"adoforge {args.command}: inconclusive: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ArithmeticError as exc:
        print(f"adoforge {args.command}: failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
