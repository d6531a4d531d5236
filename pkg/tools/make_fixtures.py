"""Regenerate the golden fixture files from plain-text transcriptions.

Each entry is the non-negative half of a symmetric polynomial (the constant
once); the other half is its mirror image. Run from the repository root:

    python3 tools/make_fixtures.py

Development-only: needs sympy to parse the transcriptions.
"""
from __future__ import annotations

import json
import re
import sys
from pathlib import Path

import sympy

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from adoforge.exact_arith import Cyclotomic, root_of_unity  # noqa: E402
from adoforge.laurent import HalfLaurent, MPoly  # noqa: E402
from adoforge.cli import SCHEMA, fixture_dir  # noqa: E402

# symbols: i; s3 = sqrt(3); w3, w6, w8, w12 = the principal roots (-1)^(2/3),
# (-1)^(1/3), (-1)^(1/4), (-1)^(1/6); q = zeta_{2r}
TRANSCRIPTIONS = {
    'W15': (
        '-i x^21 -ix^20+ (-1-i)x^19 + (-1-i)x^18-x^17-x^16 -i x^13 - i x^12 + (-1-i)x^11 + (-1-i)x^10 - x^9 - x^8 - ix^6 - 2*i x^5 + (1-2*i)x^4 - 2*i x^3 - ix^2 - 1'
    ),
    'W17': (
        'x^24 + x^23+ (1-i)x^22 + (1-i)x^21- i x^20- i x^19+ x^16 + x^15 +(1-i)x^14+ (1-i)x^13- i x^12- i x^11 + x^8 - i x^6 -2*i x^5 + (-1-2*i )x^4 - 2*i x^3 - i x^2 + 1'
    ),
    'W19': (
        'i x^27+ i x^26 + (1+i)x^25 + (1+i)x^24 + x^23 + x^22 + i x^19+ i x^18 + (1+i)x^17 + (1+i)x^16 + x^15 + x^14 + i x^11+ i x^10 + (1+i)x^9 + (1+2*i)x^8 + (1+i) x^7 + i x^6 + (-1+i)x^5 - x^4 + (-1+i)x^3 + i x^2 + (1+i) x + 1+2*i'
    ),
    'W21': (
        '- x^30 - x^29+ (-1+i)x^28 + (-1+i)x^27 + i x^26 + i x^25 - x^22 - x^21 + (-1+i)x^20 + (-1+i)x^19 + i x^18+ i x^17 - x^14 - x^13 + (-1+i) x^12 + (-1+i)x^11 + i x^10 + (1+i) x^9 + x^8 + (1+i)x^7 + ix^6 + (-1+i)x^5 + (-1+2*i)x^4 + (-1+i)x^3 + i x^2 + (1+i)x + 1'
    ),
    'A23': (
        '-i x^33-i x^32-(1+i) x^31-(1+i) x^30-x^29-x^28-i x^25-i x^24 -(1+i)x^23 -(1+i) x^22 -x^21-x^20-i x^17-i x^16-(1+i) x^15 -(1+i)x^14-x^13-x^12 -i x^10-2 i x^9+(1-2 i) x^8 -2 i x^7 -i x^6-x^4 -i x^2-2 i x+(1-2 i)'
    ),
    'A25': (
        'x^36+x^35+(1-i) x^34+(1-i) x^33-i x^32-i x^31+x^28+x^27 +(1-i)x^26+(1-i) x^25-i x^24-i x^23+x^20+x^19+(1-i) x^18 +(1-i) x^17-i x^16-i x^15 +x^12-i x^10 -2 i x^9-(1+2 i) x^8-2 i x^7-i x^6 +x^4-i x^2-2 i x-(1+2 i)'
    ),
    'A27': (
        'i x^39+ i x^38 + (1+i)x^37 + (1+i)x^36 + x^35 + x^34 + i x^31+ i x^30 + (1+i)x^29 + (1+i)x^28 + x^27 + x^26 + i x^23+ i x^22 + (1+i)x^21 + (1+i)x^20 + x^19 + x^18 + i x^15+ i x^14 + (1+i)x^13 + (1+2*i)x^12 + (1+i) x^11 + i x^10 + (-1+i)x^9 - x^8 + (-1+i)x^7 + i x^6 + (1+i) x^5 + (1+2*i) x^4 + (1+i)x^3 + i x^2 + (-1+i)x -1'
    ),
    'A29': (
        '- x^42 - x^41+ (-1+i)x^40 + (-1+i)x^39 + i x^38 + i x^37 - x^34 - x^33 + (-1+i)x^32 + (-1+i)x^31 + i x^30 + i x^29 - x^26 - x^25 + (-1+i)x^24 + (-1+i)x^23 + i x^22 + i x^21 - x^18 - x^17 + (-1+i) x^16 + (-1+i)x^15 + i x^14 + (1+i) x^13 + x^12 + (1+i)x^11 + i x^10 + (-1+i)x^9 + (-1+2*i)x^8 + (-1+i)x^7 + i x^6 + (1+i)x^5 + x^4 + (1+i)x^3 + i x^2 + (-1+i)x -1+2*i'
    ),
    'A31': (
        '-i x^45-i x^44-(1+i) x^43-(1+i) x^42-x^41-x^40-i x^37-i x^36 -(1+i)x^35 -(1+i) x^34 -x^33-x^32-i x^29-i x^28-(1+i) x^27 -(1+i)x^26-x^25-x^24 -i x^21 -i x^20 -(1+i) x^19 -(1+i) x^18 -x^17 -x^16-i x^14-2 i x^13 +(1-2 i) x^12 -2 i x^11-i x^10-x^8 -i x^6-2 i x^5 +(1-2 i)x^4-2 i x^3-i x^2 -1'
    ),
    'A33': (
        'x^48 + x^47+ (1-i)x^46 + (1-i)x^45- i x^44- i x^43 +x^40 + x^39 + (1-i)x^38 + (1-i)x^37 - i x^36- i x^35 + x^32 + x^31 + (1-i)x^30 + (1-i)x^29 - i x^28- i x^27 + x^24 + x^23 + (1-i)x^22 + (1-i)x^21- i x^20 - i x^19 + x^16 - i x^14 -2*i x^13 + (-1-2*i )x^12- 2*i x^11 - i x^10 + x^8 -i x^6 -2*i x^5 + (-1-2*i)x^4 -2*i x^3 -i x^2 + 1'
    ),
    'A35': (
        'i x^51+i x^50+(1+i) x^49+(1+i) x^48+x^47+x^46+i x^43+i x^42 +(1+i)x^41 +(1+i) x^40+x^39 +x^38+i x^35+i x^34+(1+i) x^33 +(1+i)x^32+x^31+x^30 +i x^27 +i x^26 +(1+i) x^25+(1+i) x^24 +x^23 +x^22 +i x^19+i x^18 +(1+i) x^17 +(1+2 i) x^16+(1+i) x^15 +i x^14 -(1-i)x^13-x^12-(1-i) x^11 +i x^10 +(1+i) x^9 +(1+2 i) x^8 +(1+i) x^7+i x^6-(1-i)x^5 -x^4-(1-i) x^3 +i x^2 +(1+i) x +(1+2 i)'
    ),
    'A37': (
        '-x^54-x^53-(1-i) x^52-(1-i) x^51+i x^50+i x^49-x^46-x^45 -(1-i)x^44 -(1-i) x^43+i x^42 +i x^41-x^38-x^37-(1-i) x^36 -(1-i) x^35+i x^34+i x^33 -x^30 -x^29 -(1-i) x^28-(1-i) x^27 +i x^26 +i x^25-x^22-x^21-(1-i) x^20 -(1-i) x^19 +i x^18 +(1+i) x^17+x^16 +(1+i)x^15+i x^14 -(1-i) x^13 -(1-2 i) x^12-(1-i) x^11 +i x^10 +(1+i)x^9+x^8+(1+i) x^7+i x^6-(1-i) x^5 -(1-2 i) x^4 -(1-i) x^3 +i x^2 +(1+i) x+1'
    ),
    'A39': (
        '-i x^57-i x^56-(1+i) x^55-(1+i) x^54-x^53-x^52-i x^49-i x^48 -(1+i)x^47 -(1+i) x^46 -x^45-x^44-i x^41-i x^40-(1+i) x^39 -(1+i)x^38-x^37-x^36 -i x^33 -i x^32 -(1+i) x^31 -(1+i) x^30 -x^29 -x^28-i x^25-i x^24 -(1+i) x^23-(1+i) x^22 -x^21-x^20 -i x^18-2 i x^17 +(1-2 i)x^16 -2 i x^15 -i x^14-x^12-i x^10 -2 i x^9+(1-2 i) x^8 -2 i x^7 -i x^6-x^4 -i x^2-2 i x +(1-2 i)'
    ),
    'N3_5': (
        '-w6 y^8 -w6*y^6 -(1/2) w6 (3-i s3)y^4 -(1/2) w6*(1-i s3) y^2 -(1/2) w6 (1-i s3)'
    ),
    'N3_7': (
        '-w6 y^12 -w6*y^10-(1/2) w6 (3-i s3) y^8 -(1/2)*w6 (1-i s3) y^6 -(1/2) w6 (1-i s3)y^4 -w6'
    ),
    'N3_9': (
        '-(1/2) w12 (s3 +i) y^16 -(1/2) w12*(s3 +i)y^14 -w12 s3*y^12 -(1/2) w12*(s3 -i) y^10 -(1/2) w12 (s3 -i) y^8 -(1/2) w12 (s3 +i)y^4 -(1/2) w12*(s3 +i) y^2 -w12 s3'
    ),
    'N3_11': (
        '-w3 y^20 -w3*y^18 -(1/2) w3*(3-i s3) y^16 - (1/2) w3 (1-i s3) y^14 -(1/2) w3 (1-i s3) y^12 -w3*y^8 -w3 y^6 -(1/2) w3 (3-i s3) y^4 -(1/2) w3 (1-i s3)y^2 -(1/2) w3*(1-i s3)'
    ),
    'N3_13': (
        '(1/2) (-1-i s3) y^24 +(1/2) (-1-i s3) y^22 +(1/2) (-3-i s3) y^20 -y^18 -y^16 +(1/2) (-1-i s3) y^12 +(1/2) (-1-i s3) y^10 +(1/2) (-3-i s3)y^8 -y^6 -y^4 +(1/2) (-1-i s3)'
    ),
    'N3_15': (
        '(1/2) (1-i s3) y^28 +(1/2) (1-i s3) y^26 -i s3*y^24 +(1/2) (-1-i s3)y^22 +(1/2) (-1-i s3)y^20 +(1/2) (1-i s3) y^16 +(1/2) (1-i s3)y^14 -i s3 y^12 +(1/2) (-1-i s3) y^10 +(1/2) (-1-i s3) y^8 +(1/2) (1-i s3) y^4 +(1/2) (1-i s3) y^2 -i s3'
    ),
    'N3_17': (
        '(1/2) i (s3 +i) y^32 +(1/2)*i (s3 +i) y^30 + i s3 y^28 +(1/2) (1+i s3) y^26 +(1/2) (1+i s3) y^24 +(1/2) i (s3 +i) y^20 +(1/2) i(s3 +i) y^18 +i s3*y^16 +(1/2) (1+i s3)y^14 +(1/2) (1+i s3) y^12 +(1/2) i (s3 +i)y^8 +(1/2) i (s3 +i)y^6+i s3 y^4+i*s3*y^(-4) +(1/2) (1+i s3) y^2 +(1/2) (1+i s3)'
    ),
    'N4_7': (
        '-w6 y^12-w6*y^10-(1/2) w6 (3-i s3) y^8-(1/2) w6 (1-i s3) y^6 -(1/2) w6*(1-i s3) y^4-w6'
    ),
    'N4_9': (
        '-w8 y^24-w8*y^22-(1-i) w8 y^20-(1-i) w8 y^18 +w8^3 y^16 +w8^3*y^14-w8 y^8 +w8^3 y^4+2 w8^3 y^2 +(1+2 i) w8'
    ),
    'N4_11': (
        'i y^30+i y^28+(1+i)y^26+(1+i)y^24+y^22+y^20+i y^14+i y^12 +(1+i)y^10 +(1+2 i) y^8 +(1+i) y^6+i y^4-(1-i) y^2 -1'
    ),
    'N4_13': (
        '(-1+i) y^36-(1-i) y^34+2 i y^32+2 i y^30+(1+i)y^28+(1+i) y^26 -(1-i)y^20 -(1-i) y^18+2i y^16+2 i y^14+(1+i)y^12+2 y^10 +(1-i)y^8 +2 y^6 +(1+i) y^4 +2 i y^2 +(1+3 i)'
    ),
}

NHAT = {
    # exact N-hat^r of T(2,3), odd in y
    "nhat3_T2_3": (3, "q^2 (y^5 - y^(-5)) + q (y - y^(-1))"),
    "nhat4_T2_3": (4, "q^2 (y^7 - y^(-7)) + (y^3 - y^(-3)) + q^2 (y - y^(-1))"),
}

# t-deformed polynomials in (x, t), written out in full; w3 = zeta_3
REFINED = {
    "alexander_T2_5": "t^2 x^2 + 1/(t^2 x^2) - 1/(t^2 x) - x + 1",
    "alexander_T2_7": "-t^3 x^3 - 1/(t^3 x^3) + 1/(t^3 x^2) + t x^2 - t x - 1/(t x) + 1/t",
    "alexander_T2_9": (
        "t^4 x^4 + 1/(t^4 x^4) - 1/(t^4 x^3) - t^2 x^3 + t^2 x^2 + 1/(t^2 x^2) - 1/(t^2 x) - x + 1"
    ),
    "ado3_T2_5": (
        "(t x)^4 + (w3^2/t) (t x)^3 + (w3/t^2 - w3^2) (t x)^2 - (w3/t) (t x) - 1/t^2"
        " - (w3^2/t)/(t x) + (1/t^2 - w3)/(t x)^2 + (w3^2/t)/(t x)^3 + w3/(t x)^4"
    ),
    "ado3_T2_7": (
        "(t x)^6 + (w3^2/t) (t x)^5 + (w3/t^2 - w3^2) (t x)^4 - (w3/t) (t x)^3 - (1/t^2) (t x)^2 + 1"
        " - (w3^2/t^2)/(t x)^2 - (w3/t)/(t x)^3 + (w3^2/t^2 - 1)/(t x)^4 + (w3/t)/(t x)^5 + 1/(t x)^6"
    ),
    "ado3_T2_9": (
        "(t x)^8 + (w3^2/t) (t x)^7 + (w3/t^2 - w3^2) (t x)^6 - (w3/t) (t x)^5 - (1/t^2) (t x)^4"
        " + (t x)^2 + (w3^2/t) (t x) + (w3/t^2 - w3^2) + (1/t)/(t x) + w3^2/(t x)^2"
        " - (w3/t^2)/(t x)^4 - (1/t)/(t x)^5 + (w3/t^2 - w3^2)/(t x)^6 + (1/t)/(t x)^7 + w3^2/(t x)^8"
    ),
}

CONSTANTS = ("i", "s3", "w3", "w6", "w8", "w12", "q")


def _value(name: str, r: int | None) -> Cyclotomic:
    if name == "i":
        return root_of_unity(4, 1)
    if name == "s3":
        return root_of_unity(12, 1) + root_of_unity(12, 11)
    if name == "q":
        return root_of_unity(2 * r, 1)
    return root_of_unity(int(name[1:]), 1)


def parse(text: str, vars: tuple[str, ...], r: int | None = None) -> dict[tuple[int, ...], Cyclotomic]:
    """{exponent vector: coefficient} from a transcription."""
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    # split glued tokens such as "ix^2"
    text = re.sub(r"(?<![a-z0-9])(i|s3|w3|w6|w8|w12)(?=[xyqt])", r"\1*", text)
    names = {n: sympy.Symbol(n) for n in CONSTANTS + tuple(vars)}
    tr = standard_transformations + (implicit_multiplication_application, convert_xor)
    expr = sympy.expand(parse_expr(text, local_dict=names, transformations=tr))
    gens = [names[n] for n in CONSTANTS]
    out: dict[tuple[int, ...], Cyclotomic] = {}
    for term in sympy.Add.make_args(expr):
        key = []
        for v in vars:
            term, e = term.as_coeff_exponent(names[v])
            key.append(int(e))
        poly = sympy.Poly(term, *gens, domain="QQ")
        value = Cyclotomic.from_rational(0, 1)
        for monom, c in poly.terms():
            c = sympy.Rational(c)
            t = Cyclotomic.from_rational(int(c.p), 1) / int(c.q)
            for g, k in zip(gens, monom):
                if k:
                    t = t * _value(str(g), r) ** k
            value = value + t
        key = tuple(key)
        out[key] = out[key] + value if key in out else value
    return {k: c for k, c in out.items() if c != 0}


def parse1(text: str, var: str, r: int | None = None) -> dict[int, Cyclotomic]:
    return {k[0]: c for k, c in parse(text, (var,), r).items()}


def mirrored(half: dict[int, Cyclotomic]) -> dict[int, Cyclotomic]:
    out = dict(half)
    for e, c in half.items():
        if e:
            out[-e] = out[-e] + c if -e in out else c
    return {e: c for e, c in out.items() if c != 0}


def write(path: Path, payload: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


def main():
    base = fixture_dir()
    for key, text in TRANSCRIPTIONS.items():
        if key[0] in "AW":
            n = int(key[1:])
            poly = HalfLaurent.from_integer_exponents(mirrored(parse1(text, "x")))
            payload = {
                "schema": SCHEMA, "kind": "ado4", "p": 4, "knot": [2, n], "variable": "x",
                "source": "table" if key[0] == "A" else "worked",
                "transcription": text, "poly": poly.to_json(),
            }
            write(base / "ado4" / f"T2_{n}.json", payload)
        else:
            r, n = (int(v) for v in key[1:].split("_"))
            # y = x^(1/2), so y-exponents are the half-exponents of x
            poly = HalfLaurent(mirrored(parse1(text, "y")))
            payload = {
                "schema": SCHEMA, "kind": "num", "r": r, "knot": [2, n], "variable": "y",
                "transcription": text, "poly": poly.to_json(),
            }
            write(base / "rmatrix" / f"num{r}_T2_{n}.json", payload)
    for key, (r, text) in NHAT.items():
        poly = HalfLaurent(parse1(text, "y", r))
        payload = {
            "schema": SCHEMA, "kind": "nhat", "r": r, "knot": [2, 3], "variable": "y",
            "transcription": text, "poly": poly.to_json(),
        }
        write(base / "rmatrix" / f"{key}.json", payload)
    for key, text in REFINED.items():
        kind, knot = key.split("_", 1)
        n = int(knot.split("_")[1])
        poly = MPoly(parse(text, ("x", "t")), ("x", "t"))
        payload = {
            "schema": SCHEMA, "kind": f"refined-{kind}", "knot": [2, n], "variable": "x,t",
            "transcription": text, "poly": poly.to_json(),
        }
        write(base / "refined" / f"{key}.json", payload)
    print(f"wrote fixtures under {base}")


if __name__ == "__main__":
    main()
