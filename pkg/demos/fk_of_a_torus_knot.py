"""
F_K of a torus knot
===================

Build the q-series F_K(x, q) of T(2,5), look at its first few terms, and
check that it reproduces 1/Alexander at q = 1 to low order in x.
"""

from adoforge import TorusKnot, alexander_torus, fk_series, mmr_order0_check
from adoforge.cli import format_poly

knot = TorusKnot(2, 5)
print(knot, "residues mod", 2 * knot.s * knot.t, ":", knot.residues())

# F_K = 1/2 q^c sum_m sign(m) q^(...) (x^(m/2) - x^(-m/2)), m > 0 in a few residue classes
series = fk_series(knot, 45)
print("q^c with c =", series.prefactor_exponent)
for m, (sign, qexp) in series.items():
    print(f"  {'+' if sign > 0 else '-'} q^{qexp} (x^({m}/2) - x^(-{m}/2))")

# Alexander polynomial, with x^(1/2) exponents stored doubled
delta = alexander_torus(knot)
print("Delta =", format_poly(delta))

# q -> 1 limit: x^(1/2) (x^(1/2) - x^(-1/2)) / Delta(x), expanded in x
res = mmr_order0_check(knot, 10)
print("order-0 check up to x^5:", bool(res), "with m_max =", res.m_max)
