"""
ADO_4 of T(2,15) three ways
===========================

The same polynomial from the explicit algorithm, from the F_K series at
q = i, and from the R-matrix evaluation of the tangle. The comparison
allows a unit and x -> c x, and says so when it needs them.
"""

from adoforge import (
    TorusKnot,
    ado4_algorithm,
    ado_from_fk,
    compare_up_to_normalization,
    num_extract,
)
from adoforge.cli import format_poly

s = 7  # T(2, 2s+1); the algorithm starts here, smaller knots use ado4_seed
knot = TorusKnot.two_strand(s)

a = ado4_algorithm(s)
print("algorithm :", format_poly(a.poly))

# F_K at q = zeta_8 (q^2 = i), multiplied by Delta(x^4); the tail cancels
b = ado_from_fk(4, knot)
print("from F_K  :", format_poly(b.poly))

c = num_extract(s, 4)
print("R-matrix  :", format_poly(c))

print(compare_up_to_normalization(a, b))
print(compare_up_to_normalization(c, a.poly, p=4))
