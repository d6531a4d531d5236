"""
Refined ADO_3
=============

The t-deformed F_K carries an extra variable a. Setting a = -1/t collapses it
to the refined Alexander polynomial; setting a = -q^2/t at q = zeta_3 gives a
refined ADO_3, which goes back to ADO_3 at t = -1.
"""

from adoforge import ado3_closed, refined_ado3, refined_alexander, superpoly
from adoforge.cli import format_poly
from adoforge.refined import refined_weyl_check

# the colored superpolynomials sit underneath: S^1 of the trefoil
print("P_1(3_1) =", superpoly(1, 1))

for s in (1, 2, 3):
    print(f"\nT(2,{2 * s + 1})")
    print("  refined Alexander:", format_poly(refined_alexander(s)))
    r = refined_ado3(s)
    print("  refined ADO_3    :", format_poly(r.poly))
    print("  Weyl symmetric   :", refined_weyl_check(r))
    # t = -1, then x -> zeta_3^2 x
    print("  reduces to ADO_3 :", r.reduced() == ado3_closed(s).poly)
    print("  ADO_3            :", format_poly(ado3_closed(s).poly))
