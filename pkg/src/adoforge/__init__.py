"""adoforge: exact F_K series and ADO polynomials of torus knots.

Submodules
----------
exact_arith   rationals and cyclotomic fields Q(zeta_n)
laurent       Laurent polynomials in x^(1/2) and in several variables
torus_fk      F_K(x, q) of torus knots
alexander     Alexander polynomials
ado           ADO_3 / ADO_4: closed forms, the ADO_4 algorithm, extraction from F_K
refined       t-deformed F_K, Alexander and ADO_3
rmatrix       (1,1)-tangle evaluation with the unrolled quantum group R-matrix
cli           command line and verification driver
"""
from .exact_arith import Cyclotomic, root_of_unity
from .laurent import HalfLaurent, MPoly, QSeries
from .torus_fk import InconclusiveError, TorusKnot, fk_at_root, fk_series, mmr_order0_check
from .alexander import alexander_composed, alexander_torus
from .ado import (
    AdoPolynomial,
    ado3_closed,
    ado4_algorithm,
    ado4_seed,
    ado_from_fk,
    compare_up_to_normalization,
)
from .refined import refined_ado3, refined_alexander, superpoly
from .rmatrix import normalized_nhat, num_extract

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "HalfLaurent",
    "MPoly",
    "QSeries",
    "InconclusiveError",
    "TorusKnot",
    "fk_series",
    "fk_at_root",
    "mmr_order0_check",
    "alexander_torus",
    "alexander_composed",
    "AdoPolynomial",
    "ado3_closed",
    "ado4_seed",
    "ado4_algorithm",
    "ado_from_fk",
    "compare_up_to_normalization",
    "refined_alexander",
    "refined_ado3",
    "superpoly",
    "normalized_nhat",
    "num_extract",
]
