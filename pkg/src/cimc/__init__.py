"""Complete intersection monomial curves in affine 4-space.

Kraft parametrizations, shift families n + w*v, standard bases for local
orders, tangent cone ideals, Cohen-Macaulay tests and Hilbert series.
"""

from .cmcheck import CMReport, analyze_tangent_cone, cm_case_a, cm_hilbert, shibuta_sufficient
from .families import (
    almost_ci_family,
    basic1_shift,
    family_scan,
    predicted_generators,
    rossi_family,
    shift_vector,
    verify_ci,
    w0_threshold,
    w1_threshold,
)
from .gbase import buchberger, minimalize_homogeneous, mora_nf, spoly, standard_basis, tangent_ideal
from .hilbert import MonomialIdeal, colon_by_monomial, hf_values, hilbert_numerator, multiplicity
from .intlin import is_mixed_dominating, minors_gcd, smith_invariant_factors
from .numsg import (
    CaseAParams,
    CaseBParams,
    MonomialCurve,
    NotCoprime,
    critical_exponent,
    gcd4,
    is_member,
    kraft_case_a,
    kraft_case_b,
    normalize_case_a,
)
from .ring import Binomial, MonomialOrder, Polynomial, parse_polynomial

__version__ = "0.1.0"
