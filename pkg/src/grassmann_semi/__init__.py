"""Exterior semialgebras over semirings with a negation map.

Coefficients are symmetrized pairs over a pluggable semiring; on top of the
reduced Grassmann semialgebra the package builds the Hasse-Schmidt
derivation induced by an endomorphism, its quasi-inverse, and exact
surpassing checks up to the semiring Cayley-Hamilton theorem.
"""

from .errors import (
    DegreeError,
    DomainMismatchError,
    GrassmannError,
    MatrixParseError,
    NegationUndefinedError,
    ScalarParseError,
    UnsupportedDomainError,
)
from .exterior import (
    MultiVector,
    mv_add,
    mv_sum,
    mv_surpasses,
    negate,
    nondegeneracy_check,
    sort_word,
    wedge,
    wedge_all,
)
from .hasse_schmidt import (
    Endomorphism,
    ZPolynomial,
    apply_hs_series,
    endo_apply,
    hs_coefficient,
    hs_series,
    leibniz_mismatch,
    schur_higher_derivation,
)
from .quasi_inverse import (
    EigenData,
    Verdict,
    ch_corollary_residual,
    check_cayley_hamilton,
    check_precheh,
    check_prech,
    check_quasi_inverse,
    eigen_data,
    ovd_step,
    precheh_sum,
    prech_verdict,
    quasi_inverse,
    quasi_inverse_verdict,
    witness,
)
from .scalars import (
    BOOLEANS,
    INTEGERS,
    MAXPLUS,
    NATURALS,
    NEG_INF,
    RATIONALS,
    PairScalar,
    ScalarDomain,
    get_domain,
    is_balanced,
    pair_add,
    pair_mul,
    pair_swap,
    surpass_witness,
)
from .serialization import (
    endomorphism_from_json,
    endomorphism_to_json,
    multivector_from_json,
    multivector_to_json,
    parse_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeError",
    "DomainMismatchError",
    "GrassmannError",
    "MatrixParseError",
    "NegationUndefinedError",
    "ScalarParseError",
    "UnsupportedDomainError",
    "MultiVector",
    "mv_add",
    "mv_sum",
    "mv_surpasses",
    "negate",
    "nondegeneracy_check",
    "sort_word",
    "wedge",
    "wedge_all",
    "Endomorphism",
    "ZPolynomial",
    "apply_hs_series",
    "endo_apply",
    "hs_coefficient",
    "hs_series",
    "leibniz_mismatch",
    "schur_higher_derivation",
    "EigenData",
    "Verdict",
    "ch_corollary_residual",
    "check_cayley_hamilton",
    "check_precheh",
    "check_prech",
    "check_quasi_inverse",
    "eigen_data",
    "ovd_step",
    "precheh_sum",
    "prech_verdict",
    "quasi_inverse",
    "quasi_inverse_verdict",
    "witness",
    "BOOLEANS",
    "INTEGERS",
    "MAXPLUS",
    "NATURALS",
    "NEG_INF",
    "RATIONALS",
    "PairScalar",
    "ScalarDomain",
    "get_domain",
    "is_balanced",
    "pair_add",
    "pair_mul",
    "pair_swap",
    "surpass_witness",
    "endomorphism_from_json",
    "endomorphism_to_json",
    "multivector_from_json",
    "multivector_to_json",
    "parse_matrix",
]
