"""Exact central characters of the strange Lie superalgebra q(N).

Three independent formula engines (matrix recurrence, generating-function
series, closed-form evaluation) compute the characters of the odd central
elements c_{2m+1}, cross-checked against two brute-force oracles: a
normal-ordering rewriter for the enveloping algebra and the natural
2N-dimensional matrix representation. Everything is exact rational
arithmetic; any disagreement anywhere raises VerificationError.
"""

from .characters import (
    AMatrix,
    ChiResult,
    SingularPointError,
    chi_closed_numeric,
    chi_cn_recurrence,
    chi_entry_recurrence,
    chi_polynomial,
    chi_series,
    matrix_A,
    pi_factor_series,
    random_admissible_point,
)
from .errors import VerificationError
from .free_algebra import (
    AlgebraElement,
    bracket_with,
    build_casimir_entry,
    build_cn,
    casimir_entry_words,
    verify_entry_recurrence,
    verify_index_symmetry,
    word_parity,
)
from .natural_rep import (
    RepMatrix,
    ScalarReport,
    rho_cn,
    rho_cn_recurrence,
    rho_generator,
    scalar_check,
    verify_representation_property,
)
from .pbw import (
    CartanElement,
    CentralityResult,
    PropositionReport,
    hc_of_cn,
    hc_project,
    is_normal_word,
    normal_order,
    verify_centrality,
    verify_commutator_identity,
    verify_propositions,
)
from .poly import MultiPoly, TruncatedSeries, geometric_series, grlex_key
from .structure import (
    GeneratorIndex,
    TriangularClass,
    all_generators,
    bracket_linear,
    gen,
    generator_parity,
    jacobi_defect,
    parity,
    signed_indices,
    sort_key,
    superbracket,
    triangular_class,
    weight,
)
from .suites import CaseResult, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AMatrix",
    "AlgebraElement",
    "CartanElement",
    "CaseResult",
    "CentralityResult",
    "ChiResult",
    "GeneratorIndex",
    "MultiPoly",
    "PropositionReport",
    "RepMatrix",
    "ScalarReport",
    "SingularPointError",
    "TriangularClass",
    "TruncatedSeries",
    "VerificationError",
    "VerifyReport",
    "all_generators",
    "bracket_linear",
    "bracket_with",
    "build_casimir_entry",
    "build_cn",
    "casimir_entry_words",
    "chi_closed_numeric",
    "chi_cn_recurrence",
    "chi_entry_recurrence",
    "chi_polynomial",
    "chi_series",
    "gen",
    "generator_parity",
    "geometric_series",
    "grlex_key",
    "hc_of_cn",
    "hc_project",
    "is_normal_word",
    "jacobi_defect",
    "matrix_A",
    "normal_order",
    "parity",
    "pi_factor_series",
    "random_admissible_point",
    "rho_cn",
    "rho_cn_recurrence",
    "rho_generator",
    "run_suite",
    "scalar_check",
    "signed_indices",
    "sort_key",
    "superbracket",
    "triangular_class",
    "verify_centrality",
    "verify_commutator_identity",
    "verify_entry_recurrence",
    "verify_index_symmetry",
    "verify_propositions",
    "verify_representation_property",
    "weight",
    "word_parity",
]
