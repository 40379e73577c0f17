"""Exact analysis of sparse polynomials (t-nomials) over finite fields.

The package computes, for a polynomial with t nonzero terms over F_q:
the number R of distinct nonzero roots (two independent methods), the
exponent parameters delta, D, Q, K and the pairing-divisor set S, the
coset-vanishing parameter C with explicit witnesses, a degree-reduction
certificate with exact root accounting, and root-count bounds driven by
C, delta, and D.  An enumeration harness reproduces small-field
root-count distribution tables, and a CLI exposes everything as
deterministic JSON/CSV.
"""

from .errors import (
    BetaNotInSubgroup,
    BudgetExceeded,
    DivisionByZero,
    EmptyInput,
    EmptyRange,
    FieldTooLarge,
    InternalInvariantError,
    InvalidSampleCount,
    InvalidT,
    NotADivisor,
    NotPrime,
    ParseError,
    PreconditionViolated,
    ReducibleModulus,
    TNomialError,
    TooFewTerms,
    ZeroCoefficient,
    ZeroFunction,
)
from .field import (
    EXTENSION_FIELD_LIMIT,
    PRIME_FIELD_LIMIT,
    Element,
    FieldSpec,
    make_extension_field,
    make_prime_field,
    subgroup_elements,
    subgroup_of_order,
)
from .poly import (
    BRUTE_FORCE_LIMIT,
    GCD_LIMIT,
    TNomial,
    build,
    count_roots_bruteforce,
    count_roots_gcd,
    evaluate,
    format_tnomial,
    has_nonzero_root,
    normalize_lowest,
    parse_tnomial,
)
from .params import (
    ParamReport,
    compute_D,
    compute_K,
    compute_Q,
    compute_S,
    compute_delta,
    compute_params,
)
from .cosets import (
    CosetDecomposition,
    CosetWitness,
    compute_C,
    find_vanishing_cosets,
    root_coset_decomposition,
    vanishes_on_coset,
)
from .reduction import (
    CosetBound,
    ReductionCertificate,
    SmallMultiple,
    bound_from_C,
    bound_from_D,
    degree_reduce,
    find_small_multiple,
    modular_norm,
)
from .experiments import (
    DEFAULT_WORK_BUDGET,
    MODES,
    SAMPLING_FIELD_LIMIT,
    ExperimentRecord,
    MaxRResult,
    VanishingEstimate,
    compute_max_R,
    conjecture_table,
    count_orbit_reps,
    enumerate_tnomials,
    estimate_enumeration_work,
    root_distribution_sample,
    sample_vanishing_proportion,
)
from .report import (
    SCHEMA_VERSION,
    analyze,
    conjecture_csv,
    max_r_csv,
    render_json,
)

__version__ = "0.1.0"

__all__ = [
    "BetaNotInSubgroup",
    "BudgetExceeded",
    "DivisionByZero",
    "EmptyInput",
    "EmptyRange",
    "FieldTooLarge",
    "InternalInvariantError",
    "InvalidSampleCount",
    "InvalidT",
    "NotADivisor",
    "NotPrime",
    "ParseError",
    "PreconditionViolated",
    "ReducibleModulus",
    "TNomialError",
    "TooFewTerms",
    "ZeroCoefficient",
    "ZeroFunction",
    "EXTENSION_FIELD_LIMIT",
    "PRIME_FIELD_LIMIT",
    "Element",
    "FieldSpec",
    "make_extension_field",
    "make_prime_field",
    "subgroup_elements",
    "subgroup_of_order",
    "BRUTE_FORCE_LIMIT",
    "GCD_LIMIT",
    "TNomial",
    "build",
    "count_roots_bruteforce",
    "count_roots_gcd",
    "evaluate",
    "format_tnomial",
    "has_nonzero_root",
    "normalize_lowest",
    "parse_tnomial",
    "ParamReport",
    "compute_D",
    "compute_K",
    "compute_Q",
    "compute_S",
    "compute_delta",
    "compute_params",
    "CosetDecomposition",
    "CosetWitness",
    "compute_C",
    "find_vanishing_cosets",
    "root_coset_decomposition",
    "vanishes_on_coset",
    "CosetBound",
    "ReductionCertificate",
    "SmallMultiple",
    "bound_from_C",
    "bound_from_D",
    "degree_reduce",
    "find_small_multiple",
    "modular_norm",
    "DEFAULT_WORK_BUDGET",
    "MODES",
    "SAMPLING_FIELD_LIMIT",
    "ExperimentRecord",
    "MaxRResult",
    "VanishingEstimate",
    "compute_max_R",
    "conjecture_table",
    "count_orbit_reps",
    "enumerate_tnomials",
    "estimate_enumeration_work",
    "root_distribution_sample",
    "sample_vanishing_proportion",
    "SCHEMA_VERSION",
    "analyze",
    "conjecture_csv",
    "max_r_csv",
    "render_json",
    "__version__",
]
