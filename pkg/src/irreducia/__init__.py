"""Irreducibility criteria and factor-count bounds for univariate integer
polynomials, with automatic witness search and an exact brute-force
factorization oracle for desk-scale verification."""

from .poly import (
    NormalizedInput,
    Polynomial,
    content,
    divmod_exact,
    divides_exactly,
    evaluate,
    is_primitive,
    normalize,
    rational_roots,
    scale_transform,
)
from .numtheory import (
    FactorizationLimitError,
    PrimePowerDecomposition,
    factorize,
    is_prime,
    positive_divisors,
    smallest_prime_divisor,
    valuation,
)
from .rootloc import (
    CertificateMode,
    NonConvergenceError,
    RootLocationCertificate,
    RootPartition,
    certify_outside_disk,
    numeric_roots,
    partition_roots,
    root_partition_bound,
)
from .criteria import (
    CRITERIA,
    AnalysisReport,
    AnalyzeConfig,
    Conclusion,
    ConclusionKind,
    CriterionOutcome,
    SoundnessError,
    analyze,
    constant_term_criterion,
    dominant_coefficient,
    eisenstein_generalized,
    leading_coeff_criterion,
    middle_prime_power_check,
    perron_nonmonic,
    weintraub_check,
)
from .oracle import (
    FactorizationResult,
    OracleLimitError,
    count_irreducible_factors,
    factor,
    verify,
)
from .corpus import (
    FAMILIES,
    FamilyConditionError,
    FamilySpec,
    gen_exhaustive,
    gen_family,
    gen_p1,
    gen_p2,
    gen_p3,
    gen_p4,
    gen_random,
)
from .cli import parse_poly, render_poly

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AnalyzeConfig",
    "CRITERIA",
    "CertificateMode",
    "Conclusion",
    "ConclusionKind",
    "CriterionOutcome",
    "FAMILIES",
    "FactorizationLimitError",
    "FactorizationResult",
    "FamilyConditionError",
    "FamilySpec",
    "NonConvergenceError",
    "NormalizedInput",
    "OracleLimitError",
    "Polynomial",
    "PrimePowerDecomposition",
    "RootLocationCertificate",
    "RootPartition",
    "SoundnessError",
    "analyze",
    "certify_outside_disk",
    "constant_term_criterion",
    "content",
    "count_irreducible_factors",
    "divides_exactly",
    "divmod_exact",
    "dominant_coefficient",
    "eisenstein_generalized",
    "evaluate",
    "factor",
    "factorize",
    "gen_exhaustive",
    "gen_family",
    "gen_p1",
    "gen_p2",
    "gen_p3",
    "gen_p4",
    "gen_random",
    "is_prime",
    "is_primitive",
    "leading_coeff_criterion",
    "middle_prime_power_check",
    "normalize",
    "numeric_roots",
    "parse_poly",
    "partition_roots",
    "perron_nonmonic",
    "positive_divisors",
    "rational_roots",
    "render_poly",
    "root_partition_bound",
    "scale_transform",
    "smallest_prime_divisor",
    "valuation",
    "verify",
    "weintraub_check",
]
