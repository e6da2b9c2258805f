"""Exact invariants of Hecke congruence groups and machine-checkable
certificates for one-dimensional spaces of weight-3/2 cusp forms carrying
the cube of the eta multiplier.
"""

from .classify import (
    Certificate,
    ClassificationReport,
    CuspDivisor,
    Verdict,
    bound_crude,
    bound_strong,
    bound_weak,
    classify,
    classify_range,
    m23_element_orders,
    m24_prime_divisors,
    pole_divisor,
)
from .exact import (
    Factorization,
    UnitPhase,
    dedekind_sum,
    divisors,
    euler_phi,
    factorize,
    kronecker,
    sawtooth,
)
from .gamma0 import (
    CuspClass,
    GroupProfile,
    UnimodularMatrix,
    cusp_count,
    cusp_width,
    cusps,
    genus,
    group_profile,
    index,
    is_member,
    mu2,
    mu3,
)
from .multiplier import (
    AutomorphyContext,
    eta_multiplier,
    gamma0_character,
    j_factor,
    verify_cocycle,
    verify_transformation,
)
from .oracle import ORACLE_CUTOFF, OrbitCusp, enumerate_cosets, oracle_cusps, oracle_index
from .qseries import (
    EtaQuotient,
    FracQSeries,
    GridError,
    PrecisionError,
    eta_cubed,
    eta_expansion,
    eta_quotient_cusp_order,
    eta_quotient_expansion,
    evaluate,
    unary_theta,
)
from .verify import (
    SuiteResult,
    character_suite,
    cocycle_suite,
    eta_law_suite,
    euler_identity_suite,
    random_level_element,
    random_unimodular,
    rr_identity_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphyContext",
    "Certificate",
    "ClassificationReport",
    "CuspClass",
    "CuspDivisor",
    "EtaQuotient",
    "Factorization",
    "FracQSeries",
    "GridError",
    "GroupProfile",
    "ORACLE_CUTOFF",
    "OrbitCusp",
    "PrecisionError",
    "SuiteResult",
    "UnimodularMatrix",
    "UnitPhase",
    "Verdict",
    "bound_crude",
    "bound_strong",
    "bound_weak",
    "character_suite",
    "classify",
    "classify_range",
    "cocycle_suite",
    "cusp_count",
    "cusp_width",
    "cusps",
    "dedekind_sum",
    "divisors",
    "enumerate_cosets",
    "eta_cubed",
    "eta_expansion",
    "eta_law_suite",
    "eta_multiplier",
    "eta_quotient_cusp_order",
    "eta_quotient_expansion",
    "euler_identity_suite",
    "euler_phi",
    "evaluate",
    "factorize",
    "gamma0_character",
    "genus",
    "group_profile",
    "index",
    "is_member",
    "j_factor",
    "kronecker",
    "m23_element_orders",
    "m24_prime_divisors",
    "mu2",
    "mu3",
    "oracle_cusps",
    "oracle_index",
    "pole_divisor",
    "random_level_element",
    "random_unimodular",
    "rr_identity_suite",
    "sawtooth",
    "unary_theta",
    "verify_cocycle",
    "verify_transformation",
]
