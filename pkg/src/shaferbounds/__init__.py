"""Certified two-sided algebraic enclosures for arcsin.

Built on the one-parameter ratio
B(x; alpha) = (sqrt(1+x) - sqrt(1-x)) / (alpha + sqrt(1+x) + sqrt(1-x)):
scaling B by the endpoint limits of arcsin(x)/B(x; alpha) yields certified
lower and upper bounds whose orientation depends on alpha's monotonicity
regime.  The package evaluates the bounds, classifies regimes, locates the
middle-regime interior minimum, and numerically verifies every certified
claim on dense grids against a self-validated inverse-sine oracle.
"""

__version__ = "0.1.0"

from .analysis import (
    GapProfile,
    MinimumResult,
    find_interior_minimum,
    gap_profile,
    sharpened_mid_lower_constant,
    sharpness_probe,
    solve_alpha_star_by_bisection,
)
from .auxiliary import (
    AuxValue,
    aux_value,
    big_f_fn,
    discriminants,
    family_slope_estimate,
    g_fn,
    h_fn,
    h_limit_at_one,
    p_fn,
)
from .bounds import (
    BoundConstants,
    Enclosure,
    Regime,
    classic_shafer_second,
    classify_regime,
    enclosure,
    endpoint_limits,
    f_alpha,
    lower_bound,
    mid_regime_upper_bound,
    shafer_ratio,
    upper_bound,
)
from .constants import alpha_malesevic, alpha_star, h_regime_root
from .errors import (
    ConvergenceError,
    DomainError,
    PoleError,
    RegimeError,
    ShaferBoundsError,
)
from .verify import (
    SUITE_ALPHAS,
    GridSpec,
    VerificationReport,
    check_inequality_chain,
    check_monotonicity,
    check_proof_lemmas,
    check_theorem2,
    oracle_arcsin,
    oracle_self_check,
)

__all__ = [
    "__version__",
    "AuxValue",
    "BoundConstants",
    "ConvergenceError",
    "DomainError",
    "Enclosure",
    "GapProfile",
    "GridSpec",
    "MinimumResult",
    "PoleError",
    "Regime",
    "RegimeError",
    "ShaferBoundsError",
    "SUITE_ALPHAS",
    "VerificationReport",
    "alpha_malesevic",
    "alpha_star",
    "aux_value",
    "big_f_fn",
    "check_inequality_chain",
    "check_monotonicity",
    "check_proof_lemmas",
    "check_theorem2",
    "classic_shafer_second",
    "classify_regime",
    "discriminants",
    "enclosure",
    "endpoint_limits",
    "f_alpha",
    "family_slope_estimate",
    "find_interior_minimum",
    "g_fn",
    "gap_profile",
    "h_fn",
    "h_limit_at_one",
    "h_regime_root",
    "lower_bound",
    "mid_regime_upper_bound",
    "oracle_arcsin",
    "oracle_self_check",
    "p_fn",
    "shafer_ratio",
    "sharpened_mid_lower_constant",
    "sharpness_probe",
    "solve_alpha_star_by_bisection",
    "upper_bound",
]
