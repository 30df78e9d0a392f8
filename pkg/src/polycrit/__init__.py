"""Zero/critical-point geometry of monic complex polynomials.

Core objects: RootSet (zeros as a multiset), the p-variance family
sigma_p with its minimizing centers, the centroid-disk radius gamma, one
checker per inequality relating them, a seeded fuzz harness, and a
derivative-free search estimating sup gamma per degree.
"""

__version__ = "0.1.0"

from .checks import (
    BoundsRow,
    CheckOutcome,
    bounds_table,
    bounds_table_csv,
    check_averaging_identity,
    check_borcea,
    check_generalized_borcea,
    check_pawlowski_upper,
    check_schoenberg,
    check_theorem_1_1,
    check_theorem_mt,
    check_theorem_mt1,
    lower_bound,
    mt_equality_expected,
    pawlowski_upper,
    refined_upper,
)
from .errors import ConvergenceError, InputError, SoundnessError
from .fuzz import ALL_SUITES, PROVEN_SUITES, FuzzReport, run_suite
from .geometry import (
    ConfigurationClass,
    GammaReport,
    Solver,
    VarianceResult,
    classify_configuration,
    gamma,
    sendov_distance,
    sigma1,
    sigma2,
    sigma_inf,
    sigma_p,
    smallest_enclosing_circle,
)
from .poly import (
    MAX_DEGREE,
    Polynomial,
    RootSet,
    WeightVector,
    centroid,
    derivative,
    evaluate,
    from_roots,
    weighted_centroid,
)
from .rootfind import (
    DEFAULT_CONFIG,
    STRICT_CONFIG,
    RootFindConfig,
    RootFindResult,
    critical_points,
    find_roots,
)
from .search import SearchConfig, SearchResult, maximize_gamma, sharpness_report, zn_minus_z_roots

__all__ = [
    "__version__",
    "ALL_SUITES",
    "PROVEN_SUITES",
    "BoundsRow",
    "CheckOutcome",
    "ConfigurationClass",
    "ConvergenceError",
    "DEFAULT_CONFIG",
    "FuzzReport",
    "GammaReport",
    "InputError",
    "MAX_DEGREE",
    "Polynomial",
    "RootFindConfig",
    "RootFindResult",
    "RootSet",
    "STRICT_CONFIG",
    "SearchConfig",
    "SearchResult",
    "Solver",
    "SoundnessError",
    "VarianceResult",
    "WeightVector",
    "bounds_table",
    "bounds_table_csv",
    "centroid",
    "check_averaging_identity",
    "check_borcea",
    "check_generalized_borcea",
    "check_pawlowski_upper",
    "check_schoenberg",
    "check_theorem_1_1",
    "check_theorem_mt",
    "check_theorem_mt1",
    "classify_configuration",
    "critical_points",
    "derivative",
    "evaluate",
    "find_roots",
    "from_roots",
    "gamma",
    "lower_bound",
    "maximize_gamma",
    "mt_equality_expected",
    "pawlowski_upper",
    "refined_upper",
    "run_suite",
    "sendov_distance",
    "sharpness_report",
    "sigma1",
    "sigma2",
    "sigma_inf",
    "sigma_p",
    "smallest_enclosing_circle",
    "weighted_centroid",
    "zn_minus_z_roots",
]
