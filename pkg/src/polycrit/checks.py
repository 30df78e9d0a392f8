"""One checker per inequality, plus the degree-n bound formulas.

Each checker returns a CheckOutcome with LHS, RHS, slack = RHS - LHS and
a pass flag.  Tolerances follow a single policy: 1e-7 * (1 + RHS) when a
root-finder feeds the comparison, 1e-12 for pure formula comparisons
(the averaging identity uses 1e-8 as it is an exact identity evaluated
through the root-finder).

Configurations classified ALL_EQUAL are evaluated analytically: an
m-fold critical point is only computable as a cluster of radius roughly
eps^(1/m), which would otherwise drown the exact equality these
configurations attain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .geometry import (
    ConfigurationClass,
    classify_configuration,
    gamma,
    sendov_distance,
    sigma2,
    sigma_p,
)
from .poly import RootSet, WeightVector, centroid, weighted_centroid
from .rootfind import DEFAULT_CONFIG, RootFindConfig, critical_points

TOL_ITERATIVE = 1e-7
TOL_IDENTITY = 1e-8
TOL_FORMULA = 1e-12

DISK_SLACK = 1e-12


@dataclass(frozen=True)
class CheckOutcome:
    """pass/fail of one inequality instance.

    passed <=> slack >= -tol; equality <=> |slack| <= tol (so equality
    implies passed).  `classification` carries the configuration class
    when the inequality has equality cases tied to geometry.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    tol: float
    equality: bool
    classification: ConfigurationClass | None = None


@dataclass(frozen=True)
class BoundsRow:
    """The five degree-n bound formulas evaluated at one n."""

    n: int
    lower: float
    pawlowski_upper: float
    refined_upper: float
    lower_asymptote: float
    pawlowski_asymptote: float


def lower_bound(n: int) -> float:
    """n^(-1/(n-1)), attained by the zeros of z^n - z."""
    return n ** (-1.0 / (n - 1.0))


def pawlowski_upper(n: int) -> float:
    """2 n^(1/(n-1)) / (n^(2/(n-1)) + 1)."""
    x = n ** (1.0 / (n - 1.0))
    return 2.0 * x / (x * x + 1.0)


def refined_upper(n: int) -> float:
    """sqrt((n-2)/(n-1))."""
    return math.sqrt((n - 2.0) / (n - 1.0))


def lower_asymptote(n: int) -> float:
    return 1.0 - math.log(n) / n


def pawlowski_asymptote(n: int) -> float:
    return 1.0 - 0.5 * (math.log(n) / n) ** 2


def _outcome(
    name: str,
    lhs: float,
    rhs: float,
    tol: float,
    classification: ConfigurationClass | None = None,
    force_equality: bool = False,
) -> CheckOutcome:
    slack = rhs - lhs
    equality = force_equality or abs(slack) <= tol
    passed = slack >= -tol or force_equality
    return CheckOutcome(
        name=name,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        passed=passed,
        tol=tol,
        equality=equality,
        classification=classification,
    )


def _require_disk(r: RootSet, name: str) -> None:
    if not r.in_disk(1.0, DISK_SLACK):
        raise InputError(f"{name} requires all zeros in the closed unit disk")


def _crit(r: RootSet, cfg: RootFindConfig, crit: RootSet | None) -> RootSet:
    return crit if crit is not None else critical_points(r, cfg)


def _gamma_lhs(r: RootSet, cfg: RootFindConfig, crit: RootSet | None, cls: ConfigurationClass) -> float:
    """gamma, with the all-equal configuration taken at its exact value 0
    (the computed value would only reflect multiple-root cluster radius)."""
    if cls is ConfigurationClass.ALL_EQUAL:
        return 0.0
    return gamma(r, cfg, crit=crit).gamma


def check_schoenberg(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """sum |w_j|^2 <= |sum z_k|^2 / n^2 + (n-2)/n * sum |z_k|^2,
    equality iff the zeros are collinear (all-equal included)."""
    if r.n < 2:
        raise InputError("check_schoenberg requires degree >= 2")
    cls = classify_configuration(r)
    n = r.n
    if cls is ConfigurationClass.ALL_EQUAL:
        both = (n - 1.0) * abs(centroid(r)) ** 2
        return _outcome("schoenberg", both, both, TOL_ITERATIVE * (1.0 + both), cls)
    ws = _crit(r, cfg, crit)
    lhs = math.fsum(abs(w) ** 2 for w in ws)
    total = sum(r.roots, start=0.0 + 0.0j)
    rhs = abs(total) ** 2 / n**2 + (n - 2.0) / n * math.fsum(abs(z) ** 2 for z in r.roots)
    return _outcome("schoenberg", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls)


def check_theorem_1_1(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """min_j |centroid - w_j| <= 1 for zeros in the closed unit disk."""
    if r.n < 2:
        raise InputError("check_theorem_1_1 requires degree >= 2")
    _require_disk(r, "check_theorem_1_1")
    cls = classify_configuration(r)
    lhs = _gamma_lhs(r, cfg, crit, cls)
    return _outcome("theorem_1_1", lhs, 1.0, TOL_ITERATIVE * 2.0, cls)


def check_averaging_identity(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """sum_j |centroid - w_j|^2 = sum_j |w_j|^2 - (n-1) |centroid|^2.

    An exact identity (by barycenter invariance); equality is expected on
    every input.
    """
    if r.n < 2:
        raise InputError("check_averaging_identity requires degree >= 2")
    cls = classify_configuration(r)
    g = centroid(r)
    if cls is ConfigurationClass.ALL_EQUAL:
        return _outcome("averaging_identity", 0.0, 0.0, TOL_IDENTITY, cls)
    ws = _crit(r, cfg, crit)
    lhs = math.fsum(abs(g - w) ** 2 for w in ws)
    rhs = math.fsum(abs(w) ** 2 for w in ws) - (r.n - 1.0) * abs(g) ** 2
    return _outcome("averaging_identity", lhs, rhs, TOL_IDENTITY * (1.0 + abs(rhs)), cls)


def mt_equality_expected(n: int, cls: ConfigurationClass) -> bool:
    """Equality cases of the refined variance bound: n = 2; n = 3 with
    collinear zeros; n > 3 with all zeros equal."""
    if n == 2:
        return True
    if n == 3:
        return cls in (ConfigurationClass.COLLINEAR, ConfigurationClass.ALL_EQUAL)
    return cls is ConfigurationClass.ALL_EQUAL


def check_theorem_mt(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """min_j |centroid - w_j| <= sqrt((n-2)/(n-1)) * sigma_2; no disk
    constraint.  n = 2 is an exact equality and is reported as such
    rather than through float noise."""
    if r.n < 2:
        raise InputError("check_theorem_mt requires degree >= 2")
    n = r.n
    cls = classify_configuration(r)
    if cls is ConfigurationClass.ALL_EQUAL:
        return _outcome("theorem_mt", 0.0, 0.0, TOL_ITERATIVE, cls, force_equality=True)
    lhs = gamma(r, cfg, crit=crit).gamma
    rhs = refined_upper(n) * sigma2(r).value
    return _outcome("theorem_mt", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls, force_equality=(n == 2))


def check_theorem_mt1(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """gamma <= sqrt((n-2)/(n-1)) for zeros in the closed unit disk."""
    if r.n < 2:
        raise InputError("check_theorem_mt1 requires degree >= 2")
    _require_disk(r, "check_theorem_mt1")
    cls = classify_configuration(r)
    lhs = _gamma_lhs(r, cfg, crit, cls)
    rhs = refined_upper(r.n)
    return _outcome("theorem_mt1", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls, force_equality=(r.n == 2))


def check_pawlowski_upper(
    r: RootSet,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """gamma <= 2 n^(1/(n-1)) / (n^(2/(n-1)) + 1) for zeros in the closed
    unit disk."""
    if r.n < 2:
        raise InputError("check_pawlowski_upper requires degree >= 2")
    _require_disk(r, "check_pawlowski_upper")
    cls = classify_configuration(r)
    lhs = _gamma_lhs(r, cfg, crit, cls)
    rhs = pawlowski_upper(r.n)
    return _outcome("pawlowski_upper", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls)


def check_borcea(
    r: RootSet,
    p: float = 2.0,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """max_k min_j |z_k - w_j| <= sigma_p (conjectural; recorded, not
    asserted as a theorem)."""
    if r.n < 2:
        raise InputError("check_borcea requires degree >= 2")
    if not (p >= 1.0):
        raise InputError("check_borcea requires p >= 1")
    cls = classify_configuration(r)
    if cls is ConfigurationClass.ALL_EQUAL:
        return _outcome("borcea", 0.0, 0.0, TOL_ITERATIVE, cls)
    lhs = sendov_distance(r, cfg, crit=crit)
    rhs = sigma_p(r, p).value
    return _outcome("borcea", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls)


def check_generalized_borcea(
    r: RootSet,
    l: WeightVector,
    p: float = 2.0,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    crit: RootSet | None = None,
) -> CheckOutcome:
    """min_j |sum l_k z_k - w_j| <= sigma_p (conjectural; recorded, not
    asserted)."""
    if r.n < 2:
        raise InputError("check_generalized_borcea requires degree >= 2")
    if not (p >= 1.0):
        raise InputError("check_generalized_borcea requires p >= 1")
    if len(l) != r.n:
        raise InputError("weight count must match degree")
    cls = classify_configuration(r)
    if cls is ConfigurationClass.ALL_EQUAL:
        return _outcome("generalized_borcea", 0.0, 0.0, TOL_ITERATIVE, cls)
    anchor = weighted_centroid(r, l)
    ws = _crit(r, cfg, crit)
    lhs = min(abs(anchor - w) for w in ws)
    rhs = sigma_p(r, p).value
    return _outcome("generalized_borcea", lhs, rhs, TOL_ITERATIVE * (1.0 + rhs), cls)


def bounds_table(n_values) -> list[BoundsRow]:
    """Evaluate all five bound formulas at each n (>= 2)."""
    rows = []
    for n in n_values:
        n = int(n)
        if n < 2:
            raise InputError(f"bounds require n >= 2, got {n}")
        rows.append(
            BoundsRow(
                n=n,
                lower=lower_bound(n),
                pawlowski_upper=pawlowski_upper(n),
                refined_upper=refined_upper(n),
                lower_asymptote=lower_asymptote(n),
                pawlowski_asymptote=pawlowski_asymptote(n),
            )
        )
    return rows


BOUNDS_CSV_HEADER = "n,lower,pawlowski_upper,refined_upper,lower_asymptote,pawlowski_asymptote"


def bounds_table_csv(rows: list[BoundsRow]) -> str:
    """CSV with 15 significant digits per value, LF line endings."""
    lines = [BOUNDS_CSV_HEADER]
    for row in rows:
        lines.append(
            "%d,%.15g,%.15g,%.15g,%.15g,%.15g"
            % (
                row.n,
                row.lower,
                row.pawlowski_upper,
                row.refined_upper,
                row.lower_asymptote,
                row.pawlowski_asymptote,
            )
        )
    return "\n".join(lines) + "\n"
