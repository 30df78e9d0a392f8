"""Seeded fuzz harness for the inequality checkers.

Trials are generated from per-trial substreams of (master_seed, degree,
trial_index), solved in batches, and evaluated through the public
checkers.  Flagged outcomes (a proven check failing, or an equality
showing up outside its classified cases) are re-verified at a strict
root-finder tolerance before they count: a surviving proven-check
failure is a violation (an implementation bug), a surviving equality
whose geometry is genuinely far from every equality case is an anomaly.
Conjecture checks are recorded, never asserted.

Outcomes are independent of worker count: every trial is self-seeded and
the merge is order-insensitive, with final lists sorted by (suite,
degree, trial).
"""

from __future__ import annotations

import cmath
import math
import multiprocessing
from dataclasses import dataclass, field

import numpy as np

from .checks import (
    CheckOutcome,
    check_averaging_identity,
    check_borcea,
    check_pawlowski_upper,
    check_schoenberg,
    check_theorem_1_1,
    check_theorem_mt,
    check_theorem_mt1,
    mt_equality_expected,
)
from .errors import ConvergenceError, InputError
from .geometry import ConfigurationClass, collinearity_defect, spread
from .poly import RootSet
from .rootfind import DEFAULT_CONFIG, STRICT_CONFIG, RootFindConfig, critical_points, critical_points_batch
from .seeding import substream

PROVEN_SUITES = ("schoenberg", "thm11", "averaging", "thm-mt", "thm-mt1", "pawlowski")
CONJECTURE_SUITES = ("borcea",)
ALL_SUITES = PROVEN_SUITES + CONJECTURE_SUITES

_BLOCK = 2048

# |slack| below this (relative) cannot be distinguished from exact equality
# at strict root-finder tolerance.
_CERTIFY_FLOOR = 1e-11

# Geometry within this distance of an equality case is treated as that case
# when judging a numerically-zero slack; matched to sqrt(_CERTIFY_FLOOR).
_NEAR_CASE = 1e-5


def disk_roots(rng, n: int, radius: float = 1.0) -> tuple[complex, ...]:
    """n points uniform in the closed disk (area-uniform: r = R sqrt(u))."""
    return tuple(
        cmath.rect(radius * math.sqrt(rng.random()), 2.0 * math.pi * rng.random())
        for _ in range(n)
    )


def collinear_roots(rng, n: int, radius: float = 1.0) -> tuple[complex, ...]:
    """n points on a random line: random direction, random real offsets."""
    direction = cmath.rect(1.0, 2.0 * math.pi * rng.random())
    base = cmath.rect(0.5 * radius * math.sqrt(rng.random()), 2.0 * math.pi * rng.random())
    return tuple(base + radius * (1.6 * rng.random() - 0.8) * direction for _ in range(n))


def generic_roots(
    rng,
    n: int,
    radius: float = 1.0,
    min_defect: float = 0.05,
    min_spread: float = 0.1,
) -> tuple[complex, ...]:
    """Disk sample rejected until clearly non-collinear (defect and spread
    margins); n >= 3 since any two points are collinear."""
    if n < 3:
        raise InputError("generic configurations need n >= 3")
    while True:
        cand = disk_roots(rng, n, radius)
        r = RootSet(cand)
        if collinearity_defect(r) >= min_defect and spread(r) >= min_spread:
            return cand


_GENERATORS = {
    "disk": disk_roots,
    "collinear": collinear_roots,
}


@dataclass
class SuiteStats:
    """Aggregate over one (suite, degree) cell of the corpus."""

    trials: int = 0
    passed: int = 0
    failed: int = 0
    equalities: int = 0
    flags_cleared: int = 0
    min_slack: float = math.inf
    max_lhs: float = -math.inf

    def absorb(self, other: "SuiteStats") -> None:
        self.trials += other.trials
        self.passed += other.passed
        self.failed += other.failed
        self.equalities += other.equalities
        self.flags_cleared += other.flags_cleared
        self.min_slack = min(self.min_slack, other.min_slack)
        self.max_lhs = max(self.max_lhs, other.max_lhs)


@dataclass(frozen=True)
class Flag:
    """A trial that survived strict re-verification; full configuration
    data is preserved for human inspection."""

    kind: str  # "violation" | "equality_anomaly" | "conjecture" | "rootfind_error"
    suite: str
    degree: int
    trial: int
    roots: tuple[complex, ...]
    lhs: float
    rhs: float
    slack: float
    tol: float
    classification: str | None


@dataclass
class FuzzReport:
    suites: tuple[str, ...]
    degrees: tuple[int, ...]
    trials_per_degree: int
    seed: int
    generator: str
    radius: float
    p: float
    stats: dict[str, dict[int, SuiteStats]] = field(default_factory=dict)
    violations: list[Flag] = field(default_factory=list)
    anomalies: list[Flag] = field(default_factory=list)
    errors: list[Flag] = field(default_factory=list)

    def ok(self) -> bool:
        """True when no proven-theorem violation (or evaluation error)
        survived re-verification."""
        return not self.violations and not self.errors

    def stat(self, suite: str, degree: int) -> SuiteStats:
        return self.stats[suite][degree]

    def totals(self, suite: str) -> SuiteStats:
        agg = SuiteStats()
        for s in self.stats[suite].values():
            agg.absorb(s)
        return agg


def _run_check(suite: str, r: RootSet, crit: RootSet, p: float, cfg: RootFindConfig) -> CheckOutcome:
    if suite == "schoenberg":
        return check_schoenberg(r, cfg, crit=crit)
    if suite == "thm11":
        return check_theorem_1_1(r, cfg, crit=crit)
    if suite == "averaging":
        return check_averaging_identity(r, cfg, crit=crit)
    if suite == "thm-mt":
        return check_theorem_mt(r, cfg, crit=crit)
    if suite == "thm-mt1":
        return check_theorem_mt1(r, cfg, crit=crit)
    if suite == "pawlowski":
        return check_pawlowski_upper(r, cfg, crit=crit)
    if suite == "borcea":
        return check_borcea(r, p, cfg, crit=crit)
    raise InputError(f"unknown suite {suite!r}")


def _strict_recheck(suite: str, r: RootSet, p: float) -> CheckOutcome:
    crit = critical_points(r, STRICT_CONFIG)
    return _run_check(suite, r, crit, p, STRICT_CONFIG)


def _equality_tracked(suite: str) -> bool:
    return suite in ("schoenberg", "thm-mt")


def _equality_expected(suite: str, n: int, cls: ConfigurationClass | None) -> bool:
    if suite == "thm-mt":
        return mt_equality_expected(n, cls)
    if suite == "schoenberg":
        return cls in (ConfigurationClass.COLLINEAR, ConfigurationClass.ALL_EQUAL)
    return True


def _near_equality_case(suite: str, r: RootSet) -> bool:
    """Whether the configuration sits within _NEAR_CASE of an equality
    manifold, which makes a numerically-zero slack unsurprising."""
    near_collinear = collinearity_defect(r) <= _NEAR_CASE
    if suite == "schoenberg":
        return near_collinear
    if suite == "thm-mt":
        if r.n == 2:
            return True
        if r.n == 3:
            return near_collinear
        return spread(r) <= _NEAR_CASE * (1.0 + r.max_modulus())
    return False


@dataclass(frozen=True)
class _Task:
    suites: tuple[str, ...]
    degree: int
    start: int
    stop: int
    seed: int
    generator: str
    radius: float
    p: float
    cfg: RootFindConfig


def _flag_from(kind: str, suite: str, n: int, trial: int, roots, out: CheckOutcome) -> Flag:
    return Flag(
        kind=kind,
        suite=suite,
        degree=n,
        trial=trial,
        roots=tuple(roots),
        lhs=out.lhs,
        rhs=out.rhs,
        slack=out.slack,
        tol=out.tol,
        classification=out.classification.value if out.classification else None,
    )


def _run_block(task: _Task):
    n = task.degree
    count = task.stop - task.start
    gen = _GENERATORS[task.generator]
    configs = np.empty((count, n), dtype=np.complex128)
    for i in range(count):
        rng = substream(task.seed, n, task.start + i)
        configs[i] = gen(rng, n, task.radius)
    crit_rows, converged, _ = critical_points_batch(configs, task.cfg)

    stats: dict[str, SuiteStats] = {s: SuiteStats() for s in task.suites}
    violations: list[Flag] = []
    anomalies: list[Flag] = []
    errors: list[Flag] = []

    for i in range(count):
        trial = task.start + i
        r = RootSet(tuple(configs[i]))
        crit: RootSet | None = None
        if converged[i]:
            crit = RootSet(tuple(crit_rows[i]))
        else:
            try:
                crit = critical_points(r, STRICT_CONFIG)
            except ConvergenceError:
                dummy = CheckOutcome("rootfind", math.nan, math.nan, math.nan, False, 0.0, False)
                for suite in task.suites:
                    errors.append(_flag_from("rootfind_error", suite, n, trial, r.roots, dummy))
                continue
        for suite in task.suites:
            out = _run_check(suite, r, crit, task.p, task.cfg)
            st = stats[suite]
            st.trials += 1
            st.min_slack = min(st.min_slack, out.slack)
            st.max_lhs = max(st.max_lhs, out.lhs)
            if out.equality:
                st.equalities += 1
            if out.passed:
                st.passed += 1
            else:
                strict = _strict_recheck(suite, r, task.p)
                if strict.passed:
                    st.flags_cleared += 1
                    st.passed += 1
                else:
                    st.failed += 1
                    kind = "violation" if suite in PROVEN_SUITES else "conjecture"
                    target = violations if suite in PROVEN_SUITES else anomalies
                    target.append(_flag_from(kind, suite, n, trial, r.roots, strict))
                    continue
            if (
                out.equality
                and _equality_tracked(suite)
                and not _equality_expected(suite, n, out.classification)
            ):
                strict = _strict_recheck(suite, r, task.p)
                certified_equal = abs(strict.slack) <= _CERTIFY_FLOOR * (1.0 + abs(strict.rhs))
                if not certified_equal or _near_equality_case(suite, r):
                    st.flags_cleared += 1
                else:
                    anomalies.append(_flag_from("equality_anomaly", suite, n, trial, r.roots, strict))
    return task.degree, stats, violations, anomalies, errors


def run_suite(
    suites,
    degrees,
    trials_per_degree: int,
    seed: int,
    generator: str = "disk",
    radius: float = 1.0,
    p: float = 2.0,
    workers: int = 1,
    cfg: RootFindConfig = DEFAULT_CONFIG,
) -> FuzzReport:
    """Run the requested checker suites over a seeded random corpus.

    `generator` is "disk" (area-uniform in a disk of `radius`) or
    "collinear" (random line, random offsets).  The outcome is a pure
    function of (suites, degrees, trials_per_degree, seed, generator,
    radius, p, cfg) regardless of `workers`.
    """
    suites = tuple(suites)
    degrees = tuple(int(d) for d in degrees)
    for s in suites:
        if s not in ALL_SUITES:
            raise InputError(f"unknown suite {s!r}; valid: {ALL_SUITES}")
    for d in degrees:
        if d < 2:
            raise InputError("degrees must be >= 2")
    if generator not in _GENERATORS:
        raise InputError(f"unknown generator {generator!r}")
    if trials_per_degree < 1:
        raise InputError("trials_per_degree must be >= 1")
    disk_constrained = {"thm11", "thm-mt1", "pawlowski"} & set(suites)
    if disk_constrained and (radius > 1.0 or generator != "disk"):
        raise InputError(
            f"suites {sorted(disk_constrained)} require zeros in the closed unit disk; "
            "use generator='disk' with radius <= 1"
        )

    tasks = []
    for d in degrees:
        for start in range(0, trials_per_degree, _BLOCK):
            stop = min(start + _BLOCK, trials_per_degree)
            tasks.append(_Task(suites, d, start, stop, seed, generator, radius, p, cfg))

    report = FuzzReport(
        suites=suites,
        degrees=degrees,
        trials_per_degree=trials_per_degree,
        seed=seed,
        generator=generator,
        radius=radius,
        p=p,
        stats={s: {d: SuiteStats() for d in degrees} for s in suites},
    )

    if workers > 1 and len(tasks) > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            results = pool.imap_unordered(_run_block, tasks)
            for degree, stats, violations, anomalies, errors in results:
                _merge(report, degree, stats, violations, anomalies, errors)
    else:
        for task in tasks:
            degree, stats, violations, anomalies, errors = _run_block(task)
            _merge(report, degree, stats, violations, anomalies, errors)

    order = lambda f: (f.suite, f.degree, f.trial)
    report.violations.sort(key=order)
    report.anomalies.sort(key=order)
    report.errors.sort(key=order)
    return report


def _merge(report: FuzzReport, degree: int, stats, violations, anomalies, errors) -> None:
    for suite, st in stats.items():
        report.stats[suite][degree].absorb(st)
    report.violations.extend(violations)
    report.anomalies.extend(anomalies)
    report.errors.extend(errors)
