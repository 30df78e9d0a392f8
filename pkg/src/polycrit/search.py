"""Derivative-free search for in-disk configurations maximizing gamma.

Estimates sup gamma over degree-n zero configurations in the closed unit
disk, the quantity squeezed between n^(-1/(n-1)) and
sqrt((n-2)/(n-1)).  Multi-start compass search in polar coordinates
(radii clamped to [0,1], angles wrapped) with adaptive step halving;
restart 0 always starts from the zeros of z^n - z, so the reported
maximum can never fall below the proven lower bound.  The objective is
non-smooth (a min over critical points), so no gradients are estimated.

Restarts are independent with substream RNG and a max-reduce that breaks
ties by lowest restart index, so results do not depend on worker count.
"""

from __future__ import annotations

import cmath
import math
import multiprocessing
from dataclasses import dataclass

from .checks import lower_bound, refined_upper
from .errors import InputError, SoundnessError
from .geometry import gamma
from .poly import RootSet, centroid, derivative, from_roots
from .rootfind import DEFAULT_CONFIG, RootFindConfig, find_roots
from .seeding import substream


@dataclass(frozen=True)
class SearchConfig:
    """Budget and stepping parameters for one search run.

    `local_iters` is the objective-evaluation budget per restart;
    `step_init`/`step_min` bracket the adaptive perturbation size shared
    by radial and angular moves.
    """

    n: int
    restarts: int = 64
    local_iters: int = 2000
    seed: int = 0
    step_init: float = 0.1
    step_min: float = 1e-7

    def __post_init__(self):
        if self.n < 2:
            raise InputError("search degree must be >= 2")
        if self.restarts < 1:
            raise InputError("restarts must be >= 1")
        if self.local_iters < 1:
            raise InputError("local_iters must be >= 1")
        if not (0.0 < self.step_min < self.step_init):
            raise InputError("need 0 < step_min < step_init")


@dataclass(frozen=True)
class SearchResult:
    n: int
    best_gamma: float
    best_roots: RootSet
    lower_bound: float
    refined_upper: float
    restarts_run: int
    evaluations: int
    history: tuple[tuple[int, float], ...]


def zn_minus_z_roots(n: int) -> tuple[complex, ...]:
    """Zeros of z^n - z: the origin plus the (n-1)-th roots of unity."""
    return (0.0 + 0.0j,) + tuple(
        cmath.rect(1.0, 2.0 * math.pi * k / (n - 1)) for k in range(n - 1)
    )


def _build_roots(radii: list[float], angles: list[float]) -> tuple[complex, ...]:
    return tuple(cmath.rect(r, a) for r, a in zip(radii, angles))


class _Objective:
    """gamma as a function of polar parameters, warm-starting the critical
    point solve from the previously accepted configuration."""

    def __init__(self, n: int, guard: float, cfg: RootFindConfig):
        self.n = n
        self.guard = guard
        self.cfg = cfg
        self.warm: tuple[complex, ...] | None = None
        self.evaluations = 0

    def __call__(self, roots: tuple[complex, ...]) -> tuple[float, tuple[complex, ...] | None]:
        self.evaluations += 1
        dcoeffs = derivative(from_roots(RootSet(roots)))
        res = find_roots(dcoeffs, self.cfg, initial=self.warm)
        if not res.converged and self.warm is not None:
            res = find_roots(dcoeffs, self.cfg)
        if not res.converged:
            return -math.inf, None
        g = centroid(RootSet(roots))
        value = min(abs(g - w) for w in res.roots)
        if value > self.guard:
            raise SoundnessError(
                f"gamma {value!r} exceeds the proven bound {self.guard!r}; "
                "this indicates a numerical bug",
                configuration=roots,
            )
        return value, res.roots.roots


def _restart(cfg: SearchConfig, restart_index: int):
    n = cfg.n
    guard = refined_upper(n) + 1e-6
    objective = _Objective(n, guard, DEFAULT_CONFIG)
    if restart_index == 0:
        seeds = zn_minus_z_roots(n)
        radii = [abs(z) for z in seeds]
        angles = [cmath.phase(z) for z in seeds]
    else:
        rng = substream(cfg.seed, restart_index)
        radii = [math.sqrt(rng.random()) for _ in range(n)]
        angles = [2.0 * math.pi * rng.random() for _ in range(n)]

    best, crit = objective(_build_roots(radii, angles))
    objective.warm = crit
    history = [(restart_index, best)]
    step = cfg.step_init
    while step >= cfg.step_min and objective.evaluations < cfg.local_iters:
        improved = False
        for k in range(n):
            for coordinate in ("radius", "angle"):
                for sign in (1.0, -1.0):
                    if objective.evaluations >= cfg.local_iters:
                        break
                    if coordinate == "radius":
                        old = radii[k]
                        radii[k] = min(1.0, max(0.0, old + sign * step))
                        if radii[k] == old:
                            radii[k] = old
                            continue
                    else:
                        old = angles[k]
                        angles[k] = math.remainder(old + sign * step, 2.0 * math.pi)
                    value, crit = objective(_build_roots(radii, angles))
                    if value > best:
                        best = value
                        objective.warm = crit
                        history.append((restart_index, best))
                        improved = True
                        break
                    if coordinate == "radius":
                        radii[k] = old
                    else:
                        angles[k] = old
        if not improved:
            step *= 0.5
    return best, _build_roots(radii, angles), objective.evaluations, tuple(history)


def maximize_gamma(cfg: SearchConfig, workers: int = 1) -> SearchResult:
    """Best gamma over all restarts; deterministic for a fixed config.

    The final configuration is re-scored with a cold solve so the
    reported value is reproducible through geometry.gamma.
    """
    if cfg.n < 3:
        raise InputError("maximize_gamma requires n >= 3 (n = 2 forces gamma = 0)")
    indices = range(cfg.restarts)
    if workers > 1 and cfg.restarts > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            outcomes = pool.starmap(_restart, [(cfg, i) for i in indices])
    else:
        outcomes = [_restart(cfg, i) for i in indices]

    best_value = -math.inf
    best_roots: tuple[complex, ...] | None = None
    evaluations = 0
    history: list[tuple[int, float]] = []
    for value, roots, evals, hist in outcomes:
        evaluations += evals
        history.extend(hist)
        if value > best_value:
            best_value = value
            best_roots = roots

    assert best_roots is not None
    final = gamma(RootSet(best_roots))
    lower = lower_bound(cfg.n)
    upper = refined_upper(cfg.n)
    if final.gamma > upper + 1e-6:
        raise SoundnessError(
            f"best gamma {final.gamma!r} exceeds the proven bound {upper!r}",
            configuration=best_roots,
        )
    return SearchResult(
        n=cfg.n,
        best_gamma=final.gamma,
        best_roots=RootSet(best_roots),
        lower_bound=lower,
        refined_upper=upper,
        restarts_run=cfg.restarts,
        evaluations=evaluations,
        history=tuple(history),
    )


@dataclass(frozen=True)
class SharpnessRow:
    n: int
    best_gamma: float
    lower: float
    refined_upper: float
    c_hat: float
    evaluations: int


SHARPNESS_CSV_HEADER = "n,best_gamma,lower,refined_upper,c_hat,evaluations"


def sharpness_row(result: SearchResult) -> SharpnessRow:
    """One degree's search summary; c_hat = (1 - best_gamma) n / ln n is the
    implied constant of the conjectured 1 - c log(n)/n form."""
    return SharpnessRow(
        n=result.n,
        best_gamma=result.best_gamma,
        lower=result.lower_bound,
        refined_upper=result.refined_upper,
        c_hat=(1.0 - result.best_gamma) * result.n / math.log(result.n),
        evaluations=result.evaluations,
    )


def sharpness_report(n_values, template: SearchConfig, workers: int = 1) -> list[SharpnessRow]:
    """Run the search per degree (same budget/seed template) and tabulate."""
    rows = []
    for n in n_values:
        cfg = SearchConfig(
            n=int(n),
            restarts=template.restarts,
            local_iters=template.local_iters,
            seed=template.seed,
            step_init=template.step_init,
            step_min=template.step_min,
        )
        rows.append(sharpness_row(maximize_gamma(cfg, workers=workers)))
    return rows


def sharpness_csv_line(row: SharpnessRow) -> str:
    return "%d,%.17g,%.17g,%.17g,%.17g,%d" % (
        row.n,
        row.best_gamma,
        row.lower,
        row.refined_upper,
        row.c_hat,
        row.evaluations,
    )
