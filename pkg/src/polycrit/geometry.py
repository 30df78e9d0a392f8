"""Point-set functionals of a zero configuration.

The p-variance sigma_p(F) = min_c ((1/n) sum |z_k - c|^p)^(1/p) is
computed by a closed form at p = 2, Weiszfeld iteration at p = 1,
smallest enclosing circle at p = infinity, and convex descent in
between.  gamma is the distance from the centroid of the zeros to the
nearest critical point.  All functions are pure; the enclosing-circle
permutation uses a fixed seed, so every result is deterministic.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, replace
from enum import Enum

from .errors import ConvergenceError, InputError
from .poly import RootSet, centroid
from .rootfind import DEFAULT_CONFIG, RootFindConfig, critical_points

# p beyond this overflows |.|^p in double precision for unit-scale data;
# sigma_p is within ~1e-6 of sigma_inf there, so we dispatch.
P_INF_CUTOFF = 64.0

_WELZL_SEED = 0x5EC1CC1E


class Solver(str, Enum):
    CLOSED_FORM = "closed_form"
    WEISZFELD = "weiszfeld"
    CONVEX_DESCENT = "convex_descent"
    WELZL = "welzl"


class ConfigurationClass(str, Enum):
    ALL_EQUAL = "all_equal"
    COLLINEAR = "collinear"
    GENERIC = "generic"


@dataclass(frozen=True)
class VarianceResult:
    """Optimal center and value of the p-variance objective.

    `value` is always the objective re-evaluated at `center`, so the two
    fields are consistent by construction.
    """

    p: float
    center: complex
    value: float
    solver: Solver
    iterations: int


@dataclass(frozen=True)
class GammaReport:
    """Distances from the zero centroid to each critical point.

    gamma = min(distances); argmin ties are broken by lowest index.  For
    multiple critical points the underlying solver returns clusters, so
    distances carry the cluster's geometric accuracy, not symbolic zeros.
    """

    centroid: complex
    critical_points: RootSet
    distances: tuple[float, ...]
    gamma: float
    argmin_index: int


def _p_mean(pts, c: complex, p: float) -> float:
    return (math.fsum(abs(z - c) ** p for z in pts) / len(pts)) ** (1.0 / p)


def sigma2(r: RootSet) -> VarianceResult:
    """Quadratic variance; the minimizing center is the centroid."""
    g = centroid(r)
    value = math.sqrt(math.fsum(abs(z - g) ** 2 for z in r.roots) / r.n)
    return VarianceResult(p=2.0, center=g, value=value, solver=Solver.CLOSED_FORM, iterations=0)


def sigma1(r: RootSet, max_iters: int = 10_000, step_tol: float = 1e-12) -> VarianceResult:
    """Mean absolute deviation about the geometric median.

    Weiszfeld iteration from the centroid.  When an iterate lands within
    1e-13 (relative) of a data point the subgradient condition is tested
    there directly; if the point is not optimal, a Vardi-Zhang step moves
    off it.  For n = 2 the median is the whole segment and the iteration
    reports the midpoint (its fixed point from the centroid start).
    """
    pts = r.roots
    c = centroid(r)
    iterations = 0
    for iterations in range(1, max_iters + 1):
        snapped = None
        for z in pts:
            if abs(z - c) <= 1e-13 * (1.0 + abs(z)):
                snapped = z
                break
        if snapped is not None:
            multiplicity = 0
            direction = 0.0 + 0.0j
            inv_sum = 0.0
            pull = 0.0 + 0.0j
            for z in pts:
                d = abs(z - snapped)
                if d <= 1e-13 * (1.0 + abs(z)):
                    multiplicity += 1
                else:
                    direction += (z - snapped) / d
                    inv_sum += 1.0 / d
                    pull += z / d
            if abs(direction) <= multiplicity or inv_sum == 0.0:
                c = snapped
                break
            # Vardi-Zhang: blend the off-anchor Weiszfeld target with the
            # anchor, weighted by how far the subgradient exceeds the ball.
            target = pull / inv_sum
            lam = min(1.0, multiplicity / abs(direction))
            cnew = (1.0 - lam) * target + lam * snapped
        else:
            inv_sum = 0.0
            pull = 0.0 + 0.0j
            for z in pts:
                d = abs(z - c)
                inv_sum += 1.0 / d
                pull += z / d
            cnew = pull / inv_sum
        if abs(cnew - c) <= step_tol * (1.0 + abs(c)):
            c = cnew
            break
        c = cnew
    else:
        raise ConvergenceError(
            f"Weiszfeld did not converge in {max_iters} iterations",
            best=c,
        )
    value = math.fsum(abs(z - c) for z in pts) / r.n
    return VarianceResult(p=1.0, center=c, value=value, solver=Solver.WEISZFELD, iterations=iterations)


def _circumcenter(a: complex, b: complex, c: complex) -> complex | None:
    u = b - a
    v = c - a
    d = 2.0 * (u.real * v.imag - u.imag * v.real)
    if d == 0.0:
        return None
    uu = u.real * u.real + u.imag * u.imag
    vv = v.real * v.real + v.imag * v.imag
    x = (uu * v.imag - vv * u.imag) / d
    y = (vv * u.real - uu * v.real) / d
    return a + complex(x, y)


def _in_circle(center: complex, radius: float, p: complex) -> bool:
    return abs(p - center) <= radius * (1.0 + 1e-14) + 1e-300


def _cross(p: complex, q: complex, r: complex) -> float:
    return (q.real - p.real) * (r.imag - p.imag) - (q.imag - p.imag) * (r.real - p.real)


def _circle_two_boundary(pts, p: complex, q: complex) -> tuple[complex, float]:
    """Smallest circle through p and q enclosing pts; scans left/right
    circumcircle candidates as in the incremental Welzl formulation."""
    center = 0.5 * (p + q)
    radius = 0.5 * abs(p - q)
    left: tuple[complex, float] | None = None
    right: tuple[complex, float] | None = None
    for s in pts:
        if _in_circle(center, radius, s):
            continue
        cross = _cross(p, q, s)
        cc = _circumcenter(p, q, s)
        if cc is None:
            continue
        cand = (cc, abs(cc - p))
        if cross > 0.0 and (left is None or _cross(p, q, cc) > _cross(p, q, left[0])):
            left = cand
        elif cross < 0.0 and (right is None or _cross(p, q, cc) < _cross(p, q, right[0])):
            right = cand
    if left is None and right is None:
        return center, radius
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


def smallest_enclosing_circle(points) -> tuple[complex, float]:
    """Welzl's randomized incremental smallest enclosing circle.

    The permutation is drawn from a fixed seed, so the result is a pure
    function of the input multiset order.
    """
    pts = [complex(z) for z in points]
    if not pts:
        raise InputError("need at least one point")
    random.Random(_WELZL_SEED).shuffle(pts)
    center, radius = pts[0], 0.0
    for i, p in enumerate(pts):
        if _in_circle(center, radius, p):
            continue
        # p lies on the boundary of the circle for pts[:i+1]
        center, radius = p, 0.0
        for j, q in enumerate(pts[: i + 1]):
            if _in_circle(center, radius, q):
                continue
            # p and q both lie on the boundary
            if radius == 0.0:
                center = 0.5 * (p + q)
                radius = 0.5 * abs(p - q)
            else:
                center, radius = _circle_two_boundary(pts[: j + 1], p, q)
    return center, radius


def sigma_inf(r: RootSet) -> VarianceResult:
    """min-max distance: radius of the smallest circle enclosing the zeros."""
    center, _ = smallest_enclosing_circle(r.roots)
    value = max(abs(z - center) for z in r.roots)
    return VarianceResult(p=math.inf, center=center, value=value, solver=Solver.WELZL, iterations=0)


def sigma_p(r: RootSet, p: float, max_iters: int = 10_000) -> VarianceResult:
    """General p-variance for p >= 1 (p in (0,1) makes the objective
    non-convex and is rejected).

    Exact p = 1, 2 and p = inf (or p > 64) dispatch to the dedicated
    solvers; otherwise the convex objective (1/n) sum |z_k - c|^p is
    minimized by gradient descent with backtracking line search from the
    centroid, stopping when the gradient norm falls below
    1e-10 * (1 + objective).  Data are shifted/scaled to unit size first
    so large p cannot overflow.
    """
    if not (p >= 1.0):
        raise InputError(f"sigma_p requires p >= 1, got {p!r}")
    if p == 1.0:
        return sigma1(r)
    if p == 2.0:
        return sigma2(r)
    if math.isinf(p) or p > P_INF_CUTOFF:
        return replace(sigma_inf(r), p=p)

    shift = centroid(r)
    scale = max(abs(z - shift) for z in r.roots)
    if scale == 0.0:
        return VarianceResult(p=p, center=shift, value=0.0, solver=Solver.CONVEX_DESCENT, iterations=0)
    pts = [(z - shift) / scale for z in r.roots]
    n = len(pts)

    def objective_grad(c: complex) -> tuple[float, complex]:
        obj = 0.0
        grad = 0.0 + 0.0j
        for z in pts:
            d = abs(z - c)
            obj += d**p
            if d > 0.0:
                grad += d ** (p - 2.0) * (c - z)
        return obj / n, p * grad / n

    def gtol(obj: float) -> float:
        return 1e-10 * (1.0 + obj)

    c = 0.0 + 0.0j
    obj, grad = objective_grad(c)
    step = 0.25
    iterations = 0
    converged = False
    for iterations in range(1, max_iters + 1):
        gnorm2 = grad.real * grad.real + grad.imag * grad.imag
        if math.sqrt(gnorm2) <= gtol(obj):
            converged = True
            break
        accepted = False
        while step >= 1e-18:
            cand = c - step * grad
            cobj, cgrad = objective_grad(cand)
            if cobj <= obj - 1e-4 * step * gnorm2:
                c, obj, grad = cand, cobj, cgrad
                step *= 2.0
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        if abs(obj) * 1e-15 >= 1e-4 * step * gnorm2:
            # Armijo decreases are below float resolution of the objective;
            # hand over to the second-order polish.
            break

    if not converged:
        # Damped Newton on the 2x2 Hessian, accepting on gradient-norm
        # decrease (still measurable when objective differences have
        # saturated); drives the gradient to the stopping threshold.
        for _ in range(60):
            iterations += 1
            gnorm = abs(grad)
            if gnorm <= gtol(obj):
                converged = True
                break
            hxx = hxy = hyy = 0.0
            for z in pts:
                u = c - z
                d = abs(u)
                if d == 0.0:
                    continue
                w = d ** (p - 2.0)
                ux, uy = u.real / d, u.imag / d
                hxx += w * (1.0 + (p - 2.0) * ux * ux)
                hxy += w * (p - 2.0) * ux * uy
                hyy += w * (1.0 + (p - 2.0) * uy * uy)
            coef = p / n
            hxx *= coef
            hxy *= coef
            hyy *= coef
            det = hxx * hyy - hxy * hxy
            if det <= 0.0:
                break
            sx = -(hyy * grad.real - hxy * grad.imag) / det
            sy = -(hxx * grad.imag - hxy * grad.real) / det
            newton = complex(sx, sy)
            t = 1.0
            moved = False
            while t >= 1e-6:
                cand = c + t * newton
                cobj, cgrad = objective_grad(cand)
                if abs(cgrad) < gnorm:
                    c, obj, grad = cand, cobj, cgrad
                    moved = True
                    break
                t *= 0.5
            if not moved:
                break
        if not converged and abs(grad) <= gtol(obj):
            converged = True

    center = c * scale + shift
    value = _p_mean(r.roots, center, p)
    if not converged:
        raise ConvergenceError(
            f"sigma_p descent stalled after {iterations} iterations (p={p})",
            best=VarianceResult(p=p, center=center, value=value, solver=Solver.CONVEX_DESCENT, iterations=iterations),
        )
    return VarianceResult(p=p, center=center, value=value, solver=Solver.CONVEX_DESCENT, iterations=iterations)


def gamma(r: RootSet, cfg: RootFindConfig = DEFAULT_CONFIG, crit: RootSet | None = None) -> GammaReport:
    """Radius of the smallest centroid-centered disk containing a critical
    point.  `crit` may supply precomputed critical points of the same
    configuration to avoid re-solving."""
    if r.n < 2:
        raise InputError("gamma requires degree >= 2")
    if crit is None:
        crit = critical_points(r, cfg)
    g = centroid(r)
    distances = tuple(abs(g - w) for w in crit)
    best = min(distances)
    return GammaReport(
        centroid=g,
        critical_points=crit,
        distances=distances,
        gamma=best,
        argmin_index=distances.index(best),
    )


def sendov_distance(r: RootSet, cfg: RootFindConfig = DEFAULT_CONFIG, crit: RootSet | None = None) -> float:
    """max over zeros of the distance to the nearest critical point."""
    if r.n < 2:
        raise InputError("sendov_distance requires degree >= 2")
    if crit is None:
        crit = critical_points(r, cfg)
    return max(min(abs(z - w) for w in crit) for z in r.roots)


def classify_configuration(r: RootSet) -> ConfigurationClass:
    """ALL_EQUAL / COLLINEAR / GENERIC by centered singular values.

    COLLINEAR means the smaller singular value of the centered 2 x n
    coordinate matrix is at most 1e-9 times the larger; the tolerance is
    chosen so Schoenberg equality detection stays stable under
    root-finder noise.
    """
    g = centroid(r)
    devs = [z - g for z in r.roots]
    scale = max(abs(d) for d in devs)
    tol_equal = 1e-10 * (1.0 + scale)
    max_pair = 0.0
    for i in range(r.n):
        for j in range(i + 1, r.n):
            max_pair = max(max_pair, abs(r.roots[i] - r.roots[j]))
    if max_pair <= tol_equal:
        return ConfigurationClass.ALL_EQUAL
    sxx = math.fsum(d.real * d.real for d in devs)
    syy = math.fsum(d.imag * d.imag for d in devs)
    sxy = math.fsum(d.real * d.imag for d in devs)
    trace = sxx + syy
    disc = math.hypot(sxx - syy, 2.0 * sxy)
    s_max = math.sqrt(0.5 * (trace + disc))
    s_min = math.sqrt(max(0.5 * (trace - disc), 0.0))
    if s_min <= 1e-9 * (s_max + 1e-30):
        return ConfigurationClass.COLLINEAR
    return ConfigurationClass.GENERIC


def collinearity_defect(r: RootSet) -> float:
    """s_min / s_max of the centered coordinate matrix (0 for exactly
    collinear or all-equal configurations); used to match equality
    tolerances to classification tolerances."""
    g = centroid(r)
    devs = [z - g for z in r.roots]
    sxx = math.fsum(d.real * d.real for d in devs)
    syy = math.fsum(d.imag * d.imag for d in devs)
    sxy = math.fsum(d.real * d.imag for d in devs)
    trace = sxx + syy
    if trace == 0.0:
        return 0.0
    disc = math.hypot(sxx - syy, 2.0 * sxy)
    s_max = math.sqrt(0.5 * (trace + disc))
    s_min = math.sqrt(max(0.5 * (trace - disc), 0.0))
    return s_min / (s_max + 1e-300)


def spread(r: RootSet) -> float:
    """max distance from a zero to the centroid."""
    g = centroid(r)
    return max(abs(z - g) for z in r.roots)
