"""Simultaneous root extraction for complex polynomials.

Ehrlich-Aberth iteration with deterministic initial guesses, followed by
guarded Newton polishing.  The kernel operates on a batch of polynomials
of equal degree at once; the single-polynomial entry points are the
batch-of-one case, so batched and solo solves of the same coefficient
vector produce identical results.

Multiple roots converge as clusters of nearby approximations and are
never merged; convergence for a cluster is certified on its centroid at
a relaxed residual, because exact multiple-root convergence is slow and
downstream geometry only needs locations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InputError
from .poly import MAX_DEGREE, RootSet, derivative, from_roots

# Irrational rotation (golden-ratio radians) applied to the equally spaced
# starting angles so that symmetric root patterns cannot pin the iteration.
_ANGLE_OFFSET = 0.6180339887498949

# Residual thresholds, relative to the Horner magnitude sum (backward error).
_RESIDUAL_SINGLE = 1e-8
_RESIDUAL_CLUSTER = 1e-6
_CLUSTER_RADIUS = 1e-3

# A root freezes when |p(z)| falls below this multiple of the Horner
# evaluation-noise bound eps * sum |c_k||z|^k: its position is then
# indistinguishable from an exact root in double arithmetic, and asking
# for smaller corrections would spin forever on ill-conditioned rows.
_NOISE_FACTOR = 4.0
_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class RootFindConfig:
    """Stopping parameters for the simultaneous iteration.

    `tol` bounds the worst per-root Newton correction relative to
    1 + |root|; `polish_iters` guarded Newton steps run after the main
    iteration.
    """

    max_iters: int = 200
    tol: float = 1e-12
    polish_iters: int = 3

    def __post_init__(self):
        if self.max_iters < 1:
            raise InputError("max_iters must be at least 1")
        if not (self.tol > 0.0):
            raise InputError("tol must be positive")
        if self.polish_iters < 0:
            raise InputError("polish_iters must be nonnegative")


DEFAULT_CONFIG = RootFindConfig()

STRICT_CONFIG = RootFindConfig(max_iters=500, tol=1e-14, polish_iters=6)


@dataclass(frozen=True)
class RootFindResult:
    """All roots (with multiplicity as clusters), plus solve diagnostics.

    `residual` is the worst backward error over convergence units: a
    plain root contributes |f(root)| / (1 + sum_k |c_k| |root|^k), a
    cluster contributes the same quantity at its centroid.
    """

    roots: RootSet
    iterations: int
    converged: bool
    residual: float


def _monicize(coeffs) -> np.ndarray:
    cs = np.asarray([complex(c) for c in coeffs], dtype=np.complex128)
    if cs.size < 2:
        raise InputError("need a polynomial of degree at least 1")
    if cs.size - 1 > MAX_DEGREE:
        raise InputError(f"degree {cs.size - 1} exceeds the cap of {MAX_DEGREE}")
    if not np.all(np.isfinite(cs.view(np.float64))):
        raise InputError("coefficients must be finite")
    lead = cs[-1]
    if lead == 0:
        raise InputError("leading coefficient must be nonzero")
    if lead != 1:
        cs = cs / lead
    return cs


def _initial_circle(coeffs: np.ndarray) -> np.ndarray:
    """Starting points on a root-inclusion circle, symmetry-broken by an
    irrational angle offset.  `coeffs` is a monic (B, m+1) batch.

    The radius is the tighter of the Cauchy bound 1 + max|c_k| and the
    Fujiwara bound 2 max_k |c_{m-k}|^(1/k); Cauchy alone overshoots by
    orders of magnitude for dense high-degree polynomials, which starves
    the iteration budget before the guesses can fall inward.
    """
    m = coeffs.shape[1] - 1
    mags = np.abs(coeffs[:, :-1])
    cauchy = 1.0 + np.max(mags, axis=1)
    ks = np.arange(m, 0, -1)  # c_0 carries exponent 1/m, c_{m-1} exponent 1/1
    fujiwara = 2.0 * np.max(mags ** (1.0 / ks)[None, :], axis=1)
    radius = np.where(fujiwara > 0.0, np.minimum(cauchy, fujiwara), cauchy)
    angles = 2.0 * np.pi * np.arange(m) / m + _ANGLE_OFFSET
    return radius[:, None] * np.exp(1j * angles)[None, :]


def _eval_p_dp(coeffs: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Horner values of p and p' at z; coeffs (R, m+1) ascending, z (R, m).
    Works in whatever complex precision z carries."""
    m = coeffs.shape[1] - 1
    b = np.broadcast_to(coeffs[:, m][:, None], z.shape).astype(z.dtype)
    d = np.zeros_like(z)
    for k in range(m - 1, -1, -1):
        d = d * z + b
        b = b * z + coeffs[:, k][:, None]
    return b, d


def _eval_p_dp_mag(coeffs: np.ndarray, z: np.ndarray):
    """As _eval_p_dp, plus the noise scale sum_k |c_k| |z|^k."""
    m = coeffs.shape[1] - 1
    b = np.broadcast_to(coeffs[:, m][:, None], z.shape).astype(z.dtype)
    d = np.zeros_like(z)
    a = np.abs(z)
    mag = np.abs(np.broadcast_to(coeffs[:, m][:, None], z.shape))
    for k in range(m - 1, -1, -1):
        d = d * z + b
        b = b * z + coeffs[:, k][:, None]
        mag = mag * a + np.abs(coeffs[:, k])[:, None]
    return b, d, mag


def _aberth_iterate(coeffs: np.ndarray, z0: np.ndarray, cfg: RootFindConfig):
    """Run Ehrlich-Aberth on a (B, m+1) batch from guesses z0; returns the
    final roots and per-row iteration counts.

    Individual roots freeze when their correction falls below cfg.tol
    (relative) or when |p| reaches the evaluation-noise floor; frozen
    roots stay put but keep repelling the others.  A row stops when all
    its roots are frozen, so each row's result does not depend on what
    else is in the batch.
    """
    z = z0.copy()
    nrows, m = z.shape
    active = np.ones(nrows, dtype=bool)
    frozen = np.zeros((nrows, m), dtype=bool)
    iterations = np.zeros(nrows, dtype=np.int64)
    eye = np.eye(m, dtype=bool)
    for _ in range(cfg.max_iters):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        zi = z[idx]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            p, dp, mag = _eval_p_dp_mag(coeffs[idx], zi)
            w = p / dp
            diff = zi[:, :, None] - zi[:, None, :]
            diff[:, eye] = 1.0
            inv = 1.0 / diff
            inv[:, eye] = 0.0
            s = inv.sum(axis=2)
            corr = w / (1.0 - w * s)
        bad = ~np.isfinite(corr)
        if bad.any():
            # Exact-zero denominators (symmetric configurations); kick is
            # deterministic, so reruns stay bit-identical.
            kick = 0.5 * (1.0 + np.abs(zi)) * complex(math.cos(_ANGLE_OFFSET), math.sin(_ANGLE_OFFSET))
            corr = np.where(bad, kick, corr)
        fr = frozen[idx] | (np.abs(p) <= _NOISE_FACTOR * _EPS * mag)
        corr = np.where(fr, 0.0, corr)
        zi = zi - corr
        z[idx] = zi
        iterations[idx] += 1
        fr |= np.abs(corr) <= cfg.tol * (1.0 + np.abs(zi))
        frozen[idx] = fr
        active[idx[fr.all(axis=1)]] = False
    return z, iterations


def _polish(coeffs: np.ndarray, z: np.ndarray, polish_iters: int) -> np.ndarray:
    """Guarded Newton steps per root; a step is kept only if |p| decreases.

    Runs in extended precision (clongdouble, 80-bit on x86) so the final
    accuracy is set by the root's condition number against ~1e-19 rather
    than ~1e-16 evaluation noise; platforms whose long double equals
    double still get the plain double result.
    """
    if polish_iters < 1:
        return z
    ce = coeffs.astype(np.clongdouble)
    ze = z.astype(np.clongdouble)
    for _ in range(polish_iters):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            p, dp = _eval_p_dp(ce, ze)
            step = p / dp
            znew = np.where(np.isfinite(step), ze - step, ze)
            pnew, _ = _eval_p_dp(ce, znew)
            ze = np.where(np.abs(pnew) <= np.abs(p), znew, ze)
    return ze.astype(np.complex128)


def _backward_error(coeffs_row: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """|f(pt)| / (1 + sum_k |c_k| |pt|^k) for each pt."""
    m = coeffs_row.size - 1
    val = np.full(pts.shape, coeffs_row[m], dtype=np.complex128)
    mag = np.ones(pts.shape)
    a = np.abs(pts)
    for k in range(m - 1, -1, -1):
        val = val * pts + coeffs_row[k]
        mag = mag * a + abs(coeffs_row[k])
    return np.abs(val) / (1.0 + mag)


def _cluster_units(pts: np.ndarray) -> list[np.ndarray]:
    """Group points lying within _CLUSTER_RADIUS * (1 + |point|) of each other
    (transitively) into index arrays."""
    m = pts.size
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        for j in range(i + 1, m):
            if abs(pts[i] - pts[j]) <= _CLUSTER_RADIUS * (1.0 + abs(pts[i])):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return [np.asarray(g) for g in groups.values()]


def _verify_row(coeffs_row: np.ndarray, pts: np.ndarray) -> tuple[bool, float]:
    """Residual certification: plain roots at _RESIDUAL_SINGLE, clusters of
    two or more at _RESIDUAL_CLUSTER on the cluster centroid."""
    errs = _backward_error(coeffs_row, pts)
    if errs.max() <= _RESIDUAL_SINGLE:
        return True, float(errs.max())
    converged = True
    worst = 0.0
    for unit in _cluster_units(pts):
        if unit.size == 1:
            e = float(errs[unit[0]])
            ok = e <= _RESIDUAL_SINGLE
        else:
            e = float(_backward_error(coeffs_row, np.asarray([pts[unit].mean()]))[0])
            ok = e <= _RESIDUAL_CLUSTER
        worst = max(worst, e)
        converged = converged and ok
    return converged, worst


def _solve_batch(coeffs: np.ndarray, cfg: RootFindConfig, initial: np.ndarray | None = None):
    """Full pipeline on a monic (B, m+1) batch: iterate, polish, certify.

    Returns (roots (B, m), iterations (B,), converged (B,), residual (B,)).
    """
    nrows, mp1 = coeffs.shape
    m = mp1 - 1
    if m == 1:
        roots = (-coeffs[:, 0])[:, None]
        iterations = np.zeros(nrows, dtype=np.int64)
    else:
        z0 = _initial_circle(coeffs) if initial is None else initial.astype(np.complex128)
        roots, iterations = _aberth_iterate(coeffs, z0, cfg)
        roots = _polish(coeffs, roots, cfg.polish_iters)
    converged = np.zeros(nrows, dtype=bool)
    residual = np.zeros(nrows)
    finite = np.all(np.isfinite(roots.view(np.float64)).reshape(nrows, -1), axis=1)
    roots = np.where(np.isfinite(roots), roots, 0.0)
    for i in range(nrows):
        ok, res = _verify_row(coeffs[i], roots[i])
        converged[i] = ok and finite[i]
        residual[i] = res
    return roots, iterations, converged, residual


def find_roots(
    coeffs,
    cfg: RootFindConfig = DEFAULT_CONFIG,
    initial=None,
) -> RootFindResult:
    """All deg-many roots of the polynomial with the given ascending
    coefficient vector (any nonzero leading coefficient).

    `initial` optionally replaces the deterministic circle guesses, e.g.
    to warm-start from the roots of a nearby polynomial; it must contain
    exactly deg entries.  Non-convergence is reported via the `converged`
    flag, never by silently returning bad roots.
    """
    cs = _monicize(coeffs)
    m = cs.size - 1
    init = None
    if initial is not None:
        init = np.asarray([complex(z) for z in initial], dtype=np.complex128)[None, :]
        if init.shape[1] != m:
            raise InputError(f"expected {m} initial guesses, got {init.shape[1]}")
    roots, iterations, converged, residual = _solve_batch(cs[None, :], cfg, initial=init)
    ordered = sorted(roots[0].tolist(), key=lambda z: (z.real, z.imag))
    return RootFindResult(
        roots=RootSet(tuple(ordered)),
        iterations=int(iterations[0]),
        converged=bool(converged[0]),
        residual=float(residual[0]),
    )


def critical_points(r: RootSet, cfg: RootFindConfig = DEFAULT_CONFIG) -> RootSet:
    """The n-1 zeros of F' for F with zero multiset `r`, with multiplicity
    represented by clusters of nearby values."""
    if r.n < 2:
        raise InputError("critical points require degree >= 2")
    res = find_roots(derivative(from_roots(r)), cfg)
    if not res.converged:
        raise ConvergenceError(
            f"critical-point iteration failed (residual {res.residual:.3e})",
            best=res.roots,
            diagnostics={"residual": res.residual, "iterations": res.iterations},
        )
    return res.roots


def _expand_batch(roots: np.ndarray) -> np.ndarray:
    """Batched monic expansion: roots (B, n) -> ascending coeffs (B, n+1).

    Same recurrence as poly.from_roots but accumulated in plain double
    (row i agrees with from_roots(RootSet(roots[i])).coeffs to roughly
    degree * eps); the corpora this feeds are checked at tolerances at
    least five orders of magnitude above that.
    """
    nrows, n = roots.shape
    coeffs = np.zeros((nrows, n + 1), dtype=np.complex128)
    coeffs[:, 0] = 1.0
    for j in range(n):
        z = roots[:, j][:, None]
        width = j + 1
        nxt = np.zeros((nrows, width + 1), dtype=np.complex128)
        nxt[:, 1:] += coeffs[:, :width]
        nxt[:, :width] -= z * coeffs[:, :width]
        coeffs[:, : width + 1] = nxt
    return coeffs


def _derivative_batch(coeffs: np.ndarray) -> np.ndarray:
    """Batched analogue of poly.derivative on ascending (B, n+1) coefficients."""
    n = coeffs.shape[1] - 1
    return coeffs[:, 1:] * np.arange(1, n + 1)[None, :]


def critical_points_batch(roots: np.ndarray, cfg: RootFindConfig = DEFAULT_CONFIG):
    """Critical points for a (B, n) batch of zero configurations.

    Returns (crit (B, n-1), converged (B,), residual (B,)).  Row i equals
    critical_points(RootSet(roots[i]), cfg) as a multiset; callers use this
    to amortize the solve over large corpora.
    """
    roots = np.asarray(roots, dtype=np.complex128)
    if roots.ndim != 2 or roots.shape[1] < 2:
        raise InputError("need a (B, n) batch with n >= 2")
    dcoeffs = _derivative_batch(_expand_batch(roots))
    monic = dcoeffs / dcoeffs[:, -1][:, None]
    crit, _, converged, residual = _solve_batch(monic, cfg)
    return crit, converged, residual
