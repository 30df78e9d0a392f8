"""Independent oracles for the test suite.

Everything here deliberately avoids the library's solution paths: the
variance oracles are brute-force grid scans with local refinement, hull
distances come from a monotone-chain hull, and multiset matching uses an
optimal assignment.  Slow and dumb on purpose.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.optimize import linear_sum_assignment


def grid_minimize(objective, points, levels: int = 9, grid: int = 41):
    """Minimize objective(c) over the complex plane by scanning a grid on
    the points' bounding box and refining around the argmin.

    `objective` maps a complex ndarray of candidate centers to an ndarray
    of values.  Returns (center, value).
    """
    pts = np.asarray(points, dtype=complex)
    x_lo, x_hi = pts.real.min(), pts.real.max()
    y_lo, y_hi = pts.imag.min(), pts.imag.max()
    pad = 0.05 * max(x_hi - x_lo, y_hi - y_lo, 1e-9)
    x_lo, x_hi = x_lo - pad, x_hi + pad
    y_lo, y_hi = y_lo - pad, y_hi + pad
    best_c, best_v = None, math.inf
    for _ in range(levels):
        xs = np.linspace(x_lo, x_hi, grid)
        ys = np.linspace(y_lo, y_hi, grid)
        cc = (xs[None, :] + 1j * ys[:, None]).ravel()
        vals = objective(cc)
        k = int(np.argmin(vals))
        if vals[k] < best_v:
            best_v = float(vals[k])
            best_c = complex(cc[k])
        # shrink the window to 3 cells around the argmin
        hx = 3.0 * (x_hi - x_lo) / (grid - 1)
        hy = 3.0 * (y_hi - y_lo) / (grid - 1)
        x_lo, x_hi = best_c.real - hx, best_c.real + hx
        y_lo, y_hi = best_c.imag - hy, best_c.imag + hy
    return best_c, best_v


def oracle_sigma_p(points, p: float):
    pts = np.asarray(points, dtype=complex)

    def objective(cc):
        return (np.abs(pts[:, None] - cc[None, :]) ** p).mean(axis=0) ** (1.0 / p)

    return grid_minimize(objective, pts)


def oracle_sigma_inf(points):
    pts = np.asarray(points, dtype=complex)

    def objective(cc):
        return np.abs(pts[:, None] - cc[None, :]).max(axis=0)

    return grid_minimize(objective, pts)


def multiset_match_distance(a, b) -> float:
    """min over pairings of the max pairwise distance, via an optimal
    assignment (an upper bound for the bottleneck pairing, which is all
    the tests need)."""
    aa = np.asarray(a, dtype=complex)
    bb = np.asarray(b, dtype=complex)
    assert aa.size == bb.size
    cost = np.abs(aa[:, None] - bb[None, :])
    ri, ci = linear_sum_assignment(cost)
    return float(cost[ri, ci].max())


def convex_hull(points):
    """Monotone-chain hull; returns vertices counter-clockwise (may be a
    single point or a segment for degenerate inputs)."""
    pts = sorted(set((z.real, z.imag) for z in points))
    if len(pts) <= 2:
        return [complex(*p) for p in pts]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return [complex(*p) for p in lower[:-1] + upper[:-1]]


def _point_segment_distance(z: complex, a: complex, b: complex) -> float:
    ab = b - a
    denom = ab.real * ab.real + ab.imag * ab.imag
    if denom == 0.0:
        return abs(z - a)
    t = ((z - a).real * ab.real + (z - a).imag * ab.imag) / denom
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * ab))


def distance_to_hull(z: complex, hull) -> float:
    """0 inside (or on) the hull, else distance to the nearest edge."""
    if len(hull) == 1:
        return abs(z - hull[0])
    if len(hull) == 2:
        return _point_segment_distance(z, hull[0], hull[1])
    inside = True
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        cr = (b - a).real * (z - a).imag - (b - a).imag * (z - a).real
        if cr < 0.0:
            inside = False
            break
    if inside:
        return 0.0
    return min(
        _point_segment_distance(z, hull[i], hull[(i + 1) % len(hull)])
        for i in range(len(hull))
    )


def well_separated_roots(rng, n: int, radius: float = 2.0):
    """Uniform disk draws re-sampled until every pair is at least 6/n
    apart: the spacing regime in which double-precision coefficients can
    represent the roots to the tolerances the round-trip tests assert."""
    sep = 6.0 / n
    while True:
        pts = [
            cmath.rect(radius * math.sqrt(rng.random()), 2.0 * math.pi * rng.random())
            for _ in range(n)
        ]
        if all(abs(pts[i] - pts[j]) >= sep for i in range(n) for j in range(i + 1, n)):
            return tuple(pts)
