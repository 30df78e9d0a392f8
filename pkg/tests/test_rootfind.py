import cmath
import math

import pytest

from polycrit.errors import ConvergenceError, InputError
from polycrit.poly import RootSet, centroid, from_roots
from polycrit.rootfind import (
    DEFAULT_CONFIG,
    RootFindConfig,
    critical_points,
    critical_points_batch,
    find_roots,
)
from polycrit.seeding import substream

from oracles import convex_hull, distance_to_hull, multiset_match_distance, well_separated_roots

OMEGA = cmath.exp(2j * cmath.pi / 3)


class TestFindRoots:
    def test_quadratic(self):
        res = find_roots([-1, 0, 1])
        assert res.converged
        assert multiset_match_distance(res.roots.roots, (1, -1)) < 1e-12

    def test_derivative_of_z4_minus_z(self):
        # 4z^3 - 1: all roots on the circle of radius 4^(-1/3)
        res = find_roots([-1, 0, 0, 4])
        assert res.converged
        assert all(abs(abs(z) - 4 ** (-1 / 3)) < 1e-12 for z in res.roots)

    def test_quadratic_formula_oracle(self):
        res = find_roots([-1, 0, 3])
        assert multiset_match_distance(res.roots.roots, (1 / math.sqrt(3), -1 / math.sqrt(3))) < 1e-12

    def test_degree_one(self):
        res = find_roots([3, 1.5])
        assert res.converged
        assert abs(res.roots[0] + 2) < 1e-15

    def test_non_monic_input(self):
        res = find_roots([2, 0, 2])  # 2z^2 + 2 -> roots +-i
        assert multiset_match_distance(res.roots.roots, (1j, -1j)) < 1e-12

    def test_multiple_root_cluster(self):
        # (z+1)^2 (z - 0.5) = z^3 + 1.5 z^2 - 0.5: double root reported as
        # a cluster, still converged
        res = find_roots([-0.5, 0.0, 1.5, 1.0])
        assert res.converged
        near_minus1 = [z for z in res.roots if abs(z + 1) < 1e-4]
        assert len(near_minus1) == 2
        assert any(abs(z - 0.5) < 1e-10 for z in res.roots)

    def test_nonconvergence_is_flagged(self):
        cfg = RootFindConfig(max_iters=1, tol=1e-12, polish_iters=0)
        res = find_roots(from_roots(RootSet(tuple(well_separated_roots(substream(0, 0), 12)))).coeffs, cfg)
        assert not res.converged

    def test_determinism(self):
        coeffs = from_roots(RootSet((0.3 + 0.1j, -0.5, 0.2 - 0.7j, 0.9j))).coeffs
        a = find_roots(coeffs)
        b = find_roots(coeffs)
        assert a.roots.roots == b.roots.roots
        assert a.iterations == b.iterations

    def test_warm_start(self):
        coeffs = from_roots(RootSet((0.3, -0.5, 0.6j, -0.2 - 0.2j))).coeffs
        cold = find_roots(coeffs)
        warm = find_roots(coeffs, initial=cold.roots.roots)
        assert warm.converged
        assert multiset_match_distance(cold.roots.roots, warm.roots.roots) < 1e-12

    def test_input_errors(self):
        with pytest.raises(InputError):
            find_roots([1.0])
        with pytest.raises(InputError):
            find_roots([1.0, 0.0])
        with pytest.raises(InputError):
            find_roots([1.0, complex("nan")])
        with pytest.raises(InputError):
            find_roots([0, 1, 1], initial=[0j, 0j, 0j])


class TestCriticalPoints:
    def test_symmetric_pair(self):
        cp = critical_points(RootSet((1, -1)))
        assert abs(cp[0]) < 1e-15

    def test_z4_minus_z(self):
        cp = critical_points(RootSet((0, 1, OMEGA, OMEGA**2)))
        assert all(abs(abs(w) - 4 ** (-1 / 3)) < 1e-12 for w in cp)

    def test_z3_minus_z(self):
        cp = critical_points(RootSet((0, 1, -1)))
        assert multiset_match_distance(cp.roots, (1 / math.sqrt(3), -1 / math.sqrt(3))) < 1e-12

    def test_multiplicity_conservation(self):
        rng = substream(5, 1)
        for _ in range(10):
            n = rng.randrange(2, 14)
            r = RootSet(well_separated_roots(rng, n, radius=1.0))
            assert len(critical_points(r)) == n - 1

    def test_degree_one_rejected(self):
        with pytest.raises(InputError):
            critical_points(RootSet((1,)))

    def test_failure_propagates(self):
        cfg = RootFindConfig(max_iters=1, tol=1e-15, polish_iters=0)
        with pytest.raises(ConvergenceError):
            critical_points(RootSet(well_separated_roots(substream(5, 2), 12)), cfg)


class TestInvariants:
    def test_round_trip(self):
        # well-separated corpus: recovery to 1e-9 (see oracles for the
        # spacing regime rationale)
        rng_outer = substream(7, 0)
        for trial in range(60):
            rng = substream(7, 1, trial)
            n = 2 + rng.randrange(29)
            r = well_separated_roots(rng, n)
            res = find_roots(from_roots(RootSet(r)).coeffs)
            assert res.converged
            assert multiset_match_distance(r, res.roots.roots) <= 1e-9

    def test_dense_corpus_certified(self):
        # separation only 1e-3: forward recovery is conditioning-limited,
        # but the solver must still converge with certified residuals
        for trial in range(40):
            rng = substream(7, 2, trial)
            n = 2 + rng.randrange(29)
            while True:
                pts = [cmath.rect(2 * math.sqrt(rng.random()), 2 * math.pi * rng.random()) for _ in range(n)]
                if all(abs(pts[i] - pts[j]) >= 1e-3 for i in range(n) for j in range(i + 1, n)):
                    break
            res = find_roots(from_roots(RootSet(tuple(pts))).coeffs)
            assert res.converged
            assert res.residual <= 1e-8

    def test_gauss_lucas(self):
        for trial in range(40):
            rng = substream(7, 3, trial)
            n = 2 + rng.randrange(12)
            r = RootSet(well_separated_roots(rng, n, radius=1.5))
            hull = convex_hull(r.roots)
            for w in critical_points(r):
                assert distance_to_hull(w, hull) <= 1e-8

    def test_barycenter_invariance(self):
        for trial in range(40):
            rng = substream(7, 4, trial)
            n = 2 + rng.randrange(12)
            r = RootSet(well_separated_roots(rng, n, radius=1.5))
            cp = critical_points(r)
            mean_cp = sum(cp.roots, start=0j) / len(cp)
            assert abs(mean_cp - centroid(r)) <= 1e-9


class TestBatch:
    def test_matches_solo(self):
        import numpy as np

        rng = substream(9, 0)
        configs = np.asarray([well_separated_roots(rng, 6, radius=1.0) for _ in range(32)])
        crit, converged, residual = critical_points_batch(configs)
        assert converged.all()
        for i in range(32):
            solo = critical_points(RootSet(tuple(configs[i])))
            assert multiset_match_distance(crit[i], solo.roots) < 1e-12

    def test_row_independence(self):
        import numpy as np

        rng = substream(9, 1)
        configs = np.asarray([well_separated_roots(rng, 5, radius=1.0) for _ in range(8)])
        full, _, _ = critical_points_batch(configs)
        half, _, _ = critical_points_batch(configs[:4])
        assert np.array_equal(full[:4], half)
