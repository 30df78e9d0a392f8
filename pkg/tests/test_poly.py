import cmath
import math

import pytest

from polycrit.errors import InputError
from polycrit.poly import (
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
from polycrit.seeding import substream

OMEGA = cmath.exp(2j * cmath.pi / 3)


def approx_complex(a, b, tol=1e-12):
    return abs(a - b) <= tol


class TestFromRoots:
    def test_two_term_vieta(self):
        f = from_roots(RootSet((1, -1)))
        assert f.coeffs == (-1 + 0j, 0j, 1 + 0j)
        assert f.origin == RootSet((1, -1))

    def test_z4_minus_z(self):
        f = from_roots(RootSet((0, 1, OMEGA, OMEGA**2)))
        expected = (0, -1, 0, 0, 1)
        assert all(abs(c - e) < 1e-14 for c, e in zip(f.coeffs, expected))

    def test_cube_times_linear(self):
        # (z+1)^3 (z-1) = z^4 + 2z^3 - 2z - 1, expanded by hand
        f = from_roots(RootSet((-1, -1, -1, 1)))
        assert f.coeffs == (-1 + 0j, -2 + 0j, 0j, 2 + 0j, 1 + 0j)

    def test_permutation_invariance(self):
        rng = substream(3, 0)
        for trial in range(25):
            n = rng.randrange(2, 13)
            roots = [complex(2 * rng.random() - 1, 2 * rng.random() - 1) for _ in range(n)]
            base = from_roots(RootSet(tuple(roots))).coeffs
            shuffled = roots[:]
            rng.shuffle(shuffled)
            other = from_roots(RootSet(tuple(shuffled))).coeffs
            scale = max(abs(c) for c in base)
            assert all(abs(a - b) <= 1e-13 * (1 + scale) for a, b in zip(base, other))

    def test_residual_at_roots(self):
        # |f(z_k)| small relative to coefficient size, degrees up to 50
        rng = substream(3, 1)
        for trial in range(20):
            n = rng.randrange(2, 51)
            roots = RootSet(
                tuple(cmath.rect(2 * math.sqrt(rng.random()), 2 * math.pi * rng.random()) for _ in range(n))
            )
            f = from_roots(roots)
            bound = 1e-10 * (1 + max(abs(c) for c in f.coeffs))
            assert all(abs(evaluate(f, z)) <= bound for z in roots)


class TestDerivative:
    def test_power_rule(self):
        assert derivative(from_roots(RootSet((1, -1)))) == (0j, 2 + 0j)

    def test_z4_minus_z(self):
        d = derivative(from_roots(RootSet((0, 1, OMEGA, OMEGA**2))))
        expected = (-1, 0, 0, 4)
        assert all(abs(c - e) < 1e-14 for c, e in zip(d, expected))

    def test_symbolic_oracle(self):
        # d/dz (z^3 - z) = 3z^2 - 1
        d = derivative(Polynomial((0j, -1 + 0j, 0j, 1 + 0j)))
        assert d == (-1 + 0j, 0j, 3 + 0j)

    def test_degree_and_leading(self):
        rng = substream(3, 2)
        for _ in range(10):
            n = rng.randrange(2, 20)
            f = from_roots(RootSet(tuple(complex(rng.random(), rng.random()) for _ in range(n))))
            d = derivative(f)
            assert len(d) == n
            assert d[-1] == n


class TestEvaluate:
    def test_at_root(self):
        assert evaluate(from_roots(RootSet((1, -1))), 1) == 0

    def test_z4_minus_z_at_zero(self):
        assert evaluate(from_roots(RootSet((0, 1, OMEGA, OMEGA**2))), 0) == 0

    def test_direct_substitution(self):
        assert approx_complex(evaluate(from_roots(RootSet((1, -1))), 1j), -2)

    def test_raw_coefficient_vector(self):
        assert evaluate([1, 2, 3], 2) == 1 + 4 + 12


class TestCentroid:
    def test_symmetric_pair(self):
        assert centroid(RootSet((1, -1))) == 0

    def test_z4_minus_z_barycenter(self):
        assert abs(centroid(RootSet((0, 1, OMEGA, OMEGA**2)))) < 1e-15

    def test_real_mean(self):
        assert centroid(RootSet((1, 2, 3))) == 2

    def test_coefficient_relation(self):
        # mean of roots = -c_{n-1}/n; derivative subleading gives the same
        rng = substream(3, 3)
        for _ in range(10):
            n = rng.randrange(2, 15)
            r = RootSet(tuple(complex(rng.random(), rng.random()) for _ in range(n)))
            f = from_roots(r)
            d = derivative(f)
            g = centroid(r)
            assert approx_complex(g, -f.coeffs[n - 1] / n, 1e-12)
            assert approx_complex(g, -d[n - 2] / (n * (n - 1)), 1e-12)


class TestWeightedCentroid:
    def test_uniform_reduces_to_centroid(self):
        w = WeightVector((0.5, 0.5))
        assert weighted_centroid(RootSet((1, -1)), w) == 0

    def test_vertex_case(self):
        w = WeightVector((1.0, 0.0))
        assert weighted_centroid(RootSet((1, -1)), w) == 1

    def test_uniform_four(self):
        w = WeightVector((0.25,) * 4)
        assert abs(weighted_centroid(RootSet((0, 1, OMEGA, OMEGA**2)), w)) < 1e-15

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            weighted_centroid(RootSet((1, -1)), WeightVector((1.0,)))


class TestValidation:
    def test_rootset_rejects_nonfinite(self):
        with pytest.raises(InputError):
            RootSet((complex("inf"), 0))
        with pytest.raises(InputError):
            RootSet((complex("nan"), 0))

    def test_rootset_rejects_empty(self):
        with pytest.raises(InputError):
            RootSet(())

    def test_degree_cap(self):
        RootSet((0,) * MAX_DEGREE)
        with pytest.raises(InputError):
            RootSet((0,) * (MAX_DEGREE + 1))

    def test_polynomial_must_be_monic(self):
        with pytest.raises(InputError):
            Polynomial((1 + 0j, 2 + 0j))
        Polynomial((1 + 0j, 1 + 0j))

    def test_weights_validation(self):
        with pytest.raises(InputError):
            WeightVector((0.5, 0.6))
        with pytest.raises(InputError):
            WeightVector((-0.1, 1.1))
        WeightVector((0.3, 0.7))
