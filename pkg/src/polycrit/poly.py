"""Monic complex polynomials represented primarily by their zeros.

All downstream quantities (variances, centroid-disk radii, inequality
checks) are functions of a zero configuration, so the root multiset is
the source of truth and coefficient vectors are derived from it by
expanding linear factors.  Coefficients are stored in ascending order of
powers as pairs of 64-bit floats; the degree cap keeps the documented
tolerances honest at that width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

# Expansion in double precision is validated up to this degree; the CLI
# enforces a stricter default (64).
MAX_DEGREE = 128


def _require_finite(z: complex, what: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"{what} must be finite, got {z!r}")


@dataclass(frozen=True)
class RootSet:
    """A multiset of zeros; the storage order carries no meaning.

    Multiplicity is expressed by repetition.  Construction requires at
    least one finite entry; operations that need degree >= 2 check it
    themselves.
    """

    roots: tuple[complex, ...]

    def __post_init__(self):
        roots = tuple(complex(z) for z in self.roots)
        object.__setattr__(self, "roots", roots)
        if not roots:
            raise InputError("RootSet requires at least one root")
        if len(roots) > MAX_DEGREE:
            raise InputError(f"degree {len(roots)} exceeds the cap of {MAX_DEGREE}")
        for z in roots:
            _require_finite(z, "root")

    @property
    def n(self) -> int:
        return len(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, k: int) -> complex:
        return self.roots[k]

    def max_modulus(self) -> float:
        return max(abs(z) for z in self.roots)

    def in_disk(self, radius: float = 1.0, slack: float = 1e-12) -> bool:
        return self.max_modulus() <= radius + slack


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial as an ascending coefficient tuple, coeffs[-1] == 1.

    `origin` records the root multiset the polynomial was expanded from,
    when known.
    """

    coeffs: tuple[complex, ...]
    origin: RootSet | None = None

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise InputError("polynomial degree must be at least 1")
        if len(coeffs) - 1 > MAX_DEGREE:
            raise InputError(f"degree {len(coeffs) - 1} exceeds the cap of {MAX_DEGREE}")
        for c in coeffs:
            _require_finite(c, "coefficient")
        if coeffs[-1] != 1:
            raise InputError(f"leading coefficient must be exactly 1, got {coeffs[-1]!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights summing to one (within 1e-12)."""

    weights: tuple[float, ...]

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise InputError("WeightVector requires at least one weight")
        for w in weights:
            if not math.isfinite(w) or w < 0.0:
                raise InputError(f"weights must be finite and nonnegative, got {w!r}")
        total = math.fsum(weights)
        if abs(total - 1.0) > 1e-12:
            raise InputError(f"weights must sum to 1 within 1e-12, got {total!r}")

    def __len__(self) -> int:
        return len(self.weights)


def from_roots(r: RootSet) -> Polynomial:
    """Expand prod(z - r_k) by incremental multiplication with linear factors.

    The accumulation runs in extended precision (80-bit where the
    platform has it) and is rounded to double once at the end, so the
    returned coefficients are correctly-rounded rather than carrying
    degree-many accumulation errors; at degree 30 this is the difference
    between root-recovery error around 1e-10 and around 1e-8.
    """
    coeffs = np.zeros(1, dtype=np.clongdouble)
    coeffs[0] = 1.0
    for z in r.roots:
        zz = np.clongdouble(z)
        nxt = np.zeros(coeffs.size + 1, dtype=np.clongdouble)
        nxt[1:] += coeffs
        nxt[:-1] -= zz * coeffs
        coeffs = nxt
    return Polynomial(tuple(complex(c) for c in coeffs.astype(np.complex128)), origin=r)


def derivative(f: Polynomial) -> tuple[complex, ...]:
    """Coefficient vector of f', ascending; leading coefficient is deg(f).

    The result is deliberately not re-normalized to monic; divide by
    deg(f) before treating it as a monic polynomial.
    """
    return tuple(k * f.coeffs[k] for k in range(1, len(f.coeffs)))


def evaluate(f: Polynomial | tuple[complex, ...] | list[complex], z: complex) -> complex:
    """Horner evaluation; accepts a Polynomial or a raw ascending coefficient vector."""
    coeffs = f.coeffs if isinstance(f, Polynomial) else tuple(f)
    _require_finite(complex(z), "evaluation point")
    acc = 0.0 + 0.0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def centroid(r: RootSet) -> complex:
    """Arithmetic mean of the zeros."""
    return sum(r.roots, start=0.0 + 0.0j) / r.n


def weighted_centroid(r: RootSet, l: WeightVector) -> complex:
    """Convex combination sum(l_k * z_k) of the zeros."""
    if len(l) != r.n:
        raise InputError(f"weight count {len(l)} does not match root count {r.n}")
    return sum(w * z for w, z in zip(l.weights, r.roots))
