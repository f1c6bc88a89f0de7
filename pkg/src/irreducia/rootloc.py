"""Root-location certificates: prove all complex zeros avoid a closed disk
|z| <= d, and turn certified root partitions into factor-count bounds.

Two modes. The symbolic mode checks the sufficient coefficient inequality
|a_0| > sum_{i>=1} |a_i| d^i in exact arithmetic: on |z| <= d that forces
|f(z)| >= |a_0| - sum |a_i| d^i > 0, so the disk is root-free. It is sound
but incomplete. The numeric mode approximates all roots simultaneously and
compares moduli against d with a relative margin; complete in practice but
not a proof, so consumers flag it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .poly import Polynomial

DEFAULT_MARGIN = 1e-3
DEFAULT_TOLERANCE = 1e-10


class CertificateMode(enum.Enum):
    SYMBOLIC_SUFFICIENT = "symbolic"
    NUMERIC_HEURISTIC = "numeric"


class NonConvergenceError(RuntimeError):
    """Root iteration missed the residual target within the retry budget."""

    def __init__(self, best_residual: float):
        super().__init__(f"root iteration did not converge (best residual {best_residual:.3e})")
        self.best_residual = best_residual


@dataclass(frozen=True)
class RootLocationCertificate:
    """Outcome of a disk-exclusion check at radius d."""

    radius: Fraction
    mode: CertificateMode
    certified: bool
    detail: dict

    def is_exact(self) -> bool:
        return self.mode is CertificateMode.SYMBOLIC_SUFFICIENT


@dataclass(frozen=True)
class RootPartition:
    """Counts of roots inside |z| < 1/|a_m| and outside |z| > 1."""

    inner: int
    outer: int
    degree: int

    def is_complete(self) -> bool:
        return self.inner + self.outer == self.degree


def certify_outside_disk(
    f: Polynomial,
    d,
    mode: CertificateMode = CertificateMode.SYMBOLIC_SUFFICIENT,
    *,
    margin: float = DEFAULT_MARGIN,
    tolerance: float = DEFAULT_TOLERANCE,
) -> RootLocationCertificate:
    """Certify that every complex zero of f has modulus greater than d."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.constant_term == 0:
        raise ValueError("root at origin inside every disk")
    d = Fraction(d)
    if d <= 0:
        raise ValueError("disk radius must be positive")

    if mode is CertificateMode.SYMBOLIC_SUFFICIENT:
        lhs = abs(f.constant_term)
        if d.denominator == 1:
            # integer radius: pure integer Horner on |a_i|
            di = d.numerator
            rhs = 0
            for a in reversed(f.coeffs[1:]):
                rhs = rhs * di + abs(a)
            rhs *= di
        else:
            rhs = sum(abs(a) * d**i for i, a in enumerate(f.coeffs) if i > 0)
        return RootLocationCertificate(
            radius=d,
            mode=mode,
            certified=lhs > rhs,
            detail={"lhs": lhs, "rhs": rhs},
        )

    if f.degree == 0:
        return RootLocationCertificate(radius=d, mode=mode, certified=True,
                                       detail={"moduli": [], "margin": margin})
    roots = numeric_roots(f, tolerance=tolerance)
    moduli = sorted(abs(r) for r in roots)
    certified = moduli[0] > float(d) * (1.0 + margin)
    return RootLocationCertificate(
        radius=d, mode=mode, certified=certified,
        detail={"moduli": moduli, "margin": margin},
    )


def numeric_roots(
    f: Polynomial,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = 400,
    restarts: int = 6,
) -> list[complex]:
    """All complex roots by simultaneous (Weierstrass) iteration.

    Converged when the scaled residual max |f(r)| / (|a_m| max(1,|r|)^m)
    drops below tolerance; stagnating attempts restart from perturbed
    initial points. Raises NonConvergenceError after the retry budget.
    """
    m = f.degree
    if m < 1:
        raise ValueError("need degree >= 1 for root finding")
    monic = np.array([c / f.leading_coefficient for c in f.coeffs], dtype=complex)
    highest_first = monic[::-1]

    def residual(z: np.ndarray) -> float:
        vals = np.abs(np.polyval(highest_first, z))
        scale = np.maximum(1.0, np.abs(z)) ** m
        return float(np.max(vals / scale))

    radius = 1.0 + float(max(abs(c) for c in monic[:-1]))  # Cauchy root bound
    rng = np.random.default_rng(0x5EED)
    best = np.zeros(m, dtype=complex)
    best_res = float("inf")
    for attempt in range(restarts):
        angles = 2.0 * np.pi * np.arange(m) / m + 0.4
        z = radius ** ((np.arange(m) + 1.0) / m) * np.exp(1j * angles)
        if attempt:
            z = z * (1.0 + 0.2 * attempt) + (
                rng.standard_normal(m) + 1j * rng.standard_normal(m)
            ) * 0.1 * radius
        prev_step = float("inf")
        stagnant = 0
        for _ in range(max_iterations):
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            denom = np.prod(diff, axis=1)
            update = np.polyval(highest_first, z) / denom
            z = z - update
            step = float(np.max(np.abs(update)))
            if step < 1e-15 * max(1.0, float(np.max(np.abs(z)))):
                break
            if step >= prev_step:
                stagnant += 1
                if stagnant > 20:
                    break
            else:
                stagnant = 0
            prev_step = step
        res = residual(z)
        if res < best_res:
            best_res = res
            best = z
        if res <= tolerance:
            return [complex(r) for r in z]
    raise NonConvergenceError(best_res)


def partition_roots(f: Polynomial, roots: list[complex] | None = None) -> RootPartition:
    """Count roots inside |z| < 1/|a_m| and outside |z| > 1.

    Roots landing in the closed gap between the two circles leave the
    partition incomplete.
    """
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    if roots is None:
        roots = numeric_roots(f)
    cut = 1.0 / abs(f.leading_coefficient)
    inner = sum(1 for r in roots if abs(r) < cut)
    outer = sum(1 for r in roots if abs(r) > 1.0)
    return RootPartition(inner=inner, outer=outer, degree=f.degree)


def root_partition_bound(partition: RootPartition) -> int:
    """Factor-count bound from a complete inner/outer root partition.

    With j roots strictly inside |z| < 1/|a_m| and the remaining m - j
    strictly outside |z| > 1, the polynomial splits into at most m - j
    irreducible integer factors: any candidate factor whose roots all sit in
    the small disk would have |g(0)| = |lead(g)| * prod |roots| < 1, which is
    impossible for a nonconstant integer factor.
    """
    if not partition.is_complete():
        raise ValueError("incomplete root partition")
    return partition.outer
