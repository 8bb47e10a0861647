"""Two-body relativistic reduction: Coulomb eigenvalues of the reduced
equation and the nonlinear map from the reduced eigenvalue to the total
energy.

The reduced equation is Schroedinger-like in a parameter epsilon; the
physical total energy follows from E = M sqrt(1 + 2 epsilon/M), so the
spectrum is bounded below by E = 0 at epsilon = -M/2.  For a pair of
charges +Ze and -Ze the coupling is Z^2 alpha, which caps the charge number
at Z_max = (4/alpha^2)^(1/4) before the ground state hits that floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class TwoBodySystem:
    m1: float     # Hz convention, as elsewhere
    m2: float
    z_eff: float  # charge number of the +Ze/-Ze pair; coupling is z_eff^2 alpha

    def __post_init__(self) -> None:
        if self.m1 <= 0.0 or self.m2 <= 0.0:
            raise ValueError("masses must be positive")
        if self.z_eff <= 0.0:
            raise ValueError("z_eff must be positive")

    @property
    def total_mass(self) -> float:
        return self.m1 + self.m2

    @property
    def reduced_mass(self) -> float:
        return self.m1 * self.m2 / (self.m1 + self.m2)


def coulomb_epsilon(system: TwoBodySystem, n: int, alpha: float) -> float:
    """Reduced-equation eigenvalue -(z_eff^2 alpha)^2 mu / (2 n^2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coupling = system.z_eff * system.z_eff * alpha
    return -coupling * coupling * system.reduced_mass / (2.0 * n * n)


def total_energy(system: TwoBodySystem, epsilon: float) -> tuple[float, float]:
    """(E, B): total energy M sqrt(1 + 2 eps/M) and binding B = M - E.

    epsilon below -M/2 has no real energy; a few ulp of rounding past the
    boundary (as happens when epsilon itself was computed in floats) is
    clamped to the boundary rather than rejected.
    """
    m = system.total_mass
    radicand = 1.0 + 2.0 * epsilon / m
    if radicand < 0.0:
        if radicand > -1e-12:
            radicand = 0.0
        else:
            raise ValueError("supercritical: epsilon < -M/2")
    e = m * math.sqrt(radicand)
    return e, m - e


def strong_coupling_zmax(alpha: float) -> float:
    """Largest charge number with a real ground energy, (4/alpha^2)^(1/4)."""
    return (4.0 / (alpha * alpha)) ** 0.25


def kinetic_exact(p: float, m1: float, m2: float) -> float:
    """Total energy minus rest masses, cancellation-free.

    sqrt(m^2+p^2) - m is evaluated as p^2/(sqrt(m^2+p^2) + m) so small-p
    gaps against the expansions below stay resolvable.
    """
    return p * p / (math.sqrt(m1 * m1 + p * p) + m1) \
        + p * p / (math.sqrt(m2 * m2 + p * p) + m2)


def total_energy_exact(p: float, m1: float, m2: float) -> float:
    return math.sqrt(m1 * m1 + p * p) + math.sqrt(m2 * m2 + p * p)


def kinetic_expansion_a(p: float, m1: float, m2: float) -> float:
    """p^2/2mu - p^4/8mu^3: the expansion that drops the (1 - 3mu/M) factor.

    Its p^4 term is exact only in the one-body limit; the residual against
    kinetic_exact is (3/(8 M mu^2)) p^4 + O(p^6).
    """
    mu = m1 * m2 / (m1 + m2)
    return p * p / (2.0 * mu) - p**4 / (8.0 * mu**3)


def kinetic_expansion_b(p: float, m: float) -> float:
    """Equal-mass expansion p^2/2mu - p^4/32mu^3, correct through p^4.

    The residual against kinetic_exact is sixth order.
    """
    mu = m / 2.0
    return p * p / (2.0 * mu) - p**4 / (32.0 * mu**3)


def two_particle_energy_check(m1: float, m2: float, p: float,
                              ) -> tuple[float, float, float | None]:
    """(exact, expansion_a, expansion_b) total energies at momentum p.

    expansion_b is only defined for equal masses and is None otherwise.
    """
    if m1 <= 0.0 or m2 <= 0.0:
        raise ValueError("masses must be positive")
    if p < 0.0:
        raise ValueError("p must be nonnegative")
    exact = total_energy_exact(p, m1, m2)
    case_a = (m1 + m2) + kinetic_expansion_a(p, m1, m2)
    case_b = 2.0 * m1 + kinetic_expansion_b(p, m1) if m1 == m2 else None
    return exact, case_a, case_b
