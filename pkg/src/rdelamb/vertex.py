"""Vacuum polarization and the off-mass-shell vertex pieces.

These are the ingredients behind the radiative bracket: the photon
self-energy (charge renormalization and the Uehling contact term), and the
three-part vertex whose q^2 and sigma.q pieces source the contact and L.S
shifts.  The contact coefficient assembled here equals half the S-state
bracket exactly; that identity is what ties this module to radiative.py.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import Atom, PhysicalConstants
from .radiative import s_state_bracket


@dataclass(frozen=True)
class VertexParts:
    z1_inverse_bracket: float  # 11/2 - 3 zeta + 4 (1+zeta) ln zeta
    q2_coefficient: float      # 1/6 + zeta/2 + (4/3) ln zeta + 2 zeta ln zeta
    anomaly_factor: float      # 1 + 3 zeta + 2 zeta ln zeta


def vertex_parts(zeta: float, q2_over_mu2: float = 0.0) -> VertexParts:
    """Dimensionless vertex brackets at scale zeta.

    q2_over_mu2 is accepted for interface symmetry with the integral oracle;
    the brackets themselves are its expansion coefficients and do not depend
    on it.
    """
    if zeta <= 0.0:
        raise ValueError("zeta must be positive")
    ln = math.log(zeta)
    return VertexParts(
        z1_inverse_bracket=5.5 - 3.0 * zeta + 4.0 * (1.0 + zeta) * ln,
        q2_coefficient=1.0 / 6.0 + zeta / 2.0 + (4.0 / 3.0) * ln + 2.0 * zeta * ln,
        anomaly_factor=1.0 + 3.0 * zeta + 2.0 * zeta * ln,
    )


def vacuum_polarization_z3(q2_over_m2: float, alpha: float) -> float:
    """Truncated photon wavefunction renormalization, 1 - (alpha/3pi) q^2/(5 m^2).

    Exceeds 1 for spacelike q^2 < 0 (the effective charge grows with Q^2).
    """
    return 1.0 - (alpha / (3.0 * math.pi)) * q2_over_m2 / 5.0


def uehling_delta_coefficient(alpha: float) -> float:
    """Coefficient of the vacuum-polarization contact term, -4 alpha^2/15 per 1/m^2."""
    return -4.0 * alpha * alpha / 15.0


def contact_coefficient(zeta: float) -> float:
    """Full contact bracket of the effective radiative potential.

    -(4/3) ln zeta + 1/15 + zeta - zeta ln zeta; positive for all physical
    zeta and exactly half of the S-state bracket.
    """
    if zeta <= 0.0:
        raise ValueError("zeta must be positive")
    ln = math.log(zeta)
    return -(4.0 / 3.0) * ln + 1.0 / 15.0 + zeta - zeta * ln


def s_state_density(z: int, n: int, mu_hz: float, alpha: float) -> float:
    """|psi(0)|^2 for an nS state: Z^3 alpha^3 mu^3 / (pi n^3), in Hz^3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return z**3 * alpha**3 * mu_hz**3 / (math.pi * n**3)


def assembled_s_shift_hz(c: PhysicalConstants, a: Atom, n: int, zeta: float) -> float:
    """Contact shift built from potential coefficient times |psi(0)|^2.

    (Z alpha^2/mu^2) contact_coefficient * density.  Matches the S-state
    branch of rad_level_shift_hz up to the constant set's own R_inf versus
    alpha^2 m/2 consistency (~2e-10); kept separate as a consistency probe.
    """
    mu = c.m_e_hz / (1.0 + a.b)
    coeff = a.z * c.alpha**2 / mu**2 * contact_coefficient(zeta)
    return coeff * s_state_density(a.z, n, mu, c.alpha)


def vacuum_polarization_level_hz(c: PhysicalConstants, a: Atom, n: int, l: int) -> float:
    """Uehling contact shift of an nS level; zero for l > 0.

    -(4/(15 pi)) alpha (Z alpha)^4 mu / n^3, with the loop-mass ratio
    mu^2/m^2 set to 1.
    """
    if l != 0:
        return 0.0
    mu = c.m_e_hz / (1.0 + a.b)
    return -(4.0 / (15.0 * math.pi)) * c.alpha * (a.z * c.alpha) ** 4 * mu / n**3


def s_bracket_identity_gap(zeta: float) -> float:
    """Relative gap between 2x the contact coefficient and the S-state bracket."""
    s = s_state_bracket(zeta)
    return abs(2.0 * contact_coefficient(zeta) - s) / abs(s)
