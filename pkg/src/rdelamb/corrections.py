"""Recoil corrections beyond the reduced-mass level formula, and the
finite-nuclear-size shift."""

from __future__ import annotations

from .constants import Atom, PhysicalConstants
from .dirac import dirac_f_minus_one
from .states import State

# Per-(r/a0)^2 coefficient of the nuclear-size shift, Hz.  Stored verbatim to
# guarantee digit-level reproduction; equals (4/3) R_inf 1e-8 within 8e-11,
# the 1e-8 being (1e4 fm / a0)^2 with the radius divisor below.
NUCLEAR_SIZE_CONSTANT_HZ = 4.386454987e7
RADIUS_DIVISOR = 5.2917725  # Bohr radius in 1e4 fm, matching bohr_radius_ref


def recoil1_hz(c: PhysicalConstants, a: Atom, state: State) -> float:
    """Leading recoil: -(mu^2/2M) [f - 1]^2 with M the total mass; always <= 0.

    mu = m_e/(1+b) and M = m_e (1+b)/b give mu^2/(2M) = m_e b/(2 (1+b)^3).
    """
    g = dirac_f_minus_one(state, a.z * c.alpha)
    return -c.m_e_hz * a.b / (2.0 * (1.0 + a.b) ** 3) * g * g


def recoil2_hz(c: PhysicalConstants, a: Atom, state: State) -> float:
    """Fine-structure recoil, zero for S states.

    (Z alpha)^4 mu^3/(2 n^3 m_N^2) [1/(j+1/2) - 1/(l+1/2)]; positive for
    j = l - 1/2 and negative for j = l + 1/2.
    """
    if state.l == 0:
        return 0.0
    za = a.z * c.alpha
    mu = c.m_e_hz / (1.0 + a.b)
    m_n = c.m_e_hz / a.b
    angular = 1.0 / (state.j + 0.5) - 1.0 / (state.l + 0.5)
    return za**4 * mu**3 / (2.0 * state.n**3 * m_n * m_n) * angular


def nuclear_size_hz(c: PhysicalConstants, a: Atom, state: State) -> float:
    """Contact shift from the finite nuclear charge radius; S states only."""
    if state.l != 0:
        return 0.0
    return (1.0 / (1.0 + a.b)) ** 3 * a.z**4 / state.n**3 \
        * NUCLEAR_SIZE_CONSTANT_HZ * (a.r_n_fm / RADIUS_DIVISOR) ** 2
