"""One-loop radiative level shift driven by the off-mass-shell scale zeta.

S states pick up a contact term, other states a pure L.S term:

    shift = (1/(1+b)) (Z^4/n^3) (alpha^3 R_inf / pi) * bracket

    bracket(l=0)  = (8/3) ln(1/zeta) + 2/15 + 2 zeta (1 - ln zeta)
    bracket(l>0)  = (1 + zeta (3 + 2 ln zeta)) * C_jl / (2l + 1),
                    C_jl = 1/(l+1) for j = l+1/2,  -1/l for j = l-1/2.

The prefactor uses alpha^3 R_inf / pi computed from the constant set, never
a pre-rounded product.
"""

from __future__ import annotations

import math

from .constants import Atom, PhysicalConstants
from .states import State
from .zeta import zeta as zeta_value


def s_state_bracket(zeta: float) -> float:
    if zeta <= 0.0:
        raise ValueError("zeta must be positive")
    ln = math.log(zeta)
    return (8.0 / 3.0) * (-ln) + 2.0 / 15.0 + 2.0 * zeta * (1.0 - ln)


def ls_bracket(zeta: float, l: int, two_j: int) -> float:
    if zeta <= 0.0:
        raise ValueError("zeta must be positive")
    if l < 1:
        raise ValueError("L.S bracket needs l >= 1")
    c_jl = 1.0 / (l + 1) if two_j == 2 * l + 1 else -1.0 / l
    return (1.0 + zeta * (3.0 + 2.0 * math.log(zeta))) * c_jl / (2 * l + 1)


def rad_level_shift_hz(c: PhysicalConstants, a: Atom, state: State, zeta: float) -> float:
    """Radiative shift of one level at an explicitly supplied zeta."""
    pref = 1.0 / (1.0 + a.b) * a.z**4 / state.n**3 \
        * c.alpha**3 * c.rydberg_inf_hz / math.pi
    if state.l == 0:
        return pref * s_state_bracket(zeta)
    return pref * ls_bracket(zeta, state.l, state.two_j)


def rad_level_hz(c: PhysicalConstants, a: Atom, state: State, scheme: str) -> float:
    """Radiative shift with zeta drawn from the named scheme at this level's n.

    Each level uses its own n's zeta; a 2S-2P pair shares one value, a
    2S-1S difference mixes two.
    """
    z = zeta_value(scheme, c.alpha, a.z, state.n)
    return rad_level_shift_hz(c, a, state, z)
