"""One-loop electron self-energy off the mass shell.

With x = p^2/mu^2 and the subtraction scale fixed at mu e^(-5/6), the
renormalized self-energy splits into a mass piece A and a wavefunction
piece B:

    A/mu = (alpha/pi)  [ 1/3 + ((1-x)/x) ln(1-x) ]
    B    = (alpha/4pi) [ -4/3 - (1-x)/x - ((1-x^2)/x^2) ln(1-x) ]

On shell (x = 1) the logarithm terms vanish in the limit, giving B = -alpha/3pi
and a mass increment delta mu that is exactly zero; off shell by zeta = 1 - x
the increment is negative and O(zeta ln zeta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SelfEnergyTerms:
    a_over_mu: float          # mass piece A/mu
    b_term: float             # wavefunction piece B
    z2: float                 # 1/(1 - B)
    delta_mu_over_mu: float   # (A/mu + B)/(1 - B)


def _a_over_mu(x: float, alpha: float) -> float:
    if x == 1.0:
        # (1-x) ln(1-x) -> 0
        return alpha / math.pi * (1.0 / 3.0)
    return alpha / math.pi * (1.0 / 3.0 + (1.0 - x) / x * math.log1p(-x))


def _b_term(x: float, alpha: float) -> float:
    if x == 1.0:
        # both (1-x)/x and (1-x^2) ln(1-x) vanish in the limit
        return -alpha / (3.0 * math.pi)
    return alpha / (4.0 * math.pi) * (-4.0 / 3.0 - (1.0 - x) / x
                                      - (1.0 - x * x) / (x * x) * math.log1p(-x))


def self_energy_terms(x: float, alpha: float) -> SelfEnergyTerms:
    """Evaluate A/mu, B, Z2 and the mass increment at x = p^2/mu^2 in (0, 1]."""
    if not 0.0 < x <= 1.0:
        raise ValueError("x = p^2/mu^2 must lie in (0, 1]")
    a = _a_over_mu(x, alpha)
    b = _b_term(x, alpha)
    return SelfEnergyTerms(
        a_over_mu=a,
        b_term=b,
        z2=1.0 / (1.0 - b),
        delta_mu_over_mu=(a + b) / (1.0 - b),
    )


def delta_mu_approx(zeta: float, alpha: float) -> float:
    """Small-zeta form of the mass increment, (alpha/4pi)(-z + 2z ln z)/(1 + alpha/3pi).

    Negative throughout (0, 1); drops terms of order zeta^2 ln zeta.
    """
    if not 0.0 < zeta < 1.0:
        raise ValueError("zeta must lie in (0, 1)")
    return (alpha / (4.0 * math.pi)) * (-zeta + 2.0 * zeta * math.log(zeta)) \
        / (1.0 + alpha / (3.0 * math.pi))
