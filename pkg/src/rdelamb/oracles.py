"""Independent numerical checks of the closed-form approximations.

Everything here exists to catch a wrong closed form: the vertex double
integral is redone by adaptive quadrature, the infrared endpoint integral
by its exact logarithm, the self-energy increment by its unexpanded form,
and the two-body expansions against the exact square roots.  The library
proper never calls these in a hot path.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.integrate import quad

from .selfenergy import delta_mu_approx, self_energy_terms
from .twobody import (kinetic_exact, kinetic_expansion_a, kinetic_expansion_b,
                      two_particle_energy_check)

__all__ = [
    "vertex_log_integral_numeric",
    "vertex_log_integral_closed",
    "ir_integral_check",
    "self_energy_consistency",
    "two_particle_energy_check",
    "loglog_slope",
    "oracle_battery",
]


def _inner_v(u: float, zeta: float, q2: float) -> float:
    # analytic v-integral of ln(a - b v^2) over [-u, u];
    # a = ((1-zeta) + q2/4) u^2 + zeta u, b = q2/4, in mu = 1 units
    a = ((1.0 - zeta) + q2 / 4.0) * u * u + zeta * u
    b = q2 / 4.0
    if b == 0.0:
        return 2.0 * u * math.log(a)
    s = math.sqrt(a / b)
    return 2.0 * (u * math.log(a - b * u * u) - 2.0 * u + 2.0 * s * math.atanh(u / s))


def vertex_log_integral_numeric(zeta: float, q2_over_4mu2: float) -> float:
    """Double integral of the vertex logarithm, to ~1e-12 absolute.

    The v integral is done analytically (the integrand is log of a quadratic
    in v), the u integral by adaptive quadrature.  Valid for 0 < zeta < 0.1
    and 0 <= q2_over_4mu2 < 0.1, where a - b v^2 stays positive.
    """
    if not 0.0 < zeta < 0.1:
        raise ValueError("zeta must lie in (0, 0.1)")
    if not 0.0 <= q2_over_4mu2 < 0.1:
        raise ValueError("q2_over_4mu2 must lie in [0, 0.1)")
    q2 = 4.0 * q2_over_4mu2
    val, err = quad(lambda u: _inner_v(u, zeta, q2), 0.0, 1.0,
                    epsabs=1e-13, epsrel=1e-13, limit=200)
    if err > 1e-10:
        raise ArithmeticError(f"quadrature did not converge: error estimate {err:.2e}")
    return val


def vertex_log_integral_closed(zeta: float, q2_over_4mu2: float) -> float:
    """Closed-form approximation -1 + zeta + (Q^2/6)(1 - zeta), mu = 1 units."""
    q2 = 4.0 * q2_over_4mu2
    return -1.0 + zeta + q2 / 6.0 * (1.0 - zeta)


def ir_integral_check(zeta: float, lam: float) -> tuple[float, float]:
    """(exact, approx) for the infrared endpoint integral over u + zeta/lam.

    exact = ln(1 + lam/zeta); approx = zeta/lam - ln(zeta/lam), which drops
    O((zeta/lam)^2).
    """
    if zeta <= 0.0 or lam <= 0.0:
        raise ValueError("zeta and lam must be positive")
    c = zeta / lam
    return math.log1p(1.0 / c), c - math.log(c)


def self_energy_consistency(zeta: float, alpha: float) -> tuple[float, float]:
    """(exact, approx) mass increment at x = 1 - zeta; gap is O(zeta^2 ln zeta)."""
    exact = self_energy_terms(1.0 - zeta, alpha).delta_mu_over_mu
    return exact, delta_mu_approx(zeta, alpha)


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of ln(y) against ln(x); the fitted scaling order."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need two or more paired points")
    if any(x <= 0.0 for x in xs) or any(y <= 0.0 for y in ys):
        raise ValueError("slope fit needs positive values")
    return float(np.polyfit(np.log(np.asarray(xs)), np.log(np.asarray(ys)), 1)[0])


def oracle_battery(alpha: float) -> list[dict]:
    """Run the whole oracle suite; one entry per check with its gate.

    Gates: fitted residual constant below 10, point gaps below their stated
    bounds, and log-log slopes within 0.3 of the predicted order.
    """
    checks: list[dict] = []

    def gate(name: str, measured: float, lo: float, hi: float) -> None:
        checks.append({"name": name, "measured": measured, "lo": lo, "hi": hi,
                       "ok": lo <= measured <= hi})

    worst_c = 0.0
    for z in (1e-4, 1e-3, 1e-2):
        for q in (0.0, 1e-3, 1e-2):
            gap = abs(vertex_log_integral_numeric(z, q)
                      - vertex_log_integral_closed(z, q))
            bound = z * z * abs(math.log(z)) + q * q
            worst_c = max(worst_c, gap / bound)
    gate("vertex_gap_constant", worst_c, 0.0, 10.0)

    eps = (1e-4, 3e-4, 1e-3, 3e-3, 1e-2)
    gaps = [abs(vertex_log_integral_numeric(z, z)
                - vertex_log_integral_closed(z, z)) for z in eps]
    gate("vertex_gap_slope", loglog_slope(eps, gaps), 1.7, 2.3)

    exact, approx = ir_integral_check(1e-4, 1.0)
    gate("ir_point_gap", abs(exact - approx), 0.0, 1e-7)
    cs = (1e-3, 3e-3, 1e-2, 3e-2, 1e-1)
    g_ir = [abs(e - a) for e, a in (ir_integral_check(c, 1.0) for c in cs)]
    gate("ir_gap_slope", loglog_slope(cs, g_ir), 1.7, 2.3)

    e, a = self_energy_consistency(1e-4, alpha)
    gate("self_energy_point_rel_gap", abs(e - a) / abs(e), 0.0, 1e-3)
    zs = np.logspace(-5.0, -2.0, 7)
    g_se = [abs(e - a) for e, a in (self_energy_consistency(z, alpha) for z in zs)]
    gate("self_energy_gap_slope", loglog_slope(zs, g_se), 1.7, 2.3)

    # rest-subtracted kinetic forms: the gaps sit 15+ digits below the rest
    # masses and vanish into rounding if totals are differenced directly
    ps_a = np.logspace(-3.0, -1.8, 9)
    g_a = [abs(kinetic_exact(p, 1.0, 1836.1526665)
               - kinetic_expansion_a(p, 1.0, 1836.1526665)) for p in ps_a]
    gate("expansion_gap_slope_unequal", loglog_slope(ps_a, g_a), 3.7, 4.3)

    ps_b = np.logspace(-2.0, -0.7, 9)
    g_b = [abs(kinetic_exact(p, 1.0, 1.0) - kinetic_expansion_b(p, 1.0))
           for p in ps_b]
    gate("expansion_gap_slope_equal", loglog_slope(ps_b, g_b), 5.7, 6.3)

    return checks
