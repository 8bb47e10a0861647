"""Infrared scale zeta entering the one-loop radiative level shift.

The off-mass-shell treatment leaves one dimensionless scale zeta (how far
off shell the bound electron sits) that the one-loop theory does not fix
uniquely.  Two independent determinations are implemented:

  S  - self-consistency of the mass increment with the Coulomb binding,
       the root of  zeta (1 - 2 ln zeta) = 2 pi (1 + alpha/3pi) Z^2 alpha / n^2;
  V  - virial share of the potential energy,  zeta = 2 Z^2 alpha^2 / n^2;

plus their arithmetic mean (S+V) and geometric mean (SV).  All four depend
on (Z, n) only through Z^2/n^2, so values are cached on that exact rational.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from functools import lru_cache

from scipy.optimize import brentq

SCHEMES = ("S", "V", "S+V", "SV")

# zeta (1 - 2 ln zeta) increases from 0 on (0, e^-1/2); physical roots sit
# near 1e-4..4e-3, so a fixed bracket suffices for any Z^2/n^2 <= 4.
_BRACKET = (1e-16, 0.5)


def _scheme_key(scheme: str) -> str:
    s = scheme.strip().upper()
    if s in ("S", "V", "SV"):
        return s
    if s in ("S+V", "A", "AM"):
        return "S+V"
    raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")


@lru_cache(maxsize=None)
def _zeta_s_cached(num: int, den: int, alpha: float) -> float:
    target = 2.0 * math.pi * (1.0 + alpha / (3.0 * math.pi)) * alpha * (num / den)
    lo, hi = _BRACKET
    fn = lambda z: z * (1.0 - 2.0 * math.log(z)) - target
    assert fn(lo) < 0.0 < fn(hi), "target escaped the monotone bracket"
    return brentq(fn, lo, hi, xtol=1e-300, rtol=4 * sys.float_info.epsilon)


def zeta_self_energy(c_alpha: float, z: int, n: int) -> float:
    """Scheme S root for nuclear charge z and principal number n."""
    if z < 1 or n < 1:
        raise ValueError("z and n must be positive integers")
    ratio = Fraction(z * z, n * n)
    return _zeta_s_cached(ratio.numerator, ratio.denominator, c_alpha)


def zeta_virial(c_alpha: float, z: int, n: int) -> float:
    """Scheme V value 2 Z^2 alpha^2 / n^2, exact."""
    if z < 1 or n < 1:
        raise ValueError("z and n must be positive integers")
    ratio = Fraction(z * z, n * n)
    return 2.0 * c_alpha * c_alpha * float(ratio)


def zeta(scheme: str, c_alpha: float, z: int, n: int) -> float:
    key = _scheme_key(scheme)
    if key == "S":
        return zeta_self_energy(c_alpha, z, n)
    if key == "V":
        return zeta_virial(c_alpha, z, n)
    zs = zeta_self_energy(c_alpha, z, n)
    zv = zeta_virial(c_alpha, z, n)
    if key == "S+V":
        return 0.5 * (zs + zv)
    return math.sqrt(zs * zv)


def zeta_table(c_alpha: float,
               ratios: tuple[Fraction, ...] = (Fraction(1, 16), Fraction(1, 4), Fraction(1, 1)),
               ) -> list[dict[str, float | str]]:
    """One row per Z^2/n^2 ratio: zeta and -ln zeta for all four schemes."""
    rows: list[dict[str, float | str]] = []
    for fr in ratios:
        zs = _zeta_s_cached(fr.numerator, fr.denominator, c_alpha)
        zv = 2.0 * c_alpha * c_alpha * float(fr)
        za = 0.5 * (zs + zv)
        zg = math.sqrt(zs * zv)
        row: dict[str, float | str] = {"ratio": f"{fr}"}
        for name, val in (("S", zs), ("V", zv), ("S+V", za), ("SV", zg)):
            row[f"zeta_{name}"] = val
            row[f"minus_ln_{name}"] = -math.log(val)
        rows.append(row)
    return rows
