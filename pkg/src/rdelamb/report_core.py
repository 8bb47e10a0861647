"""Level breakdowns and the transition/Lamb-shift compositions built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constants import Atom, PhysicalConstants, atom, experiment
from .corrections import nuclear_size_hz, recoil1_hz, recoil2_hz
from .dirac import rde_level_hz
from .radiative import rad_level_hz
from .states import State
from .zeta import zeta

CHANNELS = ("rde_hz", "recoil1_hz", "recoil2_hz", "rad_hz", "ns_hz")


@dataclass(frozen=True)
class LevelBreakdown:
    atom: str
    state: str
    scheme: str
    zeta_used: float
    rde_hz: float
    recoil1_hz: float
    recoil2_hz: float
    rad_hz: float
    ns_hz: float

    @property
    def total_hz(self) -> float:
        return math.fsum((self.rde_hz, self.recoil1_hz, self.recoil2_hz,
                          self.rad_hz, self.ns_hz))

    def as_dict(self) -> dict:
        d = {"atom": self.atom, "state": self.state, "scheme": self.scheme,
             "zeta_used": self.zeta_used}
        for ch in CHANNELS:
            d[ch] = getattr(self, ch)
        d["total_hz"] = self.total_hz
        return d


def level_breakdown(c: PhysicalConstants, a: Atom, state: State,
                    scheme: str = "S+V") -> LevelBreakdown:
    """All energy contributions of one bound level, in Hz."""
    z = zeta(scheme, c.alpha, a.z, state.n)
    return LevelBreakdown(
        atom=a.label,
        state=state.label,
        scheme=scheme,
        zeta_used=z,
        rde_hz=rde_level_hz(c, a, state),
        recoil1_hz=recoil1_hz(c, a, state),
        recoil2_hz=recoil2_hz(c, a, state),
        rad_hz=rad_level_hz(c, a, state, scheme),
        ns_hz=nuclear_size_hz(c, a, state),
    )


@dataclass(frozen=True)
class TransitionResult:
    scheme: str
    channels: dict
    total_hz: float


def evaluate_transition(c: PhysicalConstants,
                        terms: Sequence[tuple[Fraction, Atom, State]],
                        scheme: str = "S+V") -> TransitionResult:
    """Signed rational combination of levels, channel by channel.

    Each channel is compensated-summed over the terms, and the total over
    the channels, so the result is bit-reproducible for a given term order.
    """
    parts = [(float(coeff), level_breakdown(c, a, st, scheme))
             for coeff, a, st in terms]
    channels = {ch: math.fsum(w * getattr(bd, ch) for w, bd in parts)
                for ch in CHANNELS}
    total = math.fsum(channels[ch] for ch in CHANNELS)
    return TransitionResult(scheme=scheme, channels=channels, total_hz=total)


def classic_lamb(c: PhysicalConstants, atom_label: str,
                 scheme: str = "S+V") -> dict:
    """2S-2P(1/2) splitting: radiative difference, 2S size shift, and the
    fine-structure recoil of the 2P level entering with a minus sign."""
    a = atom(c, atom_label)
    s2 = State(2, 0, 1)
    p2 = State(2, 1, 1)
    rad = rad_level_hz(c, a, s2, scheme) - rad_level_hz(c, a, p2, scheme)
    ns = nuclear_size_hz(c, a, s2)
    rec2 = -recoil2_hz(c, a, p2)
    return {
        "atom": a.label,
        "scheme": scheme,
        "rad_hz": rad,
        "ns_hz": ns,
        "recoil2_hz": rec2,
        "total_hz": math.fsum((rad, ns, rec2)),
    }


def absolute_lamb_1s(c: PhysicalConstants, scheme: str = "S+V") -> dict:
    """Empirical 1S Lamb shift of hydrogen and its direct theoretical value.

    The 2S shift is anchored to the measured 2S-2P splitting; the 1S shift
    then follows from the measured (4D5/2)-(5/4)(2S)+(1/4)(1S) combination
    after stripping the non-Lamb contributions of that combination.
    """
    a = atom(c, "H")
    s1 = State(1, 0, 1)
    s2 = State(2, 0, 1)
    p2 = State(2, 1, 1)
    d4 = State(4, 2, 5)

    lamb_2p = rad_level_hz(c, a, p2, scheme)
    lamb_2s = math.fsum((experiment("H_classic_lamb").value_hz,
                         recoil2_hz(c, a, p2), lamb_2p))

    combo = ((Fraction(1), a, d4), (Fraction(-5, 4), a, s2), (Fraction(1, 4), a, s1))
    res = evaluate_transition(c, combo, scheme)
    lamb_4d = rad_level_hz(c, a, d4, scheme)

    # measured combo = non-Lamb combo parts + L(4D) - (5/4)L(2S) + (1/4)L(1S)
    empirical = 4.0 * math.fsum((
        experiment("H_4D52_combo").value_hz,
        -res.channels["rde_hz"],
        -res.channels["recoil1_hz"],
        -res.channels["recoil2_hz"],
        1.25 * lamb_2s,
        -lamb_4d,
    ))
    theoretical = rad_level_hz(c, a, s1, scheme) + nuclear_size_hz(c, a, s1)
    return {
        "scheme": scheme,
        "lamb_2s_hz": lamb_2s,
        "lamb_2p_hz": lamb_2p,
        "lamb_4d52_hz": lamb_4d,
        "empirical_hz": empirical,
        "theoretical_hz": theoretical,
    }


__all__ = ["CHANNELS", "LevelBreakdown", "TransitionResult", "level_breakdown",
           "evaluate_transition", "classic_lamb", "absolute_lamb_1s"]
