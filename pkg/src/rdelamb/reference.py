"""Reference case table: every published number the package reproduces.

Each case binds a computed quantity to the published decimal text, a
relative tolerance, and a flag.  Flagged cases are documented discrepancies
in the published values themselves (rounding in intermediate constants,
formula slips, internally inconsistent composites); they are reported with
their measured gap but do not fail a default report run.  Composition signs
live here, in the term lists, and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .constants import PhysicalConstants, atom, experiment
from .corrections import recoil2_hz
from .states import State, parse_state
from .report_core import (
    classic_lamb,
    evaluate_transition,
    absolute_lamb_1s,
)
from .appendix import anomaly_beta, b2_in_observed_units, noncov_classic_lamb_hz
from .radiative import rad_level_hz

SCHEME_ORDER = ("S", "V", "S+V", "SV")

_1S = State(1, 0, 1)
_2S = State(2, 0, 1)
_4S = State(4, 0, 1)
_2P = State(2, 1, 1)
_4D = State(4, 2, 5)

# (coefficient, atom label, state) term lists; coefficients exact rationals
_COMBO_4S = ((Fraction(1), "H", _4S), (Fraction(-5, 4), "H", _2S), (Fraction(1, 4), "H", _1S))
_COMBO_4D = ((Fraction(1), "H", _4D), (Fraction(-5, 4), "H", _2S), (Fraction(1, 4), "H", _1S))
_SPLIT_4D_4S = ((Fraction(1), "H", _4D), (Fraction(-1), "H", _4S))
_H_2S_1S = ((Fraction(1), "H", _2S), (Fraction(-1), "H", _1S))
_H_2S_2P = ((Fraction(1), "H", _2S), (Fraction(-1), "H", _2P))
_HE_2S_2P = ((Fraction(1), "He+", _2S), (Fraction(-1), "He+", _2P))
_ISOTOPE = ((Fraction(1), "D", _2S), (Fraction(-1), "D", _1S),
            (Fraction(-1), "H", _2S), (Fraction(1), "H", _1S))


@dataclass(frozen=True)
class ReferenceCase:
    key: str
    group: str
    description: str
    scheme: str | None
    printed: str           # decimal text of the reference value (Hz unless noted)
    rel_tol: float
    compute: Callable[[PhysicalConstants], float]
    flagged: bool = False
    note: str = ""
    experiment_key: str | None = None


def _terms(c: PhysicalConstants, raw_terms) -> list[tuple[Fraction, object, State]]:
    return [(coeff, atom(c, label), st) for coeff, label, st in raw_terms]


def _channel(terms, channel: str, scheme: str = "S+V") -> Callable[[PhysicalConstants], float]:
    def f(c: PhysicalConstants, _t=terms, _ch=channel, _s=scheme) -> float:
        return evaluate_transition(c, _terms(c, _t), _s).channels[_ch]
    return f


def _total(terms, scheme: str) -> Callable[[PhysicalConstants], float]:
    def f(c: PhysicalConstants, _t=terms, _s=scheme) -> float:
        return evaluate_transition(c, _terms(c, _t), _s).total_hz
    return f


def _rad(terms, scheme: str) -> Callable[[PhysicalConstants], float]:
    return _channel(terms, "rad_hz", scheme)


def _cases() -> tuple[ReferenceCase, ...]:
    rows: list[ReferenceCase] = []
    add = rows.append

    rounding_note = "reference value carries rounding of the relativistic factor difference"
    combo_note = ("reference composite is internally inconsistent: its own parts imply a "
                  "different direct splitting; a shared rounding offset sits in the "
                  "-(5/4)(2S)+(1/4)(1S) piece")

    # -- baseline level scale ------------------------------------------------
    add(ReferenceCase(
        "rde_h_2s1s", "baseline", "H 2S-1S level difference, relativistic reduced-mass value",
        None, "2.466067984e15", 1e-9,
        _channel(_H_2S_1S, "rde_hz"), flagged=True, note=rounding_note,
        experiment_key="H_1S2S"))
    add(ReferenceCase(
        "reduced_mass_factor_dh", "baseline", "difference of reduced-mass factors, D minus H",
        None, "2.719511528e-4", 1e-9,
        lambda c: 1.0 / (1.0 + c.b_D) - 1.0 / (1.0 + c.b_H)))
    add(ReferenceCase(
        "rde_isotope_2s1s", "baseline", "D-H isotope shift of the 2S-1S difference",
        None, "6.7101527879e11", 1e-9,
        _channel(_ISOTOPE, "rde_hz"), flagged=True, note=rounding_note,
        experiment_key="HD_isotope_2S1S"))
    add(ReferenceCase(
        "recoil1_isotope_2s1s", "baseline", "D-H isotope shift of the leading recoil",
        None, "-11.176e6", 1e-3,
        _channel(_ISOTOPE, "recoil1_hz"), flagged=True,
        note="reference evaluated only the leading order in the mass ratios"))

    # -- classic 2S-2P splitting, hydrogen ------------------------------------
    add(ReferenceCase(
        "recoil2_h_2s2p", "classic_lamb_h", "H 2S-2P(1/2) fine-structure recoil",
        None, "-2161.56", 1e-3, _channel(_H_2S_2P, "recoil2_hz")))
    add(ReferenceCase(
        "ns_h_2s", "classic_lamb_h", "H 2S nuclear-size shift",
        None, "0.14525347e6", 1e-5, _channel(_H_2S_2P, "ns_hz")))
    printed_h_2s2p = {"S": "1000.6567e6", "V": "1451.7912e6",
                      "S+V": "1089.6513e6", "SV": "1226.0871e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_h_2s2p_{sch}", "classic_lamb_h", "H 2S-2P(1/2) radiative splitting",
            sch, printed_h_2s2p[sch], 1e-4, _rad(_H_2S_2P, sch)))
    add(ReferenceCase(
        "classic_lamb_h", "classic_lamb_h", "H 2S-2P(1/2) splitting, all terms",
        "S+V", "1089.794e6", 1e-4,
        lambda c: classic_lamb(c, "H", "S+V")["total_hz"],
        experiment_key="H_classic_lamb"))

    # -- classic 2S-2P splitting, He+ -----------------------------------------
    printed_he = {"S": "1.252680693e10", "V": "2.023083608e10",
                  "S+V": "1.369980830e10", "SV": "1.636521214e10"}
    he_note = "reference cell not reproducible from the stated scheme definition"
    for sch in SCHEME_ORDER:
        bad = sch in ("S", "S+V")
        add(ReferenceCase(
            f"rad_he_2s2p_{sch}", "classic_lamb_he", "He+ 2S-2P(1/2) radiative splitting",
            sch, printed_he[sch], 1e-4, _rad(_HE_2S_2P, sch),
            flagged=bad, note=he_note if bad else ""))
    add(ReferenceCase(
        "recoil2_he_2s2p", "classic_lamb_he", "He+ 2S-2P(1/2) fine-structure recoil",
        None, "-2.165e3", 1e-3, _channel(_HE_2S_2P, "recoil2_hz"),
        flagged=True, note="reference rounds the mass-ratio chain"))
    add(ReferenceCase(
        "ns_he_2s", "classic_lamb_he", "He+ 2S nuclear-size shift",
        None, "4.514e6", 1e-5, _channel(_HE_2S_2P, "ns_hz"),
        flagged=True,
        note="reference not reproducible from the stated radius; ours sits 0.1% below"))
    add(ReferenceCase(
        "classic_lamb_he", "classic_lamb_he", "He+ 2S-2P(1/2) splitting, all terms",
        "S+V", "13704.220e6", 2e-4,
        lambda c: classic_lamb(c, "He+", "S+V")["total_hz"],
        flagged=True, note="inherits the mean-scheme cell above",
        experiment_key="He_classic_lamb"))

    # -- 4S combination --------------------------------------------------------
    add(ReferenceCase(
        "rde_combo_4s", "combo_4s", "H (4S) - 5/4(2S) + 1/4(1S), reduced-mass value",
        None, "3.92395e9", 1e-5, _channel(_COMBO_4S, "rde_hz"),
        flagged=True, note=combo_note, experiment_key="H_4S_combo"))
    add(ReferenceCase(
        "recoil1_combo_4s", "combo_4s", "H 4S combination, leading recoil",
        None, "-4.186e6", 1e-3, _channel(_COMBO_4S, "recoil1_hz")))
    printed_130 = {"S": "451.229097e6", "V": "903.266275e6",
                   "S+V": "529.288296e6", "SV": "675.907131e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_combo_4s_{sch}", "combo_4s", "H 4S combination, radiative part",
            sch, printed_130[sch], 2e-4, _rad(_COMBO_4S, sch)))
    add(ReferenceCase(
        "ns_combo_4s", "combo_4s", "H 4S combination, nuclear size",
        None, "0.1270967854e6", 1e-5, _channel(_COMBO_4S, "ns_hz")))
    printed_132 = {"S": "4371.120197e6", "V": "4823.1574e6",
                   "S+V": "4449.179396e6", "SV": "4595.798231e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"total_combo_4s_{sch}", "combo_4s", "H 4S combination, all terms",
            sch, printed_132[sch], 1e-4, _total(_COMBO_4S, sch),
            flagged=True, note=combo_note, experiment_key="H_4S_combo"))

    # -- 4D(5/2) combination ----------------------------------------------------
    add(ReferenceCase(
        "rde_combo_4d", "combo_4d", "H (4D5/2) - 5/4(2S) + 1/4(1S), reduced-mass value",
        None, "5.74792e9", 1e-4, _channel(_COMBO_4D, "rde_hz"),
        flagged=True, note=combo_note, experiment_key="H_4D52_combo"))
    add(ReferenceCase(
        "recoil1_combo_4d", "combo_4d", "H 4D5/2 combination, leading recoil",
        None, "-4.18611e6", 1e-4, _channel(_COMBO_4D, "recoil1_hz")))
    add(ReferenceCase(
        "recoil2_h_4d52", "combo_4d", "H 4D5/2 fine-structure recoil",
        None, "-6928.3", 1e-3, _channel(_COMBO_4D, "recoil2_hz"),
        flagged=True,
        note="reference evaluated a form missing the 1/(2 n^3) and mass-ratio factors"))
    printed_137 = {"S": "302.088631e6", "V": "700.843464e6",
                   "S+V": "369.124660e6", "SV": "500.131264e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_combo_4d_{sch}", "combo_4d", "H 4D5/2 combination, radiative part",
            sch, printed_137[sch], 2e-4, _rad(_COMBO_4D, sch)))
    add(ReferenceCase(
        "ns_combo_4d", "combo_4d", "H 4D5/2 combination, nuclear size",
        None, "0.10894e6", 1e-5, _channel(_COMBO_4D, "ns_hz")))
    printed_139 = {"S": "6045.925e6", "V": "6444.679e6",
                   "S+V": "6112.961e6", "SV": "6243.967e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"total_combo_4d_{sch}", "combo_4d", "H 4D5/2 combination, all terms",
            sch, printed_139[sch], 2e-4, _total(_COMBO_4D, sch),
            flagged=True, note=combo_note, experiment_key="H_4D52_combo"))

    # -- 4D(5/2) minus 4S direct splitting --------------------------------------
    add(ReferenceCase(
        "rde_4d52_4s", "split_4d_4s", "H 4D5/2 - 4S, reduced-mass value",
        None, "1.823886903e9", 1e-4, _channel(_SPLIT_4D_4S, "rde_hz"),
        experiment_key="H_4D52_4S"))
    add(ReferenceCase(
        "recoil1_4d52_4s", "split_4d_4s", "H 4D5/2 - 4S, leading recoil",
        None, "1.1008", 1e-3, _channel(_SPLIT_4D_4S, "recoil1_hz"),
        flagged=True, note="reference value is 2/3 of the defining expression"))
    add(ReferenceCase(
        "recoil2_4d52_4s", "split_4d_4s", "H 4D5/2 - 4S, fine-structure recoil",
        None, "-6928.3", 1e-3, _channel(_SPLIT_4D_4S, "recoil2_hz"),
        flagged=True,
        note="reference evaluated a form missing the 1/(2 n^3) and mass-ratio factors"))
    add(ReferenceCase(
        "ns_4d52_4s", "split_4d_4s", "H 4D5/2 - 4S, nuclear size",
        None, "-0.0181605862e6", 1e-5, _channel(_SPLIT_4D_4S, "ns_hz"),
        flagged=True, note="digit transposition in the reference value"))
    printed_145 = {"S": "-149.1404661e6", "V": "-202.4228107e6",
                   "S+V": "-160.1636366e6", "SV": "-175.7758676e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_4d52_4s_{sch}", "split_4d_4s", "H 4D5/2 - 4S, radiative part",
            sch, printed_145[sch], 2e-4, _rad(_SPLIT_4D_4S, sch)))
    printed_149 = {"S": "1674.721349e6", "V": "1621.439105e6",
                   "S+V": "1663.716339e6", "SV": "1648.104108e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"total_4d52_4s_{sch}", "split_4d_4s", "H 4D5/2 - 4S, all terms",
            sch, printed_149[sch], 2e-4, _total(_SPLIT_4D_4S, sch),
            experiment_key="H_4D52_4S"))

    # -- absolute 2S-1S ----------------------------------------------------------
    add(ReferenceCase(
        "recoil1_h_2s1s", "absolute_1s2s", "H 2S-1S, leading recoil",
        None, "22.32598676e6", 1e-5, _channel(_H_2S_1S, "recoil1_hz")))
    printed_153 = {"S": "-5142.081146e6", "V": "-8541.095068e6",
                   "S+V": "-5765.958928e6", "SV": "-6835.535314e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_h_2s1s_{sch}", "absolute_1s2s", "H 2S-1S, radiative part",
            sch, printed_153[sch], 1e-4, _rad(_H_2S_1S, sch)))
    add(ReferenceCase(
        "ns_h_2s1s", "absolute_1s2s", "H 2S-1S, nuclear size",
        None, "-1.016774283e6", 1e-5, _channel(_H_2S_1S, "ns_hz")))
    printed_155 = {"S": "2.466062836e15", "V": "2.466059464e15",
                   "S+V": "2.466062239e15", "SV": "2.466061169e15"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"total_h_2s1s_{sch}", "absolute_1s2s", "H 2S-1S, all terms",
            sch, printed_155[sch], 1e-7, _total(_H_2S_1S, sch),
            experiment_key="H_1S2S"))

    # -- D-H isotope shift ---------------------------------------------------------
    printed_159 = {"S": "-1.399158e6", "V": "-2.324028e6",
                   "S+V": "-1.568915e6", "SV": "-1.859945e6"}
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"rad_isotope_{sch}", "isotope", "D-H 2S-1S isotope shift, radiative part",
            sch, printed_159[sch], 2e-4, _rad(_ISOTOPE, sch)))
    add(ReferenceCase(
        "ns_isotope", "isotope", "D-H 2S-1S isotope shift, nuclear size",
        None, "-5.11384949e6", 1e-5, _channel(_ISOTOPE, "ns_hz"),
        flagged=True, note="reference not reproducible from the stated radii"))
    add(ReferenceCase(
        "total_isotope_V", "isotope", "D-H 2S-1S isotope shift, all terms",
        "V", "6.709966701e11", 1e-7, _total(_ISOTOPE, "V"),
        experiment_key="HD_isotope_2S1S"))

    # -- absolute Lamb shifts ---------------------------------------------------------
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"lamb_h_2s_{sch}", "absolute_lamb", "H 2S Lamb shift, anchored to the measured splitting",
            sch, "1040.901e6", 5e-4,
            lambda c, _s=sch: absolute_lamb_1s(c, _s)["lamb_2s_hz"]))
    for sch in SCHEME_ORDER:
        add(ReferenceCase(
            f"lamb_h_1s_{sch}", "absolute_lamb", "H 1S Lamb shift, empirical composition",
            sch, "8188.478e6", 5e-4,
            lambda c, _s=sch: absolute_lamb_1s(c, _s)["empirical_hz"],
            flagged=True, note=combo_note, experiment_key="H_1S_lamb"))

    # -- noncovariant recomputation ------------------------------------------------------
    add(ReferenceCase(
        "noncov_beta", "appendix", "mass-shift parameter beta (dimensionless)",
        None, "0.0136167", 1e-4, lambda c: anomaly_beta(c)))
    add(ReferenceCase(
        "noncov_b2", "appendix", "renormalized p^4 coefficient in observed-mass units (dimensionless)",
        None, "1.99808", 3e-2,
        lambda c: b2_in_observed_units(c, c.m_e_hz / (1.0 + c.b_H))))
    add(ReferenceCase(
        "noncov_classic_lamb", "appendix", "H 2S-2P(1/2) splitting, noncovariant route",
        None, "1056.52e6", 5e-3, lambda c: noncov_classic_lamb_hz(c)["total_hz"]))

    return tuple(rows)


REFERENCE_CASES: tuple[ReferenceCase, ...] = _cases()


def recoil2_level_hz(c: PhysicalConstants, label: str, state: State) -> float:
    """Convenience for the sign-sensitive single-level recoil values."""
    return recoil2_hz(c, atom(c, label), state)


def case(key: str) -> ReferenceCase:
    for row in REFERENCE_CASES:
        if row.key == key:
            return row
    raise KeyError(f"unknown reference case {key!r}")


__all__ = ["ReferenceCase", "REFERENCE_CASES", "SCHEME_ORDER", "case",
           "recoil2_level_hz", "parse_state"]
