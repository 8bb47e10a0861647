"""Pinned physical constants and measured transition anchors.

Every energy in this package is a frequency in Hz (an energy E is stored as
E/h).  The constant set is deliberately frozen to the published values the
reference results were computed with, not to current CODATA: the package's
job is digit-level reproduction, and silently upgrading a constant would
shift every comparison.  A config file can override individual fields for
exploratory runs.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    alpha_inverse: float = 137.03599944    # 1/alpha
    m_e_hz: float = 1.2355897e20           # electron rest energy m_e c^2/h, Hz
    rydberg_inf_hz: float = 3.28984124e15  # R_inf c, Hz
    b_H: float = 5.446170255e-4            # m_e/m_p
    b_D: float = 2.724436319e-4            # m_e/m_d
    b_He: float = 1.371e-4                 # m_e/m_alpha
    r_p_fm: float = 0.862                  # proton charge radius, fm
    r_d_fm: float = 2.115                  # deuteron charge radius, fm
    r_alpha_fm: float = 1.2                # alpha-particle charge radius, fm
    bohr_radius_ref: float = 5.2917725     # Bohr radius in units of 1e4 fm
    g_electron: float = 2 * 1.0011596522   # electron gyromagnetic ratio

    def __post_init__(self) -> None:
        if self.alpha_inverse <= 1.0:
            raise ValueError("alpha_inverse must exceed 1")
        if self.m_e_hz <= 0.0 or self.rydberg_inf_hz <= 0.0:
            raise ValueError("masses and Rydberg must be positive")
        for name in ("b_H", "b_D", "b_He"):
            b = getattr(self, name)
            if not 0.0 < b < 1.0:
                raise ValueError(f"{name} must lie in (0, 1)")
        for name in ("r_p_fm", "r_d_fm", "r_alpha_fm"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be nonnegative")

    @property
    def alpha(self) -> float:
        return 1.0 / self.alpha_inverse


@dataclass(frozen=True)
class Atom:
    """A hydrogenlike system: one electron bound to a pointlike-from-afar nucleus."""

    label: str
    z: int           # nuclear charge number
    b: float         # m_e/m_N
    r_n_fm: float    # nuclear charge radius, fm

    def __post_init__(self) -> None:
        if self.z < 1:
            raise ValueError("z must be a positive integer")
        if not 0.0 < self.b < 1.0:
            raise ValueError("mass ratio b must lie in (0, 1)")
        if self.r_n_fm < 0.0:
            raise ValueError("nuclear radius must be nonnegative")


_PINNED = PhysicalConstants()


def pinned_constants() -> PhysicalConstants:
    """The frozen constant set used for all reference comparisons."""
    return _PINNED


def load_constants(path: str) -> PhysicalConstants:
    """Read a JSON object of field overrides; absent keys keep pinned values.

    Unknown keys are rejected so a typo cannot silently leave a constant
    at its default.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("constants file must hold a JSON object")
    known = {f.name for f in dataclasses.fields(PhysicalConstants)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"unknown constant keys: {', '.join(unknown)}")
    return PhysicalConstants(**data)


def atoms(c: PhysicalConstants) -> dict[str, Atom]:
    """The three systems with embedded reference data, keyed by label."""
    return {
        "H": Atom("H", 1, c.b_H, c.r_p_fm),
        "D": Atom("D", 1, c.b_D, c.r_d_fm),
        "He+": Atom("He+", 2, c.b_He, c.r_alpha_fm),
    }


def atom(c: PhysicalConstants, label: str) -> Atom:
    table = atoms(c)
    key = label.strip()
    if key in table:
        return table[key]
    # tolerate case differences and a trailing + on helium
    for k in table:
        if k.lower() == key.lower():
            return table[k]
    raise KeyError(f"unknown atom {label!r}; known: {', '.join(table)}")


@dataclass(frozen=True)
class ExperimentRecord:
    """A measured frequency used as a comparison anchor, normalized to Hz."""

    key: str
    value_hz: float
    uncertainty_hz: float  # 0.0 when the source quotes none
    note: str

    def __post_init__(self) -> None:
        if not self.value_hz == self.value_hz:  # NaN guard
            raise ValueError("value_hz must be finite")
        if self.uncertainty_hz < 0.0:
            raise ValueError("uncertainty_hz must be nonnegative")


_EXPERIMENTS = (
    ExperimentRecord("H_1S2S", 2.46606141318734e15, 8.4e2,
                     "measured H 1S-2S interval"),
    ExperimentRecord("HD_isotope_2S1S", 6.70994337e11, 2.2e4,
                     "measured D-H 1S-2S isotope shift"),
    ExperimentRecord("H_classic_lamb", 1.057845e9, 0.0,
                     "measured H 2S-2P(1/2) splitting"),
    ExperimentRecord("He_classic_lamb", 1.404113e10, 1.7e5,
                     "measured He+ 2S-2P(1/2) splitting"),
    ExperimentRecord("H_4S_combo", 4.797338e9, 1.0e4,
                     "measured H E(4S) - 5/4 E(2S) + 1/4 E(1S)"),
    ExperimentRecord("H_4D52_combo", 6.490144e9, 2.4e4,
                     "measured H E(4D5/2) - 5/4 E(2S) + 1/4 E(1S)"),
    ExperimentRecord("H_4D52_4S", 1.692806e9, 0.0,
                     "measured H E(4D5/2) - E(4S), difference of the combos"),
    ExperimentRecord("H_1S_lamb", 8.172874e9, 6.0e4,
                     "measured H 1S Lamb shift"),
    ExperimentRecord("H_1S_lamb_theory", 8.172754e9, 3.5e4,
                     "published H 1S Lamb shift prediction"),
)


def reference_experiments() -> tuple[ExperimentRecord, ...]:
    return _EXPERIMENTS


def experiment(key: str) -> ExperimentRecord:
    for rec in _EXPERIMENTS:
        if rec.key == key:
            return rec
    raise KeyError(f"unknown experiment key {key!r}")
