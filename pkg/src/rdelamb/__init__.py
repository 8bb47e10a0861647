"""Hydrogenlike energy levels and Lamb shifts from the reduced Dirac equation
with off-mass-shell one-loop radiative corrections."""

from .constants import (
    Atom,
    ExperimentRecord,
    PhysicalConstants,
    atom,
    atoms,
    experiment,
    load_constants,
    pinned_constants,
    reference_experiments,
)
from .states import State, parse_state
from .dirac import (
    dirac_f,
    dirac_f_minus_one,
    dirac_f_series,
    dirac_f_series_minus_one,
    rde_level_hz,
    rde_transition_hz,
    reduced_mass_hz,
)
from .corrections import nuclear_size_hz, recoil1_hz, recoil2_hz
from .zeta import SCHEMES, zeta, zeta_self_energy, zeta_table, zeta_virial
from .selfenergy import SelfEnergyTerms, delta_mu_approx, self_energy_terms
from .radiative import ls_bracket, rad_level_hz, rad_level_shift_hz, s_state_bracket
from .vertex import (
    VertexParts,
    contact_coefficient,
    s_state_density,
    uehling_delta_coefficient,
    vacuum_polarization_level_hz,
    vacuum_polarization_z3,
    vertex_parts,
)
from .appendix import (
    PINNED_P4_COEFFICIENT,
    NoncovCoefficients,
    anomaly_beta,
    b2_in_observed_units,
    noncov_classic_lamb_hz,
    noncov_coefficients,
    noncov_rad_shift_hz,
    p4_bracket,
)
from .twobody import (
    TwoBodySystem,
    coulomb_epsilon,
    strong_coupling_zmax,
    total_energy,
    two_particle_energy_check,
)
from .report_core import (
    LevelBreakdown,
    TransitionResult,
    absolute_lamb_1s,
    classic_lamb,
    evaluate_transition,
    level_breakdown,
)
from .reference import REFERENCE_CASES, ReferenceCase
from .report import (
    CaseResult,
    evaluate_report,
    format_csv,
    format_json,
    format_table,
    last_digit_unit,
    report_exit_code,
    within_printed,
)

__version__ = "0.1.0"

__all__ = [
    "Atom", "ExperimentRecord", "PhysicalConstants", "atom", "atoms",
    "experiment", "load_constants", "pinned_constants", "reference_experiments",
    "State", "parse_state",
    "dirac_f", "dirac_f_minus_one", "dirac_f_series",
    "dirac_f_series_minus_one", "rde_level_hz",
    "rde_transition_hz", "reduced_mass_hz",
    "nuclear_size_hz", "recoil1_hz", "recoil2_hz",
    "SCHEMES", "zeta", "zeta_self_energy", "zeta_table", "zeta_virial",
    "SelfEnergyTerms", "delta_mu_approx", "self_energy_terms",
    "ls_bracket", "rad_level_hz", "rad_level_shift_hz", "s_state_bracket",
    "VertexParts", "contact_coefficient", "s_state_density",
    "uehling_delta_coefficient", "vacuum_polarization_level_hz",
    "vacuum_polarization_z3", "vertex_parts",
    "PINNED_P4_COEFFICIENT", "NoncovCoefficients", "anomaly_beta",
    "b2_in_observed_units", "noncov_classic_lamb_hz", "noncov_coefficients",
    "noncov_rad_shift_hz", "p4_bracket",
    "TwoBodySystem", "coulomb_epsilon", "strong_coupling_zmax", "total_energy",
    "two_particle_energy_check",
    "LevelBreakdown", "TransitionResult", "absolute_lamb_1s", "classic_lamb",
    "evaluate_transition", "level_breakdown",
    "REFERENCE_CASES", "ReferenceCase",
    "CaseResult", "evaluate_report", "format_csv", "format_json", "format_table",
    "last_digit_unit", "report_exit_code", "within_printed",
    "__version__",
]
