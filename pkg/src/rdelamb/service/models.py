"""Request and response shapes for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Scheme = Literal["S", "V", "S+V", "SV"]
SchemeOrAll = Literal["S", "V", "S+V", "SV", "all"]


class LevelRequest(BaseModel):
    atom: str = "H"
    state: str = "2S"
    scheme: Scheme = "S+V"


class LevelResponse(BaseModel):
    atom: str
    state: str
    scheme: str
    zeta_used: float
    rde_hz: float
    recoil1_hz: float
    recoil2_hz: float
    rad_hz: float
    ns_hz: float
    total_hz: float


class TransitionTerm(BaseModel):
    coeff: str = Field(description="exact rational weight, e.g. '-5/4'")
    atom: str = "H"
    state: str


class TransitionRequest(BaseModel):
    terms: list[TransitionTerm]
    scheme: Scheme = "S+V"


class TransitionResponse(BaseModel):
    scheme: str
    rde_hz: float
    recoil1_hz: float
    recoil2_hz: float
    rad_hz: float
    ns_hz: float
    total_hz: float


class LambRequest(BaseModel):
    kind: Literal["classic", "1s"] = "classic"
    atom: str = "H"
    scheme: Scheme = "S+V"


class ClassicLambResponse(BaseModel):
    atom: str
    scheme: str
    rad_hz: float
    ns_hz: float
    recoil2_hz: float
    total_hz: float


class Absolute1sResponse(BaseModel):
    scheme: str
    lamb_2s_hz: float
    lamb_2p_hz: float
    lamb_4d52_hz: float
    empirical_hz: float
    theoretical_hz: float


class Table1Row(BaseModel):
    ratio: str
    zeta_S: float
    minus_ln_S: float
    zeta_V: float
    minus_ln_V: float
    zeta_SplusV: float
    minus_ln_SplusV: float
    zeta_SV: float
    minus_ln_SV: float


class ReportRequest(BaseModel):
    scheme: SchemeOrAll = "all"
    strict: bool = False


class ReportCase(BaseModel):
    key: str
    group: str
    description: str
    scheme: str
    ours_hz: float
    reference_hz: float
    reference_text: str
    rel_gap: float
    rel_tol: float
    status: str
    note: str
    experiment_key: str


class ReportResponse(BaseModel):
    cases: list[ReportCase]
    exit_code: int


class AppendixResponse(BaseModel):
    beta: float
    mu_obs_over_mu: float
    b2_observed_units: float
    p4_coefficient: float
    p4_hz: float
    vacuum_polarization_hz: float
    nuclear_size_hz: float
    total_hz: float


class OracleCheck(BaseModel):
    name: str
    measured: float
    lo: float
    hi: float
    ok: bool


class TwoBodyRequest(BaseModel):
    m1: float = 1.0
    m2: float = 1.0
    z_eff: float = Field(default=1.0, description="charge product Z1*Z2")
    n: int = 1


class TwoBodyResponse(BaseModel):
    reduced_mass: float
    total_mass: float
    epsilon: float
    total_energy: float
    binding_energy: float
    z_max: float


class ExperimentModel(BaseModel):
    key: str
    value_hz: float
    uncertainty_hz: float
    note: str


class ConstantsResponse(BaseModel):
    constants: dict
    atoms: list[dict]
    experiments: list[ExperimentModel]


__all__ = [name for name in dir() if name[0].isupper()]
