"""HTTP service exposing the calculator; the CLI is a thin client of this."""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from ..appendix import (
    PINNED_P4_COEFFICIENT,
    anomaly_beta,
    b2_in_observed_units,
    noncov_classic_lamb_hz,
    noncov_coefficients,
)
from ..constants import PhysicalConstants, atom, atoms, pinned_constants, reference_experiments
from ..oracles import oracle_battery
from ..report import evaluate_report, report_exit_code
from ..report_core import absolute_lamb_1s, classic_lamb, evaluate_transition, level_breakdown
from ..states import parse_state
from ..twobody import TwoBodySystem, coulomb_epsilon, strong_coupling_zmax, total_energy
from ..zeta import zeta_table
from . import models


def create_app(constants: PhysicalConstants | None = None) -> FastAPI:
    c = constants if constants is not None else pinned_constants()
    app = FastAPI(title="hydrogenlike level and Lamb-shift calculator")

    def _atom(label: str):
        try:
            return atom(c, label)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc

    def _state(text: str):
        try:
            return parse_state(text)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.get("/constants", response_model=models.ConstantsResponse)
    def get_constants():
        return models.ConstantsResponse(
            constants=dataclasses.asdict(c),
            atoms=[dataclasses.asdict(a) for a in atoms(c).values()],
            experiments=[models.ExperimentModel(**dataclasses.asdict(e))
                         for e in reference_experiments()],
        )

    @app.post("/level", response_model=models.LevelResponse)
    def post_level(req: models.LevelRequest):
        bd = level_breakdown(c, _atom(req.atom), _state(req.state), req.scheme)
        return models.LevelResponse(**bd.as_dict())

    @app.post("/transition", response_model=models.TransitionResponse)
    def post_transition(req: models.TransitionRequest):
        try:
            terms = [(Fraction(t.coeff), _atom(t.atom), _state(t.state))
                     for t in req.terms]
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=422, detail=f"bad coefficient: {exc}") from exc
        res = evaluate_transition(c, terms, req.scheme)
        return models.TransitionResponse(scheme=res.scheme, total_hz=res.total_hz,
                                         **res.channels)

    @app.post("/lamb")
    def post_lamb(req: models.LambRequest):
        if req.kind == "classic":
            return models.ClassicLambResponse(**classic_lamb(c, _atom(req.atom).label,
                                                             req.scheme))
        if req.atom not in ("H", "h"):
            raise HTTPException(status_code=422,
                                detail="the absolute 1S anchor chain is defined for H only")
        return models.Absolute1sResponse(**absolute_lamb_1s(c, req.scheme))

    @app.get("/table1", response_model=list[models.Table1Row])
    def get_table1():
        rows = []
        for row in zeta_table(c.alpha):
            rows.append(models.Table1Row(
                ratio=row["ratio"],
                zeta_S=row["zeta_S"], minus_ln_S=row["minus_ln_S"],
                zeta_V=row["zeta_V"], minus_ln_V=row["minus_ln_V"],
                zeta_SplusV=row["zeta_S+V"], minus_ln_SplusV=row["minus_ln_S+V"],
                zeta_SV=row["zeta_SV"], minus_ln_SV=row["minus_ln_SV"],
            ))
        return rows

    @app.post("/report", response_model=models.ReportResponse)
    def post_report(req: models.ReportRequest):
        results = evaluate_report(c, req.scheme)
        return models.ReportResponse(
            cases=[models.ReportCase(**{**r.as_dict(), "ours_hz": r.ours}) for r in results],
            exit_code=report_exit_code(results, req.strict),
        )

    @app.get("/appendix", response_model=models.AppendixResponse)
    def get_appendix():
        mu_h = c.m_e_hz / (1.0 + c.b_H)
        route = noncov_classic_lamb_hz(c)
        return models.AppendixResponse(
            beta=anomaly_beta(c),
            mu_obs_over_mu=noncov_coefficients(c, mu_h).mu_obs_over_mu,
            b2_observed_units=b2_in_observed_units(c, mu_h),
            p4_coefficient=PINNED_P4_COEFFICIENT,
            p4_hz=route["p4_hz"],
            vacuum_polarization_hz=route["vacuum_polarization_hz"],
            nuclear_size_hz=route["nuclear_size_hz"],
            total_hz=route["total_hz"],
        )

    @app.get("/oracle", response_model=list[models.OracleCheck])
    def get_oracle():
        return [models.OracleCheck(**chk) for chk in oracle_battery(c.alpha)]

    @app.post("/twobody", response_model=models.TwoBodyResponse)
    def post_twobody(req: models.TwoBodyRequest):
        try:
            system = TwoBodySystem(m1=req.m1, m2=req.m2, z_eff=req.z_eff)
            eps = coulomb_epsilon(system, req.n, c.alpha)
            energy, binding = total_energy(system, eps)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return models.TwoBodyResponse(
            reduced_mass=system.reduced_mass,
            total_mass=system.total_mass,
            epsilon=eps,
            total_energy=energy,
            binding_energy=binding,
            z_max=strong_coupling_zmax(c.alpha),
        )

    return app


__all__ = ["create_app"]
