import math

import pytest

from rdelamb import (
    State,
    atom,
    contact_coefficient,
    rad_level_hz,
    reduced_mass_hz,
    s_state_bracket,
    s_state_density,
    vacuum_polarization_level_hz,
    vacuum_polarization_z3,
    vertex_parts,
    zeta,
)
from rdelamb.vertex import assembled_s_shift_hz, s_bracket_identity_gap

_2S = State(2, 0, 1)


def test_parts_at_mean_scheme_root(c):
    zt = zeta("S+V", c.alpha, 1, 2)
    parts = vertex_parts(zt)
    assert parts.anomaly_factor == pytest.approx(0.995094, abs=5e-7)
    assert parts.q2_coefficient == pytest.approx(-10.320012, abs=5e-6)
    assert parts.z1_inverse_bracket == pytest.approx(-25.955709, abs=5e-6)


def test_anomaly_factor_tends_to_one():
    assert vertex_parts(1e-12).anomaly_factor == pytest.approx(1.0, abs=1e-10)


def test_thomson_limit(c):
    assert vacuum_polarization_z3(0.0, c.alpha) == 1.0
    # spacelike momentum transfer reduces the screening
    assert vacuum_polarization_z3(0.1, c.alpha) < 1.0


def test_contact_coefficient_is_half_s_bracket():
    for zt in (1e-5, 1e-4, 7.446539696573e-4, 1e-2):
        assert 2.0 * contact_coefficient(zt) == pytest.approx(
            s_state_bracket(zt), rel=1e-15)
        assert s_bracket_identity_gap(zt) <= 5e-16  # one ulp of association


def test_contact_coefficient_positive_for_table_roots(c):
    for z, n in ((1, 4), (1, 2), (1, 1)):
        for scheme in ("S", "V", "S+V", "SV"):
            assert contact_coefficient(zeta(scheme, c.alpha, z, n)) > 0.0


def test_s_state_density(c):
    h = atom(c, "H")
    mu = reduced_mass_hz(c, h)
    expect = (c.alpha * mu) ** 3 / (math.pi * 8.0)
    assert s_state_density(1, 2, mu, c.alpha) == pytest.approx(expect, rel=1e-15)


def test_assembled_matches_level_shift(c):
    h = atom(c, "H")
    zt = zeta("S", c.alpha, 1, 2)
    assembled = assembled_s_shift_hz(c, h, 2, zt)
    direct = rad_level_hz(c, h, _2S, "S")
    assert assembled == pytest.approx(direct, rel=1e-9)


def test_uehling_2s_frozen(c):
    h = atom(c, "H")
    val = vacuum_polarization_level_hz(c, h, 2, 0)
    assert val == pytest.approx(-27113983.9280, rel=1e-9)
    assert vacuum_polarization_level_hz(c, h, 2, 1) == 0.0


def test_uehling_scaling(c):
    h = atom(c, "H")
    r = vacuum_polarization_level_hz(c, h, 1, 0) / vacuum_polarization_level_hz(c, h, 2, 0)
    assert r == pytest.approx(8.0, rel=1e-12)
