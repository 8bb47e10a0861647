import math

import mpmath as mp
import pytest

from rdelamb.oracles import (
    ir_integral_check,
    loglog_slope,
    oracle_battery,
    self_energy_consistency,
    vertex_log_integral_closed,
    vertex_log_integral_numeric,
)


def test_battery_all_green(c):
    checks = oracle_battery(c.alpha)
    assert len(checks) == 8
    for chk in checks:
        assert chk["ok"], chk


def test_battery_frozen_measurements(c):
    by_name = {chk["name"]: chk["measured"] for chk in oracle_battery(c.alpha)}
    assert by_name["vertex_gap_constant"] == pytest.approx(0.8916, abs=5e-3)
    assert by_name["vertex_gap_slope"] == pytest.approx(1.833, abs=5e-3)
    assert by_name["ir_gap_slope"] == pytest.approx(1.987, abs=5e-3)
    assert by_name["self_energy_gap_slope"] == pytest.approx(1.883, abs=5e-3)
    assert by_name["expansion_gap_slope_unequal"] == pytest.approx(4.022, abs=5e-3)
    assert by_name["expansion_gap_slope_equal"] == pytest.approx(5.994, abs=5e-3)


def test_numeric_integral_against_independent_quadrature():
    # full 2-D quadrature in extended precision at one interior point
    zeta, q2r = 1e-3, 1e-3
    q2 = 4.0 * q2r
    with mp.workdps(30):
        ref = mp.quad(
            lambda u: mp.quad(
                lambda v: mp.log(((1 - zeta) + q2 / 4) * u * u + zeta * u
                                 - q2 / 4 * v * v),
                [-u, u]),
            [0, 1])
    ours = vertex_log_integral_numeric(zeta, q2r)
    assert ours == pytest.approx(float(ref), abs=1e-12)


def test_closed_form_is_close_at_small_parameters():
    zeta, q2r = 1e-4, 0.0
    gap = abs(vertex_log_integral_numeric(zeta, q2r)
              - vertex_log_integral_closed(zeta, q2r))
    assert gap < 1e-6


def test_numeric_domain():
    with pytest.raises(ValueError):
        vertex_log_integral_numeric(0.0, 0.0)
    with pytest.raises(ValueError):
        vertex_log_integral_numeric(0.2, 0.0)
    with pytest.raises(ValueError):
        vertex_log_integral_numeric(1e-3, 0.5)


def test_ir_check_values():
    exact, approx = ir_integral_check(1e-4, 1.0)
    assert exact == pytest.approx(math.log(1.0 + 1e4), rel=1e-15)
    assert abs(exact - approx) < 1e-7
    with pytest.raises(ValueError):
        ir_integral_check(0.0, 1.0)


def test_self_energy_consistency_pair(c):
    exact, approx = self_energy_consistency(1e-4, c.alpha)
    assert exact < 0.0 and approx < 0.0
    assert exact == pytest.approx(approx, rel=1e-3)


def test_slope_validation():
    assert loglog_slope((1.0, 2.0, 4.0), (1.0, 4.0, 16.0)) == pytest.approx(2.0, rel=1e-12)
    with pytest.raises(ValueError):
        loglog_slope((1.0,), (1.0,))
    with pytest.raises(ValueError):
        loglog_slope((1.0, -2.0), (1.0, 2.0))
