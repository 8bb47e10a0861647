import json
import math
from fractions import Fraction

import pytest

from rdelamb import (
    REFERENCE_CASES,
    State,
    absolute_lamb_1s,
    atom,
    classic_lamb,
    evaluate_report,
    evaluate_transition,
    format_csv,
    format_json,
    format_table,
    last_digit_unit,
    level_breakdown,
    report_exit_code,
    within_printed,
)
from rdelamb.reference import case
from rdelamb.report import evaluate_case

_1S = State(1, 0, 1)
_2S = State(2, 0, 1)
_4D = State(4, 2, 5)


# -- printed-text comparison helpers ------------------------------------------

@pytest.mark.parametrize("text,unit", [
    ("2.466067984e15", 1e6),
    ("-2161.56", 1e-2),
    ("1.1008", 1e-4),
    ("0.0136167", 1e-7),
    ("63.39626e-5", 1e-10),
    ("4.514e6", 1e3),
    ("-6928.3", 1e-1),
])
def test_last_digit_unit(text, unit):
    assert last_digit_unit(text) == pytest.approx(unit, rel=1e-12)


def test_last_digit_unit_rejects_nonliterals():
    with pytest.raises(ValueError):
        last_digit_unit("1,057.845")
    with pytest.raises(ValueError):
        last_digit_unit("about 3")


def test_within_printed_uses_unit_floor():
    # gap below one unit in the last digit passes even past the relative gate
    assert within_printed(1.06502e-4 + 7e-10, "1.06502e-4", 1e-6)
    assert not within_printed(1.06502e-4 + 2e-9, "1.06502e-4", 1e-6)


# -- level breakdown -----------------------------------------------------------

def test_level_breakdown_total_is_compensated_sum(c):
    h = atom(c, "H")
    bd = level_breakdown(c, h, _2S, "S+V")
    parts = (bd.rde_hz, bd.recoil1_hz, bd.recoil2_hz, bd.rad_hz, bd.ns_hz)
    assert bd.total_hz == math.fsum(parts)
    assert bd.zeta_used == pytest.approx(3.856398233896e-4, rel=1e-11)
    d = bd.as_dict()
    assert set(d) >= {"atom", "state", "scheme", "zeta_used", "rde_hz",
                      "recoil1_hz", "recoil2_hz", "rad_hz", "ns_hz", "total_hz"}


def test_transition_channels_match_weighted_levels(c):
    h = atom(c, "H")
    terms = [(Fraction(1), h, _4D), (Fraction(-5, 4), h, _2S),
             (Fraction(1, 4), h, _1S)]
    res = evaluate_transition(c, terms, "S")
    d4 = level_breakdown(c, h, _4D, "S")
    s2 = level_breakdown(c, h, _2S, "S")
    s1 = level_breakdown(c, h, _1S, "S")
    manual = d4.rad_hz - 1.25 * s2.rad_hz + 0.25 * s1.rad_hz
    assert res.channels["rad_hz"] == pytest.approx(manual, rel=1e-13)
    assert res.channels["recoil2_hz"] == pytest.approx(d4.recoil2_hz, rel=0.0)
    assert res.total_hz == math.fsum(res.channels.values())


# -- composition anchors ----------------------------------------------------------

def test_classic_lamb_h_frozen(c):
    out = classic_lamb(c, "H", "S+V")
    assert out["total_hz"] == pytest.approx(1089793946.637865, rel=1e-12)
    assert out["recoil2_hz"] == pytest.approx(-2161.56054, rel=1e-8)


def test_classic_lamb_he_frozen(c):
    out = classic_lamb(c, "He+", "S+V")
    assert out["total_hz"] == pytest.approx(13953827672.9, rel=1e-9)


@pytest.mark.parametrize("scheme,expect", [
    ("S", 6054839820.5), ("V", 6453592795.8),
    ("S+V", 6121876059.4), ("SV", 6252891341.7),
])
def test_total_combo_4d_frozen(c, scheme, expect):
    r = evaluate_case(c, case(f"total_combo_4d_{scheme}"))
    assert r.ours == pytest.approx(expect, abs=1.0)


@pytest.mark.parametrize("scheme,expect", [
    ("S", 1674778497.5), ("V", 1621496160.6),
    ("S+V", 1663755513.9), ("SV", 1648143118.1),
])
def test_total_4d52_4s_frozen(c, scheme, expect):
    r = evaluate_case(c, case(f"total_4d52_4s_{scheme}"))
    assert r.ours == pytest.approx(expect, abs=1.0)


@pytest.mark.parametrize("scheme,expect", [
    ("S", 2466062858477152.5), ("V", 2466059459470908.0),
    ("S+V", 2466062234599735.0), ("SV", 2466061165014389.0),
])
def test_total_2s1s_frozen(c, scheme, expect):
    r = evaluate_case(c, case(f"total_h_2s1s_{scheme}"))
    assert r.ours == pytest.approx(expect, abs=2.0)


def test_total_isotope_frozen(c):
    r = evaluate_case(c, case("total_isotope_V"))
    assert r.ours == pytest.approx(670996695235.5, abs=1.0)


@pytest.mark.parametrize("scheme,expect_mhz", [
    ("S", 1041.044845), ("V", 1040.909074),
    ("S+V", 1040.984057), ("SV", 1040.936085),
])
def test_lamb_2s_anchored_frozen(c, scheme, expect_mhz):
    out = absolute_lamb_1s(c, scheme)
    assert out["lamb_2s_hz"] / 1e6 == pytest.approx(expect_mhz, abs=1e-5)
    # reference quotes 1040.901 MHz for this anchor construction
    assert out["lamb_2s_hz"] == pytest.approx(1040.901e6, rel=5e-4)


@pytest.mark.parametrize("scheme,expect_mhz", [
    ("S", 8153.5402), ("V", 8152.8578), ("S+V", 8153.2347), ("SV", 8152.9936),
])
def test_lamb_1s_empirical_frozen(c, scheme, expect_mhz):
    out = absolute_lamb_1s(c, scheme)
    assert out["empirical_hz"] / 1e6 == pytest.approx(expect_mhz, abs=1e-3)


@pytest.mark.xfail(strict=True,
                   reason="reference empirical 1S value inherits the "
                          "internally inconsistent combination anchor")
def test_lamb_1s_reference(c):
    out = absolute_lamb_1s(c, "S+V")
    assert out["empirical_hz"] == pytest.approx(8188.478e6, rel=5e-4)


@pytest.mark.xfail(strict=True,
                   reason="reference composite 3.92395 GHz disagrees with its "
                          "own parts; the direct-splitting cross-check pins the "
                          "offset to the reference value")
def test_combo_4s_reference(c):
    r = evaluate_case(c, case("rde_combo_4s"))
    assert r.ours == pytest.approx(3.92395e9, rel=1e-5)


# -- report table ------------------------------------------------------------------

def test_report_no_unflagged_failures(c):
    results = evaluate_report(c)
    assert len(results) == len(REFERENCE_CASES) == 80
    bad = [r for r in results if not r.ok and not r.flagged]
    assert bad == []
    assert report_exit_code(results) == 0
    assert report_exit_code(results, strict=True) == 1


def test_flagged_rows_all_carry_notes(c):
    for row in REFERENCE_CASES:
        if row.flagged:
            assert row.note


def test_report_scheme_filter(c):
    only_v = evaluate_report(c, "V")
    assert all(r.scheme in ("-", "V") for r in only_v)
    assert any(r.scheme == "V" for r in only_v)
    assert len(only_v) < len(evaluate_report(c))


def test_report_formats(c):
    results = evaluate_report(c, "V")
    table = format_table(results)
    assert table.splitlines()[0].startswith("case")
    csv_text = format_csv(results)
    assert csv_text.splitlines()[0].startswith("case,group,scheme")
    assert len(csv_text.splitlines()) == len(results) + 1
    payload = json.loads(format_json(results))
    assert len(payload) == len(results)
    assert {"key", "status", "rel_gap"} <= set(payload[0])


def test_case_lookup():
    assert case("classic_lamb_h").experiment_key == "H_classic_lamb"
    with pytest.raises(KeyError):
        case("nope")
