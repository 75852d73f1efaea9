import math

import pytest

from iskp.calibration import (
    DELTA_REFERENCE,
    FIELD_REFERENCE,
    Calibration,
    calibrate_delta,
    calibrate_field,
    load_profile,
    run_calibration,
    solve_w,
)
from iskp.spectrum import FieldConfig
from iskp.units import lookup_molecule


def test_default_profile_is_reproducible():
    fresh = run_calibration()
    packaged = load_profile("default")
    assert fresh.delta_mode == packaged.delta_mode
    assert fresh.omega_form == packaged.omega_form
    assert fresh.w_star == pytest.approx(packaged.w_star, rel=1e-10)
    assert fresh.eta_over_hbar == pytest.approx(packaged.eta_over_hbar, rel=1e-10)


def test_reproduction_profile_is_reproducible():
    packaged = load_profile("reproduction")
    w, eta, _ = calibrate_field(packaged.delta_mode, packaged.omega_form)
    assert w == pytest.approx(packaged.w_star, rel=1e-10)
    assert eta == pytest.approx(packaged.eta_over_hbar, rel=1e-10)


def test_delta_candidates_residuals():
    mode, res = calibrate_delta()
    assert mode == "zero"
    assert set(res) == {"zero", "alpha"}
    assert abs(res["zero"]) < abs(res["alpha"])
    mode, res = calibrate_delta(("zero", "alpha", "re"), omega_form="tables")
    assert mode == "re" and abs(res["re"]) < 1e-6


@pytest.mark.parametrize("profile", ["default", "reproduction"])
def test_field_root_hits_target(profile):
    cal = load_profile(profile)
    s = cal.spectrum(lookup_molecule("H2"), -1, FieldConfig(w=cal.w_star))
    assert s.energy(0, 0).E == pytest.approx(FIELD_REFERENCE, abs=1e-10)
    assert cal.field(lookup_molecule("H2"), 2.0, 0.0).w == pytest.approx(cal.w_star, rel=1e-12)


def test_roots_come_in_pairs():
    cal = load_profile("reproduction")
    roots = solve_w(cal.spectrum(lookup_molecule("H2"), -1), FIELD_REFERENCE)
    for r in roots:
        assert any(math.isclose(-r, q, rel_tol=1e-8) for q in roots)


def test_json_round_trip(tmp_path):
    cal = load_profile("default")
    assert Calibration.from_json(cal.to_json()) == cal
    path = tmp_path / "c.json"
    cal.save(path)
    assert load_profile(str(path)) == cal


def test_bad_profile_rejected():
    with pytest.raises(ValueError):
        Calibration.from_json('{"omega_form": "curly"}')
    with pytest.raises(OSError):
        load_profile("/nonexistent/calibration.json")


def test_reference_constants():
    assert DELTA_REFERENCE == -0.013053
    assert FIELD_REFERENCE == -0.013854
