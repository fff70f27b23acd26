# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import pytest

from griffiths_sim.errors import FitError
from griffiths_sim.verification import CHECKS, Check, Level, run_battery
from griffiths_sim.verification.checks import (
    check_calibration_efficacy,
    check_collapse_and_z_scan,
    check_device_consistency,
    check_device_peaks,
    check_exponent_recovery,
    check_oracle_equivalence,
    check_schedule_mapping,
    check_stationarity,
)


def _passing(level: Level) -> tuple[bool, str, dict[str, float]]:
    return True, f"ran at {level}", {"value": 1.0}


def _raising(level: Level) -> tuple[bool, str, dict[str, float]]:
    del level
    msg = "no usable bins"
    raise FitError(msg)


def test_battery_reports_raising_checks_as_failed() -> None:
    """Test that verifies that a check that raises fails without stopping the battery."""
    checks = (Check("ok", frozenset(Level), _passing), Check("broken", frozenset(Level), _raising))
    battery = run_battery(Level.QUICK, checks)
    assert not battery.passed
    assert battery.failed == ["broken"]
    assert battery.results[0].measured == {"value": 1.0}
    assert battery.results[1].detail == "FitError: no usable bins"


def test_full_only_checks_are_skipped_at_quick_level() -> None:
    """Test that verifies the level filter."""
    checks = (Check("quick", frozenset(Level), _passing), Check("long", frozenset({Level.FULL}), _passing))
    assert [result.name for result in run_battery("quick", checks).results] == ["quick"]
    assert [result.name for result in run_battery("full", checks).results] == ["quick", "long"]


def test_battery_names_are_unique() -> None:
    """Test that verifies that every check of the battery has its own name."""
    names = [check.name for check in CHECKS]
    assert len(names) == len(set(names))


def test_schedule_mapping_check() -> None:
    """Test that verifies that the bundled schedule reproduces the anchor pause point."""
    passed, detail, measured = check_schedule_mapping(Level.QUICK)
    assert passed, detail
    assert measured["beta"] == pytest.approx(2.49, abs=0.01)


def test_exponent_recovery_check() -> None:
    """Test that verifies that every planted d/z′ is recovered to within ten percent."""
    _, _, measured = check_exponent_recovery(Level.QUICK)
    assert len(measured) == 6
    for key, value in measured.items():
        planted = float(key.split("_")[-1])
        assert value == pytest.approx(planted, rel=0.1), key


@pytest.mark.slow
def test_collapse_and_z_scan_check() -> None:
    """Test that verifies the collapse and z-scan check on its planted data."""
    passed, detail, measured = check_collapse_and_z_scan(Level.QUICK)
    assert passed, detail
    assert measured["z_star"] == pytest.approx(1.0)


def test_quick_level_runs_every_acceptance_check() -> None:
    """Test that verifies that only the long QMC trend run is reserved for the full level."""
    quick = {check.name for check in CHECKS if Level.QUICK in check.levels}
    assert {check.name for check in CHECKS} - quick == {"griffiths-trend"}
    assert "device-peaks" in quick


@pytest.mark.slow
def test_calibration_efficacy_check() -> None:
    """Test that verifies that calibration centres every qubit of a default, quenched device."""
    passed, detail, measured = check_calibration_efficacy(Level.QUICK)
    assert passed, detail
    assert measured["max_after"] < 0.05


def test_device_consistency_check() -> None:
    """Test that verifies that the field-sweep χ of a noiseless cell matches its Kubo value."""
    passed, detail, measured = check_device_consistency(Level.QUICK)
    assert passed, detail
    assert measured["chi"] > 0.0


@pytest.mark.slow
def test_stationarity_check() -> None:
    """Test that verifies that the path sampler reproduces the exact path distribution."""
    passed, detail, _ = check_stationarity(Level.QUICK)
    assert passed, detail


@pytest.mark.slow
def test_oracle_equivalence_check() -> None:
    """Test that verifies that QMC moments of one cell agree with the exact integrals."""
    passed, detail, measured = check_oracle_equivalence(Level.QUICK)
    assert passed, detail
    assert measured["worst_ratio"] <= 1.0


@pytest.mark.slow
def test_device_peaks_check() -> None:
    """Test that verifies that the reduced device sweep extrapolates the peaks to an s_c inside the window."""
    passed, detail, measured = check_device_peaks(Level.QUICK)
    assert passed, detail
    assert measured
    assert all(0.0 < value < 1.0 for value in measured.values())
