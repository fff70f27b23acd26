# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim.annealer.protocol import ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.schedule import Schedule, ScheduleNode
from griffiths_sim.annealer.schedule_files import load_schedule_csv


def test_bundled_schedule_passes_through_the_anchor(schedule: Schedule) -> None:
    """Test that verifies A(0.386) = 1.71 GHz and B(0.386) = 2.49 GHz."""
    a, b = schedule.amplitudes(0.386)
    assert a == pytest.approx(1.71)
    assert b == pytest.approx(2.49)
    assert schedule.s_range == (0.0, 1.0)


def test_anchor_maps_to_qmc_units(schedule: Schedule) -> None:
    """Test that verifies β ≈ 2.49 and Γ ≈ 1.37 at the anchor pause point and 12 mK."""
    beta, gamma = map_s_to_beta_gamma(schedule, 0.386)
    assert beta == pytest.approx(2.49, abs=0.01)
    assert gamma == pytest.approx(2.0 * 1.71 / 2.49)


def test_mapping_is_monotone(schedule: Schedule) -> None:
    """Test that verifies that β grows and Γ shrinks along the anneal."""
    points = [map_s_to_beta_gamma(schedule, s) for s in np.linspace(0.2, 0.8, 25)]
    betas, gammas = np.array(points).T
    assert np.all(np.diff(betas) > 0.0)
    assert np.all(np.diff(gammas) < 0.0)


def test_colder_chip_has_larger_beta(schedule: Schedule) -> None:
    """Test that verifies that β scales as 1/T."""
    warm, _ = map_s_to_beta_gamma(schedule, 0.4, temperature_k=0.024)
    cold, _ = map_s_to_beta_gamma(schedule, 0.4, temperature_k=0.012)
    assert cold == pytest.approx(2.0 * warm)
    with pytest.raises(ValueError, match="temperature must be positive"):
        _ = map_s_to_beta_gamma(schedule, 0.4, temperature_k=0.0)


def test_outside_the_table_fails(schedule: Schedule) -> None:
    """Test that verifies that s outside the tabulated range is refused."""
    with pytest.raises(ValueError, match="outside the schedule range"):
        _ = Schedule(nodes=schedule.nodes[:5]).amplitudes(0.5)


@pytest.mark.parametrize(
    ("rows", "match"),
    [
        ([(0.0, 1.0, 0.0)], "at least two nodes"),
        ([(0.5, 1.0, 0.0), (0.5, 0.5, 1.0)], "strictly increasing"),
        ([(0.0, 1.0, 0.0), (1.0, 2.0, 1.0)], "A\\(s\\) must be non-increasing"),
        ([(0.0, 1.0, 1.0), (1.0, 0.0, 0.5)], "B\\(s\\) must be non-decreasing"),
    ],
)
def test_schedule_validation(rows: list[tuple[float, float, float]], match: str) -> None:
    """Test that verifies the node count, ordering and monotonicity checks."""
    with pytest.raises(ValidationError, match=match):
        _ = Schedule(nodes=tuple(ScheduleNode(s=s, a_ghz=a, b_ghz=b) for s, a, b in rows))


def test_load_schedule_csv(tmp_path: Path) -> None:
    """Test that verifies that a schedule file is read and interpolated monotonically between its nodes."""
    path = tmp_path / "schedule.csv"
    path.write_text("s,A_GHz,B_GHz\n0.0,4.0,0.0\n0.5,1.0,2.0\n1.0,0.0,6.0\n", encoding="utf-8")
    schedule = load_schedule_csv(path)
    a, b = schedule.amplitudes(0.25)
    assert 1.0 <= a <= 4.0
    assert 0.0 <= b <= 2.0


def test_schedule_csv_with_wrong_columns_fails(tmp_path: Path) -> None:
    """Test that verifies that a table without the expected columns is reported."""
    path = tmp_path / "schedule.csv"
    path.write_text("s,A\n0.0,1.0\n", encoding="utf-8")
    with pytest.raises(ExceptionGroup, match="Schedule validation errors occurred"):
        _ = load_schedule_csv(path)


def test_protocol_times() -> None:
    """Test that verifies the end of the anneal, the pause and the quench."""
    protocol = ProtocolParams(s_star=0.386)
    assert protocol.t1 == pytest.approx(386.0)
    assert protocol.t2 == pytest.approx(486.0)
    assert protocol.tf == pytest.approx(486.614)
    assert protocol.at(0.5).s_star == 0.5
    assert protocol.at(0.5).pause_us == protocol.pause_us
    with pytest.raises(ValidationError, match="less than 1"):
        _ = protocol.at(1.0)
