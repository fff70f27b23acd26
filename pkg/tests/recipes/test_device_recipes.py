# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from pathlib import Path

import numpy as np
import pytest

from griffiths_sim.annealer.apq import DeviceMomentRecord, MagnetizationLog
from griffiths_sim.annealer.calibration import CalibrationCheck
from griffiths_sim.cli.config import ExperimentConfig
from griffiths_sim.persistence.layout import OutputLayout, RecordKind
from griffiths_sim.persistence.record_log import write_record_log
from griffiths_sim.recipes import RecipeContext, RecipeRegistry

S_STARS = (0.3, 0.4, 0.5)


@pytest.fixture
def device_config(tmp_path: Path) -> ExperimentConfig:
    return ExperimentConfig.model_validate(
        {
            "mode": "device-sim",
            "master_seed": 2,
            "lattice": {"sizes": [2, 4]},
            "grid": {"s_stars": list(S_STARS)},
            "output": {"directory": str(tmp_path / "out")},
        },
    )


def _write(config: ExperimentConfig, kind: RecordKind, L: int, records: list) -> None:  # type: ignore[type-arg]
    write_record_log(OutputLayout(config.output.directory).record_log(kind, L), records, config.provenance())


def _moments(L: int, s_star: float, index: int, m4: float) -> DeviceMomentRecord:
    return DeviceMomentRecord.model_validate(
        {
            "instance": f"L{L}-{index:04d}",
            "L": L,
            "s_star": s_star,
            "beta": 2.0,
            "gamma": 1.0,
            "n_rep": 100,
            "m": 0.0,
            "m_abs": 0.3,
            "m2": 0.2,
            "m4": m4,
            "site_means": [0.0] * 8,
        },
    )


def test_device_binder_recipe(device_config: ExperimentConfig) -> None:
    """Test that verifies the device Binder and magnetization curves against s*."""
    for L in (2, 4):
        _write(device_config, RecordKind.DEVICE, L, [_moments(L, s, k, 0.05 + 0.01 * k) for s in S_STARS for k in range(3)])
    output = RecipeRegistry.get_recipe("dfig17").run(RecipeContext(device_config))
    assert {point.series for point in output.points} == {"g L=2", "g L=4", "|m| L=2", "|m| L=4"}
    assert len(output.estimates) == 2 * 2 * len(S_STARS)
    binder = [estimate for estimate in output.estimates if estimate.observable == "binder"]
    assert binder[0].value == pytest.approx(0.5 * (3.0 - 0.06 / 0.04))
    assert all(estimate.s_star in S_STARS for estimate in output.estimates)


def test_magnetization_heat_map_counts_saturated_runs(device_config: ExperimentConfig) -> None:
    """Test that verifies the per-s* histograms and the saturated fraction."""
    logs = [
        MagnetizationLog.model_validate({"instance": "L2-0000", "L": 2, "s_star": 0.3, "magnetizations": [1.0, -1.0, 0.0, 0.5]}),
        MagnetizationLog.model_validate({"instance": "L2-0000", "L": 2, "s_star": 0.5, "magnetizations": [0.1, -0.1]}),
    ]
    _write(device_config, RecordKind.MAGNETIZATION, 2, logs)
    output = RecipeRegistry.get_recipe("dfig15").run(RecipeContext(device_config))
    assert output.summary["saturated_fraction"] == {"2": {"0.3": 0.5, "0.5": 0.0}}
    assert {point.series for point in output.points} == {"L=2 s*=0.3", "L=2 s*=0.5"}


def test_calibration_contrast(device_config: ExperimentConfig) -> None:
    """Test that verifies the before and after fractions of the calibration contrast."""
    check = CalibrationCheck.model_validate({"instance": "L2-0000", "L": 2, "s_star": 0.6, "before": [0.3, -0.2, 0.05, 0.0], "after": [0.01, -0.02, 0.0, 0.06]})
    _write(device_config, RecordKind.CALIBRATION, 2, [check])
    output = RecipeRegistry.get_recipe("dfig26").run(RecipeContext(device_config))
    assert output.summary["n_qubits"] == 4
    assert output.summary["fraction_before_above"] == 0.5
    assert output.summary["fraction_after_above"] == 0.25
    assert output.summary["max_abs_after"] == pytest.approx(0.06)
    assert np.count_nonzero([point.series == "after" for point in output.points]) == 4
