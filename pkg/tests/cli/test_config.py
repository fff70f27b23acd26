# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Callable
from pathlib import Path

import pytest
from pydantic import ValidationError

from griffiths_sim.analysis.tail_fit import FitRangePolicy
from griffiths_sim.cli.config import load_config
from griffiths_sim.version import RunMode

QMC_BODY = """
    master_seed = 7

    [lattice]
    sizes = [4, 2]

    [grid]
    betas = [8.0]
    gammas = [1.5, 2.0]

    [run]
    workers = 2
"""


def test_defaults_and_sorted_sizes(write_config: Callable[[str], Path]) -> None:
    """Test that verifies the section defaults and that sizes are sorted."""
    config = load_config(write_config(QMC_BODY))
    assert config.mode is RunMode.QMC
    assert config.lattice.sizes == (2, 4)
    assert config.disorder.n_instances == 50
    assert config.run.chain_params().M == 64
    assert len(config.analysis.z_grid) == 15


def test_overrides_replace_file_values(write_config: Callable[[str], Path], tmp_path: Path) -> None:
    """Test that verifies the seed, output and worker overrides."""
    config = load_config(write_config(QMC_BODY), seed=11, out=tmp_path / "elsewhere", workers=4)
    assert config.master_seed == 11
    assert config.output.directory == tmp_path / "elsewhere"
    assert config.run.workers == 4


def test_digest_ignores_workers_and_output(write_config: Callable[[str], Path], tmp_path: Path) -> None:
    """Test that verifies that only result-relevant fields enter the configuration digest."""
    path = write_config(QMC_BODY)
    digest = load_config(path).digest()
    assert load_config(path, workers=8, out=tmp_path / "other").digest() == digest
    assert load_config(path, seed=8).digest() != digest


@pytest.mark.parametrize(
    ("body", "match"),
    [
        ("master_seed = 1\n[lattice]\nsizes = [2]\n", "qmc mode needs non-empty grid"),
        ('mode = "device-sim"\nmaster_seed = 1\n[lattice]\nsizes = [2]\n', "device-sim mode needs a non-empty grid.s_stars"),
        ("master_seed = 1\n[lattice]\nsizes = [2, 2]\n[grid]\nbetas = [1.0]\ngammas = [1.0]\n", "must be distinct"),
        ("master_seed = 1\n[lattice]\nsizes = [2]\n[grid]\ns_stars = [1.2]\nbetas = [1.0]\ngammas = [1.0]\n", "must lie in \\(0, 1\\)"),
        ("master_seed = 1\n[lattice]\nsizes = [2]\n[grid]\nbetas = [1.0]\ngammas = [1.0]\n[analysis]\nrecipes = [\"dfig17\"]\n", "needs device-sim data"),
        ("master_seed = 1\n[lattice]\nsizes = [2]\n[grid]\nbetas = [1.0]\ngammas = [1.0]\n[analysis]\nrecipes = [\"nope\"]\n", "unknown recipe"),
        ("master_seed = 1\n[lattice]\nsizes = [2]\n[grid]\nbetas = [1.0]\ngammas = [1.0]\n[run]\nsweeps = 10\n", "Extra inputs are not permitted"),
    ],
)
def test_invalid_configurations(write_config: Callable[[str], Path], body: str, match: str) -> None:
    """Test that verifies that invalid experiment files are rejected with the offending field."""
    with pytest.raises(ValidationError, match=match):
        _ = load_config(write_config(body))


def test_fit_policy_defaults_per_mode(write_config: Callable[[str], Path]) -> None:
    """Test that verifies the density floor defaults of the two run modes and an explicit override."""
    config = load_config(write_config(QMC_BODY))
    assert config.analysis.fit_policy(RunMode.QMC) == FitRangePolicy.qmc()
    assert config.analysis.fit_policy(RunMode.DEVICE_SIM) == FitRangePolicy.device()
    explicit = load_config(write_config(QMC_BODY + "\n[analysis]\ndensity_floor = 0.5\n"))
    assert explicit.analysis.fit_policy(RunMode.QMC).density_floor == 0.5


def test_collapse_box_follows_the_grid(write_config: Callable[[str], Path]) -> None:
    """Test that verifies that the x_c range defaults to the Γ range of the grid."""
    config = load_config(write_config(QMC_BODY))
    box = config.analysis.collapse_box(config.grid.gammas, (0.2, 3.0))
    assert box.x_c == (1.5, 2.0)
    assert box.exponent == (0.2, 3.0)
