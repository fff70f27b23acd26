# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import json

import pandas as pd
import pytest

from griffiths_sim.cli.config import ExperimentConfig
from griffiths_sim.persistence.layout import OutputLayout
from griffiths_sim.recipes import RecipeContext, RecipeRegistry, write_recipe_output
from griffiths_sim.recipes.qmc import TailSource, far_gamma, focus_beta, near_gamma


def test_focus_and_control_values_default_to_the_grid(qmc_config: ExperimentConfig) -> None:
    """Test that verifies the default focus β, far Γ and near Γ."""
    context = RecipeContext(qmc_config)
    assert focus_beta(context) == 4.0
    assert far_gamma(context) == 2.0
    assert near_gamma(context) == 1.5


def test_binder_crossing_recipe(qmc_config: ExperimentConfig) -> None:
    """Test that verifies the −ln(1 − g) curves and their single crossing."""
    output = RecipeRegistry.get_recipe("fig2a").run(RecipeContext(qmc_config))
    crossings = output.summary["crossings"]
    assert len(crossings) == 1
    assert crossings[0]["L_small"] == 2
    assert crossings[0]["L_large"] == 4
    assert 1.0 < crossings[0]["x"] < 1.5
    assert {point.series for point in output.points} == {"L=2", "L=4"}
    assert len(output.estimates) == 6


def test_local_histogram_recipe_recovers_the_tail(qmc_config: ExperimentConfig) -> None:
    """Test that verifies the χ_loc histogram, its tail fit and d/z′ at the far Γ."""
    output = RecipeRegistry.get_recipe("fig4").run(RecipeContext(qmc_config))
    assert output.summary["gamma"] == 2.0
    estimate = output.summary[TailSource.CHI_LOC]["estimate"]
    assert estimate["d_over_zprime"] == pytest.approx(2.0, abs=0.3)
    assert estimate["control"] == 2.0
    assert set(output.summary[TailSource.CHI_LOC]["fits"]) == {"2", "4"}


def test_recipe_output_files(qmc_config: ExperimentConfig) -> None:
    """Test that verifies the figure table, the estimates table and the JSON summary."""
    layout = OutputLayout(qmc_config.output.directory)
    output = RecipeRegistry.get_recipe("fig2a").run(RecipeContext(qmc_config))
    paths = write_recipe_output(layout, "fig2a", output, qmc_config.provenance())
    assert [path.name for path in paths] == ["fig2a.csv", "fig2a_estimates.csv", "fig2a.json"]
    table = pd.read_csv(paths[0])
    assert list(table.columns) == ["recipe", "series", "x", "y", "y_err"]
    assert len(table) == len(output.points)
    document = json.loads(paths[2].read_text(encoding="utf-8"))
    assert document["recipe"] == "fig2a"
    assert document["provenance"]["config_digest"] == qmc_config.digest()


def test_missing_record_logs(qmc_config: ExperimentConfig, tmp_path_factory: pytest.TempPathFactory) -> None:
    """Test that verifies that a recipe without record logs reports where it looked."""
    empty = qmc_config.model_copy(update={"output": qmc_config.output.model_copy(update={"directory": tmp_path_factory.mktemp("empty")})})
    with pytest.raises(FileNotFoundError, match="no qmc record logs"):
        _ = RecipeRegistry.get_recipe("fig2a").run(RecipeContext(empty))
