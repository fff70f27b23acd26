# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim.errors import UnknownDistributionError
from griffiths_sim.lattice.chimera import ChimeraGraph, build_diluted_chimera
from griffiths_sim.lattice.disorder import DisorderDistribution, DisorderInstance, sample_disorder


def test_sample_disorder_is_a_pure_function_of_the_seed(cell_graph: ChimeraGraph) -> None:
    """Test that verifies that the same seed draws the same couplings and another seed different ones."""
    first = sample_disorder(cell_graph, DisorderDistribution.QMC_SIX_LEVEL, seed=7)
    again = sample_disorder(cell_graph, DisorderDistribution.QMC_SIX_LEVEL, seed=7)
    large = build_diluted_chimera(4)
    assert first == again
    assert sample_disorder(large, DisorderDistribution.QMC_SIX_LEVEL, seed=7) != sample_disorder(large, DisorderDistribution.QMC_SIX_LEVEL, seed=8)


@pytest.mark.parametrize("distribution", list(DisorderDistribution))
def test_couplings_come_from_the_support(distribution: DisorderDistribution) -> None:
    """Test that verifies that every coupling takes one of the six values of the law."""
    instance = sample_disorder(build_diluted_chimera(4), distribution, seed=3)
    assert set(instance.couplings).issubset(set(distribution.support))
    assert len(distribution.support) == 6


def test_couplings_are_roughly_equiprobable() -> None:
    """Test that verifies that each level is drawn with probability close to 1/6."""
    instance = sample_disorder(build_diluted_chimera(12, "none"), DisorderDistribution.DWAVE_SIX_LEVEL, seed=11)
    _, counts = np.unique(instance.coupling_array(), return_counts=True)
    assert counts.size == 6
    assert np.all(np.abs(counts / counts.sum() - 1.0 / 6.0) < 0.03)


def test_unknown_distribution_fails(cell_graph: ChimeraGraph) -> None:
    """Test that verifies that an unknown distribution identifier raises the dedicated error."""
    with pytest.raises(UnknownDistributionError, match="unknown disorder distribution"):
        _ = sample_disorder(cell_graph, "gaussian", seed=1)


def test_instance_rejects_off_support_coupling(cell_instance: DisorderInstance) -> None:
    """Test that verifies that a coupling outside the support is rejected."""
    couplings = list(cell_instance.couplings)
    couplings[0] = -0.25
    with pytest.raises(ValidationError, match="is not in the support"):
        _ = DisorderInstance.model_validate({**cell_instance.model_dump(), "couplings": couplings})


def test_instance_rejects_wrong_coupling_count(cell_instance: DisorderInstance) -> None:
    """Test that verifies that one coupling per edge is required."""
    with pytest.raises(ValidationError, match="one per edge"):
        _ = DisorderInstance.model_validate({**cell_instance.model_dump(), "couplings": [0.0]})


def test_label_names_size_and_instance(small_instance: DisorderInstance) -> None:
    """Test that verifies the stable instance label."""
    assert small_instance.label == "L2-0003"
    assert small_instance.n_sites == 32
