# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Shared fixtures: small lattices and instances, the bundled schedule and experiment files."""

import logging
import textwrap
from collections.abc import Callable
from pathlib import Path

import pytest

from griffiths_sim.annealer.device import DeviceFactory, DeviceModel
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.annealer.schedule_files import bundled_schedule
from griffiths_sim.lattice.chimera import ChimeraGraph, build_diluted_chimera
from griffiths_sim.lattice.disorder import DisorderDistribution, DisorderInstance, sample_disorder

logging.basicConfig(level=logging.DEBUG)


@pytest.fixture
def cell_graph() -> ChimeraGraph:
    """A single diluted unit cell, 8 sites."""
    return build_diluted_chimera(1)


@pytest.fixture
def cell_instance(cell_graph: ChimeraGraph) -> DisorderInstance:
    return sample_disorder(cell_graph, DisorderDistribution.QMC_SIX_LEVEL, seed=1234)


@pytest.fixture
def free_instance(cell_graph: ChimeraGraph) -> DisorderInstance:
    """A one-cell instance with every coupling zero, so that its sites are independent."""
    return DisorderInstance(graph=cell_graph, couplings=[0.0] * cell_graph.n_edges, seed=0, distribution_id=DisorderDistribution.QMC_SIX_LEVEL)


@pytest.fixture
def small_instance() -> DisorderInstance:
    """A 2x2-cell instance, 32 sites."""
    return sample_disorder(build_diluted_chimera(2), DisorderDistribution.QMC_SIX_LEVEL, seed=99, instance_id=3)


@pytest.fixture(scope="session")
def schedule() -> Schedule:
    return bundled_schedule()


@pytest.fixture
def noiseless_device(cell_instance: DisorderInstance) -> DeviceModel:
    """A one-cell device without intrinsic biases and without quench."""
    return DeviceFactory.create(cell_instance, seed=5, bias_half_width=0.0, quench_strength=0.0)


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[[str], Path]:
    """Write an experiment file whose output directory lies inside ``tmp_path``."""

    def _write(body: str) -> Path:
        path = tmp_path / "experiment.toml"
        path.write_text(textwrap.dedent(body) + f'\n[output]\ndirectory = "{(tmp_path / "out").as_posix()}"\n', encoding="utf-8")
        return path

    return _write
