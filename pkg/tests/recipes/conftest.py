# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Experiments with hand-made record logs whose fits have known answers."""

from pathlib import Path

import numpy as np
import pytest

from griffiths_sim.cli.config import ExperimentConfig
from griffiths_sim.persistence.layout import OutputLayout, RecordKind
from griffiths_sim.persistence.record_log import write_record_log
from griffiths_sim.qmc.records import MomentRecord

GAMMAS = (1.0, 1.5, 2.0)

# Binder ratio g per size at every Γ: the curves of L=2 and L=4 cross once, between 1.0 and 1.5.
BINDER = {2: (0.8, 0.6, 0.4), 4: (0.9, 0.55, 0.2)}

_M2 = 0.2
_N_SITES = 3000


def _local_moments(rng: np.random.Generator) -> np.ndarray:
    """⟨m_i²⟩ with a power-law density 2·10⁻⁴ χ⁻³ between 0.01 and 1, so d/z′ = 2."""
    return np.minimum(0.01 * rng.random(_N_SITES) ** -0.5, 1.0)


def qmc_records(L: int, seed: int) -> list[MomentRecord]:
    rng = np.random.default_rng(seed)
    records = []
    for gamma, g in zip(GAMMAS, BINDER[L], strict=True):
        for index, spread in enumerate((-0.001, 0.0, 0.001)):
            mi2 = _local_moments(rng)
            records.append(
                MomentRecord.model_validate(
                    {
                        "instance": f"L{L}-{index:04d}",
                        "L": L,
                        "beta": 4.0,
                        "gamma": gamma,
                        "M": 16,
                        "n_meas": 100,
                        "m_abs": 0.4,
                        "m2": _M2,
                        "m4": (3.0 - 2.0 * g) * _M2 * _M2 + spread,
                        "mi2": mi2,
                        "mi4": mi2 * mi2,
                    },
                ),
            )
    return records


@pytest.fixture
def qmc_config(tmp_path: Path) -> ExperimentConfig:
    """A two-size QMC experiment at β = 4 whose record logs are already written."""
    config = ExperimentConfig.model_validate(
        {
            "master_seed": 1,
            "lattice": {"sizes": [2, 4]},
            "grid": {"betas": [4.0], "gammas": list(GAMMAS)},
            "output": {"directory": str(tmp_path / "out")},
        },
    )
    layout = OutputLayout(config.output.directory)
    for L in config.lattice.sizes:
        write_record_log(layout.record_log(RecordKind.QMC, L), qmc_records(L, seed=L), config.provenance())
    return config
