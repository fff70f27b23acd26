# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
import numpy.typing as npt

from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.qmc.hamiltonian import IsingProblem


class InitKind(StrEnum):
    RANDOM = "random"
    ORDERED = "ordered"


@dataclass
class PathState:
    """
    The working configuration of one Markov chain.

    Attributes:
        spins: An (N, M) int8 array of ±1, site by Trotter slice, periodic along the slice axis.
        beta: The inverse temperature the chain samples at.

    """

    spins: npt.NDArray[np.int8]
    beta: float

    def __post_init__(self) -> None:
        if self.spins.ndim != 2 or self.spins.shape[1] < 2:  # noqa: PLR2004
            err_msg = f"spins must be an (N, M) array with M ≥ 2, got shape {self.spins.shape}."
            raise ValueError(err_msg)
        if not np.all(np.abs(self.spins) == 1):
            err_msg = "all spins must be ±1."
            raise ValueError(err_msg)

    @property
    def n_sites(self) -> int:
        return int(self.spins.shape[0])

    @property
    def M(self) -> int:
        return int(self.spins.shape[1])

    def magnetization(self) -> float:
        """m = (1/NM) Σ_i Σ_t σ_i(t)."""
        return float(self.spins.mean(dtype=np.float64))

    def site_magnetizations(self) -> npt.NDArray[np.float64]:
        """m_i = (1/M) Σ_t σ_i(t)."""
        return self.spins.mean(axis=1, dtype=np.float64)

    def flipped(self) -> "PathState":
        """Return a copy with every spin reversed."""
        return PathState(spins=(-self.spins).astype(np.int8), beta=self.beta)

    def copy(self) -> "PathState":
        return PathState(spins=self.spins.copy(), beta=self.beta)


def init_state(
    instance: DisorderInstance | IsingProblem,
    M: int,
    beta: float,
    seed: int | np.random.SeedSequence,
    init: InitKind | str = InitKind.RANDOM,
) -> PathState:
    """
    Create the starting configuration of a chain.

    ``ordered`` sets every spin to +1; ``random`` draws fair ±1 spins from the seed.
    """
    n_sites = instance.n_sites
    if InitKind(init) is InitKind.ORDERED:
        spins = np.ones((n_sites, M), dtype=np.int8)
    else:
        rng = np.random.default_rng(seed)
        spins = (2 * rng.integers(0, 2, size=(n_sites, M), dtype=np.int8) - 1).astype(np.int8)
    return PathState(spins=spins, beta=beta)
