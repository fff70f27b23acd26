# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.qmc.hamiltonian import IsingProblem


class ExactMoments(BaseModel):
    """
    Exact thermal averages of one problem.

    The static moments (``m_mean`` … ``mi4``, ``site_means``) are those of the σᶻ-basis
    distribution. ``chi_loc[i]`` is (1/β²)∫∫⟨T σᶻ_i(τ)σᶻ_i(τ′)⟩ dτ dτ′ and ``chi_global`` the same
    double integral of the magnetization, (1/N²)Σ_ij; they are the M → ∞ limits of the path
    sampler's ⟨m_i²⟩ and ⟨m²⟩.
    """

    beta: PositiveFloat
    gamma: NonNegativeFloat
    n_sites: PositiveInt
    m_mean: float
    m_abs: float = Field(ge=0.0)
    m2: float = Field(ge=0.0)
    m4: float = Field(ge=0.0)
    mi2: FloatVector
    mi4: FloatVector
    site_means: FloatVector
    chi_loc: FloatVector
    chi_global: float
    probability_sum: float

    def chi_loc_array(self) -> npt.NDArray[np.float64]:
        return self.chi_loc.as_array()


def as_problem(instance: DisorderInstance | IsingProblem) -> IsingProblem:
    return instance if isinstance(instance, IsingProblem) else IsingProblem.from_instance(instance)


def basis_spins(n_sites: int) -> npt.NDArray[np.int8]:
    """
    All 2^N σᶻ configurations; row b holds σ_i = 1 − 2·bit_i(b).

    >>> basis_spins(2).tolist()
    [[1, 1], [-1, 1], [1, -1], [-1, -1]]
    """
    states = np.arange(1 << n_sites, dtype=np.int64)
    bits = (states[:, None] >> np.arange(n_sites, dtype=np.int64)[None, :]) & 1
    return (1 - 2 * bits).astype(np.int8)


def enumerate_energies(problem: IsingProblem, spins: npt.NDArray[np.int8]) -> npt.NDArray[np.float64]:
    """Classical energies of the rows of ``spins``, one edge at a time to bound memory."""
    energies = np.zeros(spins.shape[0], dtype=np.float64)
    for (i, j), coupling in zip(problem.edges, problem.couplings, strict=True):
        if coupling != 0.0:
            energies += coupling * (spins[:, i] * spins[:, j])
    for i, field in enumerate(problem.fields):
        if field != 0.0:
            energies -= field * spins[:, i]
    return energies


def static_moments(spins: npt.NDArray[np.int8], probabilities: npt.NDArray[np.float64]) -> dict[str, Any]:
    """Moments of m = mean_i σ_i and of σ_i under a distribution over the rows of ``spins``."""
    magnetization = spins.mean(axis=1, dtype=np.float64)
    squared = magnetization * magnetization
    n_sites = spins.shape[1]
    return {
        "m_mean": float(probabilities @ magnetization),
        "m_abs": float(probabilities @ np.abs(magnetization)),
        "m2": float(probabilities @ squared),
        "m4": float(probabilities @ (squared * squared)),
        "mi2": np.ones(n_sites),
        "mi4": np.ones(n_sites),
        "site_means": probabilities @ spins.astype(np.float64),
        "probability_sum": float(probabilities.sum()),
    }
