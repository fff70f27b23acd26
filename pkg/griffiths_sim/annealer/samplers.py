# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Thermal samplers of the pause-point Hamiltonian.

A sampler draws projective σᶻ read-outs of the thermal state of H = Σ J σᶻσᶻ − Γ Σ σˣ − Σ h σᶻ
(QMC units). Small problems are sampled exactly from the spectral oracle; large ones from a
path-integral chain, where one Trotter slice is a draw from the σᶻ distribution.
"""

from abc import ABC, abstractmethod
from enum import StrEnum
from typing import final

import numpy as np
import numpy.typing as npt

from griffiths_sim.errors import CapabilityError
from griffiths_sim.logging import logger
from griffiths_sim.oracle.spectral import MAX_SPECTRAL_SITES, sigma_z_distribution
from griffiths_sim.qmc.couplings import effective_couplings
from griffiths_sim.qmc.hamiltonian import IsingProblem
from griffiths_sim.qmc.state import init_state
from griffiths_sim.qmc.sweep import SweepEngine, UpdateScheme


class SamplerBackend(StrEnum):
    AUTO = "auto"
    EXACT = "exact"
    PATH_INTEGRAL = "path-integral"


def decoupled_expected_spins(fields: npt.NDArray[np.float64], beta: float, gamma: float) -> npt.NDArray[np.float64]:
    """
    ⟨σᶻ⟩ of independent spins under −Γσˣ − hσᶻ: (h/E)·tanh(βE) with E = sqrt(h² + Γ²).

    >>> decoupled_expected_spins(np.array([0.0]), 2.0, 1.0).tolist()
    [0.0]
    """
    energy = np.hypot(fields, gamma)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(energy > 0.0, fields / np.where(energy > 0.0, energy, 1.0), 0.0)
    return ratio * np.tanh(beta * energy)


class ThermalSampler(ABC):
    """Draws σᶻ read-outs of the thermal state, one sample per row."""

    @abstractmethod
    def sample(self, problem: IsingProblem, beta: float, gamma: float, n_samples: int, rng: np.random.Generator) -> npt.NDArray[np.int8]: ...

    def expected_spins(self, problem: IsingProblem, beta: float, gamma: float) -> npt.NDArray[np.float64]:
        """
        Exact ⟨σᶻ_i⟩.

        Raises:
            CapabilityError: If the sampler cannot evaluate expectations exactly.

        """
        del beta, gamma
        err_msg = f"{type(self).__name__} cannot evaluate exact expectations for {problem.n_sites} sites."
        raise CapabilityError(err_msg)


@final
class ExactThermalSampler(ThermalSampler):
    """
    Samples from the exact σᶻ distribution.

    Decoupled problems (all J = 0) factorize into single spins and have no size limit; coupled
    problems go through the spectral oracle and are limited to 12 sites.
    """

    def sample(self, problem: IsingProblem, beta: float, gamma: float, n_samples: int, rng: np.random.Generator) -> npt.NDArray[np.int8]:
        if problem.is_decoupled():
            up = 0.5 * (1.0 + decoupled_expected_spins(problem.fields.as_array(), beta, gamma))
            return np.where(rng.random((n_samples, problem.n_sites)) < up[None, :], 1, -1).astype(np.int8)
        spins, probabilities = sigma_z_distribution(problem, beta, gamma)
        picks = rng.choice(probabilities.size, size=n_samples, p=probabilities / probabilities.sum())
        return spins[picks].astype(np.int8)

    def expected_spins(self, problem: IsingProblem, beta: float, gamma: float) -> npt.NDArray[np.float64]:
        if problem.is_decoupled():
            return decoupled_expected_spins(problem.fields.as_array(), beta, gamma)
        spins, probabilities = sigma_z_distribution(problem, beta, gamma)
        return probabilities @ spins.astype(np.float64)


@final
class PathIntegralThermalSampler(ThermalSampler):
    """
    Samples one Trotter slice of a path-integral chain per read-out.

    A fresh chain is thermalized for each call; read-outs are taken every ``sweeps_between``
    sweeps from a uniformly chosen slice.
    """

    def __init__(self, M: int = 64, n_thermalize: int = 4096, sweeps_between: int = 16, update: UpdateScheme | str = UpdateScheme.HYBRID) -> None:
        self.M = M
        self.n_thermalize = n_thermalize
        self.sweeps_between = sweeps_between
        self.update = UpdateScheme(update)

    def sample(self, problem: IsingProblem, beta: float, gamma: float, n_samples: int, rng: np.random.Generator) -> npt.NDArray[np.int8]:
        couplings = effective_couplings(beta, gamma, self.M, problem)
        engine = SweepEngine(couplings, self.update)
        init_rng, chain_rng = rng.spawn(2)
        state = init_state(problem, self.M, beta, int(init_rng.integers(0, 2**63)))
        engine.run(state, self.n_thermalize, chain_rng)
        samples = np.empty((n_samples, problem.n_sites), dtype=np.int8)
        for a in range(n_samples):
            engine.run(state, self.sweeps_between, chain_rng)
            samples[a] = state.spins[:, int(chain_rng.integers(0, self.M))]
        return samples


@final
class ThermalSamplerFactory:
    """Factory which can be used to create the thermal sampler for a problem size."""

    @staticmethod
    def create(backend: SamplerBackend | str, n_sites: int, *, M: int = 64) -> ThermalSampler:
        """
        Creates a thermal sampler.

        Args:
            backend (SamplerBackend | str): ``exact``, ``path-integral`` or ``auto``, which picks the
                exact sampler up to 12 sites and the path-integral sampler beyond.
            n_sites (int): The number of spins the sampler will see.
            M (int): Trotter slices of the path-integral sampler.

        Returns:
            ThermalSampler: The sampler.

        """
        chosen = SamplerBackend(backend)
        if chosen is SamplerBackend.AUTO:
            chosen = SamplerBackend.EXACT if n_sites <= MAX_SPECTRAL_SITES else SamplerBackend.PATH_INTEGRAL
        logger.debug("ANNEALER - %s thermal sampler for %d sites", chosen, n_sites)
        if chosen is SamplerBackend.EXACT:
            return ExactThermalSampler()
        return PathIntegralThermalSampler(M=M)
