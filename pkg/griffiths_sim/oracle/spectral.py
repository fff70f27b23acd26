# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Dense exact diagonalization of small transverse-field Ising Hamiltonians."""

import numpy as np
import numpy.typing as npt
from scipy import linalg

from griffiths_sim.errors import CapabilityError
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.logging import logger
from griffiths_sim.oracle.moments import ExactMoments, as_problem, basis_spins, enumerate_energies, static_moments
from griffiths_sim.qmc.hamiltonian import IsingProblem

MAX_SPECTRAL_SITES = 12

# Below this |β ΔE| the imaginary-time kernel uses its degenerate limit.
_DEGENERATE_GAP = 1e-8


def _require_size(problem: IsingProblem) -> None:
    if problem.n_sites > MAX_SPECTRAL_SITES:
        err_msg = f"the spectral oracle handles at most {MAX_SPECTRAL_SITES} sites, got {problem.n_sites}."
        logger.error("ORACLE - %s", err_msg)
        raise CapabilityError(err_msg)


def _spectrum(problem: IsingProblem, gamma: float) -> tuple[npt.NDArray[np.int8], npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    spins = basis_spins(problem.n_sites)
    dimension = spins.shape[0]
    hamiltonian = np.diag(enumerate_energies(problem, spins))
    states = np.arange(dimension)
    for i in range(problem.n_sites):
        hamiltonian[states, states ^ (1 << i)] -= gamma
    energies, vectors = linalg.eigh(hamiltonian)
    return spins, energies, vectors


def _boltzmann(energies: npt.NDArray[np.float64], beta: float) -> npt.NDArray[np.float64]:
    weights = np.exp(-beta * (energies - energies.min()))
    return weights / weights.sum()


def sigma_z_distribution(
    instance: DisorderInstance | IsingProblem,
    beta: float,
    gamma: float,
) -> tuple[npt.NDArray[np.int8], npt.NDArray[np.float64]]:
    """
    The distribution of a projective σᶻ measurement on the thermal state.

    Returns the (2^N, N) table of configurations and their probabilities.

    Raises:
        CapabilityError: If the problem has more than 12 sites.

    """
    problem = as_problem(instance)
    _require_size(problem)
    spins, energies, vectors = _spectrum(problem, gamma)
    probabilities = (vectors * vectors) @ _boltzmann(energies, beta)
    return spins, probabilities


def _imaginary_time_kernel(energies: npt.NDArray[np.float64], populations: npt.NDArray[np.float64], beta: float) -> npt.NDArray[np.float64]:
    """
    K_nm = (p_m − p_n) / (β (E_n − E_m)), with the degenerate limit (p_n + p_m)/2.

    Σ_nm A_nm B_mn K_nm equals (1/β²)∫∫⟨T A(τ) B(τ′)⟩ dτ dτ′.
    """
    gaps = energies[:, None] - energies[None, :]
    differences = populations[None, :] - populations[:, None]
    degenerate = np.abs(beta * gaps) < _DEGENERATE_GAP
    safe_gaps = np.where(degenerate, 1.0, gaps)
    return np.where(degenerate, 0.5 * (populations[:, None] + populations[None, :]), differences / (beta * safe_gaps))


def exact_thermal_moments(instance: DisorderInstance | IsingProblem, beta: float, gamma: float) -> ExactMoments:
    """
    Exact thermal moments of H = Σ J σᶻσᶻ − Γ Σ σˣ − Σ h σᶻ for at most 12 sites.

    Raises:
        CapabilityError: If the problem has more than 12 sites.

    """
    problem = as_problem(instance)
    _require_size(problem)
    spins, energies, vectors = _spectrum(problem, gamma)
    populations = _boltzmann(energies, beta)
    basis_probabilities = (vectors * vectors) @ populations
    kernel = _imaginary_time_kernel(energies, populations, beta)

    chi_loc = np.empty(problem.n_sites)
    for i in range(problem.n_sites):
        element = vectors.T @ (spins[:, i, None] * vectors)
        chi_loc[i] = np.sum(element * element * kernel)
    magnetization = spins.mean(axis=1, dtype=np.float64)
    element = vectors.T @ (magnetization[:, None] * vectors)
    chi_global = float(np.sum(element * element * kernel))

    return ExactMoments(
        beta=beta,
        gamma=gamma,
        n_sites=problem.n_sites,
        chi_loc=chi_loc,
        chi_global=chi_global,
        **static_moments(spins, basis_probabilities),
    )
