# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Exhaustive Boltzmann sums for the classical (Γ = 0) limit."""

import numpy as np

from griffiths_sim.errors import CapabilityError
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.oracle.moments import ExactMoments, as_problem, basis_spins, enumerate_energies, static_moments
from griffiths_sim.qmc.hamiltonian import IsingProblem

MAX_ENUMERATED_SITES = 20


def classical_limit_moments(instance: DisorderInstance | IsingProblem, beta: float) -> ExactMoments:
    """
    Moments at Γ = 0 by enumerating all 2^N configurations.

    Imaginary-time correlations are static at Γ = 0, so ``chi_loc`` is 1 and ``chi_global`` equals ⟨m²⟩.

    Raises:
        CapabilityError: If the problem has more than 20 sites.

    """
    problem = as_problem(instance)
    if problem.n_sites > MAX_ENUMERATED_SITES:
        err_msg = f"classical enumeration handles at most {MAX_ENUMERATED_SITES} sites, got {problem.n_sites}."
        raise CapabilityError(err_msg)
    spins = basis_spins(problem.n_sites)
    energies = enumerate_energies(problem, spins)
    weights = np.exp(-beta * (energies - energies.min()))
    probabilities = weights / weights.sum()
    moments = static_moments(spins, probabilities)
    return ExactMoments(
        beta=beta,
        gamma=0.0,
        n_sites=problem.n_sites,
        chi_loc=np.ones(problem.n_sites),
        chi_global=moments["m2"],
        **moments,
    )
