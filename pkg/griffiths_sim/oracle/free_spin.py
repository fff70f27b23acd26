# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""A single free spin in a transverse field, exactly at finite Trotter number."""

import math

import numpy as np
import numpy.typing as npt

from griffiths_sim.qmc.couplings import trotter_coupling


def free_spin_autocorrelation(beta: float, gamma: float, M: int) -> npt.NDArray[np.float64]:
    """
    ⟨σ(0)σ(r)⟩ for r = 0 … M−1 on the Trotter ring of one spin, from its 2×2 transfer matrix.

    The transfer matrix is scaled by e^{−K} so that powers stay bounded.
    """
    K = trotter_coupling(beta, gamma, M)
    off_diagonal = math.exp(-2.0 * K)
    transfer = np.array([[1.0, off_diagonal], [off_diagonal, 1.0]])
    eigenvalues, eigenvectors = np.linalg.eigh(transfer)
    eigenvalues = eigenvalues / eigenvalues.max()
    sigma = eigenvectors.T @ np.diag([1.0, -1.0]) @ eigenvectors
    weights = sigma * sigma.T
    separations = np.arange(M)
    # Tr(σ T^r σ T^{M−r}) = Σ_ab σ_ab σ_ba λ_b^r λ_a^{M−r}
    powers_r = eigenvalues[None, :] ** separations[:, None]
    powers_rest = eigenvalues[None, :] ** (M - separations)[:, None]
    numerator = np.einsum("ab,rb,ra->r", weights, powers_r, powers_rest)
    return numerator / np.sum(eigenvalues**M)


def free_spin_correlator(beta: float, gamma: float, M: int) -> float:
    """
    ⟨m_i²⟩ of a decoupled site at finite M, m_i = (1/M)Σ_t σ(t).

    Raises:
        ValueError: If Γ ≤ 0.

    """
    if gamma <= 0.0:
        err_msg = f"the free-spin correlator needs Γ > 0, got {gamma}."
        raise ValueError(err_msg)
    return float(np.mean(free_spin_autocorrelation(beta, gamma, M)))


def free_spin_continuum(beta: float, gamma: float) -> float:
    """
    The M → ∞ limit tanh(βΓ)/(βΓ).

    >>> free_spin_continuum(1.0, 1e-12)
    1.0
    """
    x = beta * gamma
    if x < 1e-8:  # noqa: PLR2004
        return 1.0
    return math.tanh(x) / x
