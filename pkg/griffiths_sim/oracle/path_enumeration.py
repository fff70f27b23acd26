# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""The exact distribution of the path action for tiny systems."""

import numpy as np
import numpy.typing as npt

from griffiths_sim.errors import CapabilityError
from griffiths_sim.qmc.couplings import EffectiveCouplings

MAX_PATH_SITES = 20


def path_boltzmann_distribution(couplings: EffectiveCouplings) -> npt.NDArray[np.float64]:
    """
    Probabilities e^{−S}/Z of all 2^{NM} path configurations.

    Entry c belongs to the configuration whose bit i·M + t is set when σ_i(t) = +1, the encoding
    used by the sweep kernels.

    Raises:
        CapabilityError: If N·M exceeds 20.

    """
    n_sites, n_slices = couplings.n_sites, couplings.M
    size = n_sites * n_slices
    if size > MAX_PATH_SITES:
        err_msg = f"path enumeration handles N·M ≤ {MAX_PATH_SITES}, got {size}."
        raise CapabilityError(err_msg)
    codes = np.arange(1 << size, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(size, dtype=np.int64)[None, :]) & 1
    spins = (2 * bits - 1).astype(np.float64).reshape(-1, n_sites, n_slices)

    action = np.zeros(codes.size)
    for (i, j), k in zip(couplings.edges, couplings.k_spatial, strict=True):
        action += k * np.sum(spins[:, i, :] * spins[:, j, :], axis=1)
    action -= np.einsum("i,cit->c", couplings.k_field.as_array(), spins)
    action -= couplings.k_trotter * np.sum(spins * np.roll(spins, -1, axis=2), axis=(1, 2))

    weights = np.exp(-(action - action.min()))
    return weights / weights.sum()


def total_variation_distance(codes: npt.ArrayLike, probabilities: npt.NDArray[np.float64]) -> float:
    """Total-variation distance between the empirical distribution of ``codes`` and ``probabilities``."""
    empirical = np.bincount(np.asarray(codes, dtype=np.int64), minlength=probabilities.size) / np.size(codes)
    return 0.5 * float(np.abs(empirical - probabilities).sum())
