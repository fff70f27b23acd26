# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Compiled inner loops.

All random numbers are drawn by the caller and passed in, so a kernel is a deterministic
function of its arguments and chains do not depend on numba's internal generator state.
Adjacency is given in CSR form: the neighbours of site i are ``indices[indptr[i]:indptr[i + 1]]``
with coupling weights ``weights[indptr[i]:indptr[i + 1]]``.
"""

import math

import numpy as np
from numba import njit

# Largest N·M for which a path configuration fits in one int64 code.
MAX_ENCODED_SITES = 62


@njit(cache=True)
def _local_field(spins: np.ndarray, indptr: np.ndarray, indices: np.ndarray, weights: np.ndarray, i: int, t: int) -> float:
    total = 0.0
    for p in range(indptr[i], indptr[i + 1]):
        total += weights[p] * spins[indices[p], t]
    return total


@njit(cache=True)
def encode_path(spins: np.ndarray) -> int:
    """Encode an (N, M) configuration as an integer; bit i·M + t is set when σ_i(t) = +1."""
    n_sites, n_slices = spins.shape
    code = 0
    for i in range(n_sites):
        for t in range(n_slices):
            if spins[i, t] > 0:
                code |= 1 << (i * n_slices + t)
    return code


@njit(cache=True)
def metropolis_sweeps(
    spins: np.ndarray,
    indptr: np.ndarray,
    indices: np.ndarray,
    k_spatial: np.ndarray,
    k_field: np.ndarray,
    k_trotter: float,
    order_sites: np.ndarray,
    order_slices: np.ndarray,
    uniforms: np.ndarray,
    codes: np.ndarray,
) -> int:
    """
    Run ``uniforms.shape[0]`` Metropolis sweeps in place and return the number of accepted flips.

    Sweep s visits the space-time sites in the given order and accepts the flip at position k when
    ΔS ≤ 0 or ``uniforms[s, k] < exp(−ΔS)``. When ``codes`` is non-empty the configuration after
    sweep s is stored in ``codes[s]``.
    """
    n_slices = spins.shape[1]
    accepted = 0
    for s in range(uniforms.shape[0]):
        for k in range(order_sites.shape[0]):
            i = order_sites[k]
            t = order_slices[k]
            spin = spins[i, t]
            local = _local_field(spins, indptr, indices, k_spatial, i, t)
            temporal = spins[i, (t + 1) % n_slices] + spins[i, (t - 1 + n_slices) % n_slices]
            delta = -2.0 * spin * (local - k_field[i] - k_trotter * temporal)
            if delta <= 0.0 or uniforms[s, k] < math.exp(-delta):
                spins[i, t] = -spin
                accepted += 1
        if codes.shape[0] > 0:
            codes[s] = encode_path(spins)
    return accepted


@njit(cache=True)
def trotter_cluster_sweeps(
    spins: np.ndarray,
    indptr: np.ndarray,
    indices: np.ndarray,
    k_spatial: np.ndarray,
    k_field: np.ndarray,
    bond_probability: float,
    uniforms: np.ndarray,
    codes: np.ndarray,
) -> int:
    """
    Run imaginary-time cluster sweeps in place and return the number of flipped spins.

    For every site the Trotter ring is cut into segments: a bond between equal neighbouring
    slices is kept with ``bond_probability``. Each segment is then flipped with the Metropolis
    probability of the spatial and field part of the action. ``uniforms`` has shape
    (n_sweeps, N, 2M): the first M numbers of a site decide its bonds, the rest its segment flips.
    """
    n_sites, n_slices = spins.shape
    flipped = 0
    bonds = np.empty(n_slices, dtype=np.bool_)
    for s in range(uniforms.shape[0]):
        for i in range(n_sites):
            draws = uniforms[s, i]
            start = -1
            for t in range(n_slices):
                bonds[t] = spins[i, t] == spins[i, (t + 1) % n_slices] and draws[t] < bond_probability
                if start < 0 and not bonds[t]:
                    start = t
            if start < 0:
                # The whole ring is one segment.
                action = 0.0
                for t in range(n_slices):
                    action += spins[i, t] * (_local_field(spins, indptr, indices, k_spatial, i, t) - k_field[i])
                if action >= 0.0 or draws[n_slices] < math.exp(2.0 * action):
                    for t in range(n_slices):
                        spins[i, t] = -spins[i, t]
                    flipped += n_slices
                continue
            first = (start + 1) % n_slices
            segment = 0
            length = 0
            action = 0.0
            for step in range(n_slices):
                t = (first + step) % n_slices
                action += spins[i, t] * (_local_field(spins, indptr, indices, k_spatial, i, t) - k_field[i])
                length += 1
                if not bonds[t]:
                    if action >= 0.0 or draws[n_slices + segment] < math.exp(2.0 * action):
                        for r in range(length):
                            tt = (t - r + n_slices) % n_slices
                            spins[i, tt] = -spins[i, tt]
                        flipped += length
                    segment += 1
                    length = 0
                    action = 0.0
        if codes.shape[0] > 0:
            codes[s] = encode_path(spins)
    return flipped


@njit(cache=True)
def greedy_descent(
    spins: np.ndarray,
    indptr: np.ndarray,
    indices: np.ndarray,
    couplings: np.ndarray,
    fields: np.ndarray,
    orders: np.ndarray,
    selected: np.ndarray,
    min_gain: float,
) -> int:
    """
    Relax the selected rows of ``spins`` (n_samples, N) towards a local minimum of the classical energy.

    Sites are visited in the row's order from ``orders`` and flipped while the flip lowers
    E = Σ J_ij σ_i σ_j − Σ h_i σ_i by more than ``min_gain``. Returns the total number of flips.
    """
    n_samples, n_sites = spins.shape
    flips = 0
    for a in range(n_samples):
        if not selected[a]:
            continue
        improved = True
        while improved:
            improved = False
            for k in range(n_sites):
                i = orders[a, k]
                local = 0.0
                for p in range(indptr[i], indptr[i + 1]):
                    local += couplings[p] * spins[a, indices[p]]
                delta = -2.0 * spins[a, i] * (local - fields[i])
                if delta < -min_gain:
                    spins[a, i] = -spins[a, i]
                    flips += 1
                    improved = True
    return flips
