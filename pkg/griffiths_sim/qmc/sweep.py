# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Sweeps over the space-time lattice."""

from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache

import numpy as np
import numpy.typing as npt
from scipy import sparse

from griffiths_sim.qmc._kernels import MAX_ENCODED_SITES, metropolis_sweeps, trotter_cluster_sweeps
from griffiths_sim.qmc.couplings import EffectiveCouplings
from griffiths_sim.qmc.state import PathState

# Upper bound on the number of uniforms drawn per kernel call.
_UNIFORMS_PER_CHUNK = 1 << 22

_NO_CODES = np.empty(0, dtype=np.int64)


class UpdateScheme(StrEnum):
    """
    The move set of a sweep.

    ``metropolis`` proposes one single-spin flip per space-time site. ``cluster`` flips
    imaginary-time segments built along each site's Trotter ring. ``hybrid`` runs one of each.
    """

    METROPOLIS = "metropolis"
    CLUSTER = "cluster"
    HYBRID = "hybrid"


@dataclass
class SweepStats:
    """Counters of a batch of sweeps."""

    n_sweeps: int = 0
    proposals: int = 0
    accepted: int = 0
    cluster_flips: int = 0
    codes: npt.NDArray[np.int64] = field(default_factory=lambda: _NO_CODES)

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.proposals if self.proposals else 0.0


def adjacency_csr(n_sites: int, edges: npt.ArrayLike, weights: npt.ArrayLike) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64], npt.NDArray[np.float64]]:
    """Return the symmetric weighted adjacency as CSR ``(indptr, indices, data)`` arrays."""
    edge_array = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    values = np.asarray(weights, dtype=np.float64)
    rows = np.concatenate([edge_array[:, 0], edge_array[:, 1]])
    cols = np.concatenate([edge_array[:, 1], edge_array[:, 0]])
    matrix = sparse.csr_array((np.concatenate([values, values]), (rows, cols)), shape=(n_sites, n_sites))
    matrix.sort_indices()
    return matrix.indptr.astype(np.int64), matrix.indices.astype(np.int64), matrix.data.astype(np.float64)


class SweepEngine:
    """
    Applies sweeps for fixed effective couplings.

    Sites are visited in a fixed two-color order: a space-time site (i, t) belongs to class
    (color_i + t) mod 2, and class 0 is swept before class 1, each in site-major order.
    """

    def __init__(self, couplings: EffectiveCouplings, update: UpdateScheme | str = UpdateScheme.METROPOLIS) -> None:
        self.couplings = couplings
        self.update = UpdateScheme(update)
        self._indptr, self._indices, self._k_adjacent = adjacency_csr(couplings.n_sites, couplings.edges, couplings.k_spatial.as_array())
        self._k_field = couplings.k_field.as_array()
        colors = np.asarray(couplings.colors, dtype=np.int64)
        parity = (colors[:, None] + np.arange(couplings.M)[None, :]) % 2
        class_sites = [np.nonzero(parity == c) for c in (0, 1)]
        self._order_sites = np.concatenate([sites for sites, _ in class_sites]).astype(np.int64)
        self._order_slices = np.concatenate([slices for _, slices in class_sites]).astype(np.int64)

    @property
    def sites_per_sweep(self) -> int:
        return self.couplings.n_sites * self.couplings.M

    def run(self, state: PathState, n_sweeps: int, rng: np.random.Generator, *, record_codes: bool = False) -> SweepStats:
        """
        Apply ``n_sweeps`` sweeps to the state in place.

        With ``record_codes`` the configuration after every sweep is returned as an integer code
        (see ``encode_path``); this needs N·M ≤ 62.
        """
        if state.spins.shape != (self.couplings.n_sites, self.couplings.M):
            err_msg = f"state shape {state.spins.shape} does not match couplings ({self.couplings.n_sites}, {self.couplings.M})."
            raise ValueError(err_msg)
        if record_codes and self.sites_per_sweep > MAX_ENCODED_SITES:
            err_msg = f"recording configurations needs N·M ≤ {MAX_ENCODED_SITES}, got {self.sites_per_sweep}."
            raise ValueError(err_msg)

        stats = SweepStats()
        code_chunks: list[npt.NDArray[np.int64]] = []
        chunk = max(1, _UNIFORMS_PER_CHUNK // (2 * self.sites_per_sweep))
        remaining = n_sweeps
        while remaining > 0:
            size = min(chunk, remaining)
            codes = np.empty(size if record_codes else 0, dtype=np.int64)
            self._run_chunk(state, size, rng, codes, stats)
            if record_codes:
                code_chunks.append(codes)
            remaining -= size
        if record_codes:
            stats.codes = np.concatenate(code_chunks) if code_chunks else _NO_CODES
        return stats

    def _run_chunk(self, state: PathState, size: int, rng: np.random.Generator, codes: npt.NDArray[np.int64], stats: SweepStats) -> None:
        spins = state.spins
        n_sites, n_slices = spins.shape
        stats.n_sweeps += size
        if self.update is UpdateScheme.METROPOLIS:
            uniforms = rng.random((size, self.sites_per_sweep))
            stats.proposals += size * self.sites_per_sweep
            stats.accepted += int(self._metropolis(spins, uniforms, codes))
            return
        cluster_uniforms = rng.random((size, n_sites, 2 * n_slices))
        if self.update is UpdateScheme.CLUSTER:
            stats.cluster_flips += int(self._cluster(spins, cluster_uniforms, codes))
            return
        metropolis_uniforms = rng.random((size, self.sites_per_sweep))
        stats.proposals += size * self.sites_per_sweep
        for s in range(size):
            stats.accepted += int(self._metropolis(spins, metropolis_uniforms[s : s + 1], _NO_CODES))
            stats.cluster_flips += int(self._cluster(spins, cluster_uniforms[s : s + 1], codes[s : s + 1]))

    def _metropolis(self, spins: npt.NDArray[np.int8], uniforms: npt.NDArray[np.float64], codes: npt.NDArray[np.int64]) -> int:
        return metropolis_sweeps(
            spins,
            self._indptr,
            self._indices,
            self._k_adjacent,
            self._k_field,
            self.couplings.k_trotter,
            self._order_sites,
            self._order_slices,
            uniforms,
            codes,
        )

    def _cluster(self, spins: npt.NDArray[np.int8], uniforms: npt.NDArray[np.float64], codes: npt.NDArray[np.int64]) -> int:
        return trotter_cluster_sweeps(
            spins,
            self._indptr,
            self._indices,
            self._k_adjacent,
            self._k_field,
            self.couplings.bond_probability,
            uniforms,
            codes,
        )


@lru_cache(maxsize=8)
def _engine_for(couplings: EffectiveCouplings) -> SweepEngine:
    return SweepEngine(couplings)


def sweep(state: PathState, couplings: EffectiveCouplings, rng: np.random.Generator) -> int:
    """Apply one Metropolis sweep in place and return the number of accepted flips."""
    return _engine_for(couplings).run(state, 1, rng).accepted
