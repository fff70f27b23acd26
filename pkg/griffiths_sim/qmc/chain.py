# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""A single Markov chain for one (instance, β, Γ) cell."""

from typing import Any, Self

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeInt, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.logging import logger
from griffiths_sim.qmc.blocking import DEFAULT_BINS, binned_error, blocking_error
from griffiths_sim.qmc.couplings import effective_couplings
from griffiths_sim.qmc.hamiltonian import Hamiltonian
from griffiths_sim.qmc.records import MomentRecord
from griffiths_sim.qmc.state import InitKind, init_state
from griffiths_sim.qmc.sweep import SweepEngine, UpdateScheme


class ChainParams(BaseModel):
    """
    Run parameters shared by every chain of a grid.

    ``n_thermalize`` defaults to a quarter of ``n_sweeps``. One Monte Carlo step is one sweep.
    """

    M: PositiveInt = Field(default=64, ge=2)
    n_sweeps: PositiveInt = 1 << 16
    n_thermalize: NonNegativeInt | None = None
    measure_interval: PositiveInt = 8
    update: UpdateScheme = UpdateScheme.METROPOLIS
    init: InitKind = InitKind.RANDOM
    n_bins: PositiveInt = DEFAULT_BINS

    @model_validator(mode="after")
    def leaves_room_for_measurements(self) -> Self:
        """Validate that at least one measurement follows thermalization."""
        if self.thermalization >= self.n_sweeps:
            err_msg = f"n_thermalize ({self.thermalization}) must be smaller than n_sweeps ({self.n_sweeps})."
            raise ValueError(err_msg)
        if self.n_measurements < 1:
            err_msg = "no measurement fits between thermalization and n_sweeps; lower measure_interval."
            raise ValueError(err_msg)
        return self

    @property
    def thermalization(self) -> int:
        return self.n_sweeps // 4 if self.n_thermalize is None else self.n_thermalize

    @property
    def n_measurements(self) -> int:
        return (self.n_sweeps - self.thermalization) // self.measure_interval

    def chain_kwargs(self) -> dict[str, Any]:
        return {
            "M": self.M,
            "n_sweeps": self.n_sweeps,
            "n_thermalize": self.thermalization,
            "measure_interval": self.measure_interval,
            "update": self.update,
            "init": self.init,
            "n_bins": self.n_bins,
        }


class _MomentAccumulator:
    """Collects the global magnetization series and binned per-site moments."""

    def __init__(self, n_sites: int, n_measurements: int, n_bins: int) -> None:
        self.n_measurements = n_measurements
        self.n_bins = min(n_bins, n_measurements)
        self.series = np.empty(n_measurements, dtype=np.float64)
        self._mi2_sums = np.zeros((self.n_bins, n_sites))
        self._mi4_sums = np.zeros((self.n_bins, n_sites))
        self._counts = np.zeros(self.n_bins, dtype=np.int64)

    def add(self, k: int, site_magnetizations: npt.NDArray[np.float64]) -> None:
        self.series[k] = site_magnetizations.mean()
        squared = site_magnetizations * site_magnetizations
        b = k * self.n_bins // self.n_measurements
        self._mi2_sums[b] += squared
        self._mi4_sums[b] += squared * squared
        self._counts[b] += 1

    def site_moments(self) -> tuple[npt.NDArray[np.float64], ...]:
        n = self.n_measurements
        mi2 = self._mi2_sums.sum(axis=0) / n
        mi4 = self._mi4_sums.sum(axis=0) / n
        counts = self._counts[:, None]
        return mi2, mi4, binned_error(self._mi2_sums / counts), binned_error(self._mi4_sums / counts)


def run_chain(
    instance: DisorderInstance,
    beta: float,
    gamma: float,
    M: int = 64,
    n_sweeps: int = 1 << 16,
    n_thermalize: int | None = None,
    measure_interval: int = 8,
    seed: int = 0,
    *,
    update: UpdateScheme | str = UpdateScheme.METROPOLIS,
    init: InitKind | str = InitKind.RANDOM,
    n_bins: int = DEFAULT_BINS,
    fields: npt.ArrayLike | None = None,
) -> MomentRecord:
    """
    Run one chain and return its magnetization moments.

    After ``n_thermalize`` sweeps (default ``n_sweeps // 4``) the state is measured every
    ``measure_interval`` sweeps. Global moments get blocking error bars, per-site moments
    fixed-count binning errors. The seed fully determines the result.
    """
    params = ChainParams(
        M=M,
        n_sweeps=n_sweeps,
        n_thermalize=n_thermalize,
        measure_interval=measure_interval,
        update=UpdateScheme(update),
        init=InitKind(init),
        n_bins=n_bins,
    )
    hamiltonian = Hamiltonian.from_instance(instance, gamma, fields)
    problem = hamiltonian.problem
    couplings = effective_couplings(beta, hamiltonian.gamma, M, problem)
    init_seed, sweep_seed = np.random.SeedSequence(seed).spawn(2)
    state = init_state(problem, M, beta, init_seed, params.init)
    rng = np.random.default_rng(sweep_seed)
    engine = SweepEngine(couplings, params.update)

    logger.debug("QMC - chain %s at beta=%g gamma=%g: %d thermalization sweeps", instance.label, beta, gamma, params.thermalization)
    stats = engine.run(state, params.thermalization, rng)

    accumulator = _MomentAccumulator(problem.n_sites, params.n_measurements, params.n_bins)
    for k in range(params.n_measurements):
        measured = engine.run(state, params.measure_interval, rng)
        stats.proposals += measured.proposals
        stats.accepted += measured.accepted
        accumulator.add(k, state.site_magnetizations())

    series = accumulator.series
    absolute = np.abs(series)
    squared = series * series
    fourth = squared * squared
    mi2, mi4, mi2_err, mi4_err = accumulator.site_moments()
    logger.debug("QMC - chain %s done, acceptance %.3f", instance.label, stats.acceptance_rate)
    return MomentRecord(
        instance_id=instance.label,
        L=instance.graph.L,
        beta=beta,
        gamma=gamma,
        M=M,
        n_meas=params.n_measurements,
        m_abs=float(absolute.mean()),
        m2=float(squared.mean()),
        m4=float(fourth.mean()),
        mi2=mi2,
        mi4=mi4,
        m_abs_err=blocking_error(absolute),
        m2_err=blocking_error(squared),
        m4_err=blocking_error(fourth),
        mi2_err=mi2_err,
        mi4_err=mi4_err,
        seed=seed,
        acceptance_rate=stats.acceptance_rate,
    )
