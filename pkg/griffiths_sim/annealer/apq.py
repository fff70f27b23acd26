# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Anneal-pause-quench sampling and device moment records."""

from dataclasses import dataclass
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.annealer.device import DeviceModel, gauge_transform, random_gauge
from griffiths_sim.annealer.protocol import ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.quench import apply_quench, quenched_expected_spins
from griffiths_sim.annealer.samplers import SamplerBackend, ThermalSampler, ThermalSamplerFactory
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.logging import logger

_MIN_SAMPLES = 2


@dataclass
class ApqSamples:
    """Logical read-outs of one anneal-pause-quench batch, one column per run: shape (N, N_rep)."""

    spins: npt.NDArray[np.int8]
    label: str
    L: int
    s_star: float
    beta: float
    gamma: float

    @property
    def n_sites(self) -> int:
        return self.spins.shape[0]

    @property
    def n_rep(self) -> int:
        return self.spins.shape[1]

    def magnetizations(self) -> npt.NDArray[np.float64]:
        """m_a = (1/N) Σ_i σ_i for every run a."""
        return self.spins.mean(axis=0, dtype=np.float64)


class DeviceMomentRecord(BaseModel):
    """
    Magnetization moments of one instance at one pause point, averaged over runs.

    The errors are standard errors over the runs.
    """

    instance_id: str = Field(alias="instance")
    L: PositiveInt
    s_star: float = Field(gt=0.0, lt=1.0)
    beta: PositiveFloat
    gamma: NonNegativeFloat
    n_rep: PositiveInt
    m: float = Field(ge=-1.0, le=1.0)
    m_abs: float = Field(ge=0.0, le=1.0)
    m2: float = Field(ge=0.0, le=1.0)
    m4: float = Field(ge=0.0, le=1.0)
    m_abs_err: NonNegativeFloat = 0.0
    m2_err: NonNegativeFloat = 0.0
    m4_err: NonNegativeFloat = 0.0
    site_means: FloatVector

    @model_validator(mode="after")
    def moments_are_ordered(self) -> Self:
        if self.m4 > self.m2 + 1e-12:
            err_msg = f"⟨m⁴⟩ = {self.m4} exceeds ⟨m²⟩ = {self.m2}."
            raise ValueError(err_msg)
        return self


class MagnetizationLog(BaseModel):
    """The per-run magnetizations m_a of one instance at one pause point, kept for magnetization histograms."""

    instance_id: str = Field(alias="instance")
    L: PositiveInt
    s_star: float = Field(gt=0.0, lt=1.0)
    magnetizations: FloatVector

    @classmethod
    def from_samples(cls, samples: ApqSamples) -> Self:
        return cls(instance_id=samples.label, L=samples.L, s_star=samples.s_star, magnetizations=samples.magnetizations())


def _session_rng(device: DeviceModel, protocol: ProtocolParams, seed: int | None) -> np.random.Generator:
    key = (round(protocol.s_star * 1e6),)
    return np.random.default_rng(np.random.SeedSequence(device.seed if seed is None else seed, spawn_key=key))


def _sample_physical(
    device: DeviceModel,
    beta: float,
    gamma: float,
    n_samples: int,
    h_field: npt.ArrayLike | None,
    sampler: ThermalSampler,
    rng: np.random.Generator,
) -> npt.NDArray[np.int8]:
    problem = device.physical_problem(h_field)
    spins = sampler.sample(problem, beta, gamma, n_samples, rng)
    flips = apply_quench(spins, problem, device.quench_strength, rng)
    logger.debug("ANNEALER - %d read-outs of %s, %d quench flips", n_samples, device.instance.label, flips)
    return device.to_logical(spins)


def sample_apq(
    device: DeviceModel,
    protocol: ProtocolParams,
    schedule: Schedule,
    h_field: npt.ArrayLike | None = None,
    *,
    sampler: ThermalSampler | None = None,
    n_gauges: int = 1,
    seed: int | None = None,
) -> ApqSamples:
    """
    Run ``protocol.n_rep`` anneal-pause-quench cycles and return the logical read-outs.

    Each read-out is drawn from the thermal state of H(s*) with the device's effective biases and
    the programmed field, then distorted by the quench. With ``n_gauges`` > 1 the runs are split
    evenly over random gauges (the first gauge is the device's own).

    Raises:
        SessionError: If the device is already in use.
        CapabilityError: If the sampler cannot handle the instance.

    """
    if n_gauges < 1 or n_gauges > protocol.n_rep:
        err_msg = f"need 1 ≤ n_gauges ≤ n_rep, got {n_gauges}."
        raise ValueError(err_msg)
    beta, gamma = map_s_to_beta_gamma(schedule, protocol.s_star, device.temperature_k)
    sampler = sampler or ThermalSamplerFactory.create(SamplerBackend.AUTO, device.n_sites)
    rng = _session_rng(device, protocol, seed)
    with device.exclusive_session():
        batches = []
        for g, n_samples in enumerate(np.array_split(np.arange(protocol.n_rep), n_gauges)):
            gauged = device if g == 0 else gauge_transform(device, random_gauge(device.n_sites, rng))
            batches.append(_sample_physical(gauged, beta, gamma, n_samples.size, h_field, sampler, rng))
    spins = np.concatenate(batches, axis=0).T.copy()
    return ApqSamples(spins=spins, label=device.instance.label, L=device.instance.graph.L, s_star=protocol.s_star, beta=beta, gamma=gamma)


def expected_magnetization(
    device: DeviceModel,
    protocol: ProtocolParams,
    schedule: Schedule,
    h_field: npt.ArrayLike | None = None,
    *,
    sampler: ThermalSampler | None = None,
    decoupled: bool = False,
) -> npt.NDArray[np.float64]:
    """
    Exact logical ⟨σ_i⟩ of the read-outs, the infinite-N_rep limit of ``sample_apq``.

    Raises:
        CapabilityError: If the problem is too large for exact expectations.
        ValueError: If q > 0 on a coupled problem.

    """
    beta, gamma = map_s_to_beta_gamma(schedule, protocol.s_star, device.temperature_k)
    problem = device.physical_problem(h_field, decoupled=decoupled)
    sampler = sampler or ThermalSamplerFactory.create(SamplerBackend.EXACT, device.n_sites)
    with device.exclusive_session():
        expected = sampler.expected_spins(problem, beta, gamma)
    return device.gauge_array() * quenched_expected_spins(expected, problem, device.quench_strength)


def magnetization_moments(samples: ApqSamples) -> DeviceMomentRecord:
    """
    ⟨mⁿ⟩ = (1/N_rep) Σ_a m_aⁿ over the runs, plus the per-site means.

    Raises:
        ValueError: With fewer than two runs.

    """
    if samples.n_rep < _MIN_SAMPLES:
        err_msg = f"need at least {_MIN_SAMPLES} runs, got {samples.n_rep}."
        raise ValueError(err_msg)
    m = samples.magnetizations()
    absolute, squared = np.abs(m), m * m
    fourth = squared * squared
    root_n = np.sqrt(samples.n_rep)
    return DeviceMomentRecord(
        instance_id=samples.label,
        L=samples.L,
        s_star=samples.s_star,
        beta=samples.beta,
        gamma=samples.gamma,
        n_rep=samples.n_rep,
        m=float(np.clip(m.mean(), -1.0, 1.0)),
        m_abs=float(absolute.mean()),
        m2=float(squared.mean()),
        m4=float(fourth.mean()),
        m_abs_err=float(absolute.std(ddof=1) / root_n),
        m2_err=float(squared.std(ddof=1) / root_n),
        m4_err=float(fourth.std(ddof=1) / root_n),
        site_means=samples.spins.mean(axis=1, dtype=np.float64),
    )
