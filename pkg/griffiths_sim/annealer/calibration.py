# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Flux-bias calibration by per-qubit binary search.

Every device call programs zero couplings and zero fields and applies a trial flux φ_i that adds
to the intrinsic bias. The search first widens the bracket [h_low, h_up] by doubling until the
mean read-out exceeds +0.5 at h_up and −0.5 at h_low, then halves it per qubit for a fixed number
of rounds, keeping the half on which the qubit's mean spin changes sign. The correction is the
negated midpoint, so that the calibrated qubit sees b_i − f_i ≈ 0.
"""

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeInt, PositiveInt

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.annealer.device import DeviceModel
from griffiths_sim.annealer.protocol import ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.quench import apply_quench, quenched_expected_spins
from griffiths_sim.annealer.samplers import ExactThermalSampler
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.errors import CalibrationError
from griffiths_sim.logging import logger

DEFAULT_ROUNDS = 20
DEFAULT_H_UP = 0.01
DEFAULT_H_LOW = -0.01
DEFAULT_MAX_FLUX = 1.0
DEFAULT_CALIBRATION_S_STAR = 0.6
# Read-outs per device call; the standard error of a centred mean read-out is then 0.005.
DEFAULT_CALIBRATION_SAMPLES = 40_000

# Mean read-out that ends the bracket expansion.
_EXPANSION_TARGET = 0.5


class CalibrationResult(BaseModel):
    """The calibrated device with the search's final brackets and call count."""

    device: DeviceModel
    h_up: FloatVector
    h_low: FloatVector
    expansions_up: NonNegativeInt
    expansions_low: NonNegativeInt
    device_calls: NonNegativeInt = Field(ge=1)
    bracket_widths: tuple[FloatVector, ...] = ()
    """h_up − h_low per qubit after the expansion and after every bisection round."""

    @property
    def flux_corrections(self) -> npt.NDArray[np.float64]:
        return self.device.flux_corrections.as_array()


class _ZeroProblemReader:
    """Runs the calibration's device calls: zero couplings, zero fields, trial flux per qubit."""

    def __init__(self, device: DeviceModel, protocol: ProtocolParams, schedule: Schedule, samples_per_call: int | None, seed: int) -> None:
        self.device = device
        self.protocol = protocol
        self.schedule = schedule
        self.samples_per_call = samples_per_call
        self.rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(device.instance.instance_id,)))
        self.sampler = ExactThermalSampler()
        self.calls = 0

    def __call__(self, flux: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        """Mean physical read-out m_i of each qubit at trial flux φ."""
        self.calls += 1
        beta, gamma = map_s_to_beta_gamma(self.schedule, self.protocol.s_star, self.device.temperature_k)
        problem = self.device.physical_problem(flux=flux, decoupled=True)
        with self.device.exclusive_session():
            if self.samples_per_call is None:
                return quenched_expected_spins(self.sampler.expected_spins(problem, beta, gamma), problem, self.device.quench_strength)
            spins = self.sampler.sample(problem, beta, gamma, self.samples_per_call, self.rng)
            apply_quench(spins, problem, self.device.quench_strength, self.rng)
        return spins.mean(axis=0, dtype=np.float64)


def _expand(reader: _ZeroProblemReader, bound: npt.NDArray[np.float64], sign: float, max_flux: float) -> tuple[npt.NDArray[np.float64], int]:
    doublings = 0
    while True:
        m = reader(bound)
        if sign * float(m.mean()) > _EXPANSION_TARGET:
            return bound, doublings
        if np.any(np.abs(2.0 * bound) > max_flux):
            stuck = tuple(int(i) for i in np.nonzero(sign * m <= 0.0)[0])
            side = "upper" if sign > 0 else "lower"
            err_msg = f"cannot bracket the {side} flux within |φ| ≤ {max_flux}; mean read-out {float(m.mean()):.3f}, qubits on the wrong side: {stuck}."
            logger.error("ANNEALER - %s", err_msg)
            raise CalibrationError(err_msg, stuck)
        bound = 2.0 * bound
        doublings += 1


def calibrate_flux_bias(
    device: DeviceModel,
    schedule: Schedule,
    h_up0: float = DEFAULT_H_UP,
    h_low0: float = DEFAULT_H_LOW,
    n_rounds: int = DEFAULT_ROUNDS,
    *,
    protocol: ProtocolParams | None = None,
    samples_per_call: int | None = DEFAULT_CALIBRATION_SAMPLES,
    max_flux: float = DEFAULT_MAX_FLUX,
    seed: int | None = None,
) -> CalibrationResult:
    """
    Find per-qubit flux corrections that zero each isolated qubit's mean spin.

    Args:
        device: The device to calibrate. Its existing corrections stay applied during the search.
        schedule: The annealing schedule.
        h_up0: Initial upper flux guess, positive.
        h_low0: Initial lower flux guess, negative.
        n_rounds: Number of bisection rounds.
        protocol: Protocol of the device calls. Defaults to a pause at s* = 0.6.
        samples_per_call: Runs averaged per device call; None uses the exact expected spins.
        max_flux: Largest flux magnitude the expansion may try.
        seed: Seed of the calibration runs. Defaults to the device seed.

    Returns:
        The result, whose device carries the accumulated corrections.

    Raises:
        ValueError: If h_up0 ≤ 0 or h_low0 ≥ 0.
        CalibrationError: If a bracket cannot be found within ``max_flux``.

    """
    if h_up0 <= 0.0 or h_low0 >= 0.0:
        err_msg = f"need h_up0 > 0 and h_low0 < 0, got {h_up0} and {h_low0}."
        raise ValueError(err_msg)
    protocol = protocol or ProtocolParams(s_star=DEFAULT_CALIBRATION_S_STAR)
    reader = _ZeroProblemReader(device, protocol, schedule, samples_per_call, device.seed if seed is None else seed)
    n_sites = device.n_sites

    h_up, expansions_up = _expand(reader, np.full(n_sites, h_up0), 1.0, max_flux)
    h_low, expansions_low = _expand(reader, np.full(n_sites, h_low0), -1.0, max_flux)
    logger.info("ANNEALER - bracket for %s after %d/%d doublings", device.instance.label, expansions_up, expansions_low)

    widths = [FloatVector((h_up - h_low).tolist())]
    for _ in range(n_rounds):
        pivot = 0.5 * (h_up + h_low)
        above = reader(pivot) > 0.0
        h_up = np.where(above, pivot, h_up)
        h_low = np.where(above, h_low, pivot)
        widths.append(FloatVector((h_up - h_low).tolist()))

    flux = 0.5 * (h_up + h_low)
    calibrated = device.with_flux_corrections(device.flux_corrections.as_array() - flux)
    logger.info("ANNEALER - calibrated %s with %d device calls, max |f| = %.4g", device.instance.label, reader.calls, float(np.abs(calibrated.flux_corrections.as_array()).max()))
    return CalibrationResult(
        device=calibrated,
        h_up=h_up,
        h_low=h_low,
        expansions_up=expansions_up,
        expansions_low=expansions_low,
        device_calls=reader.calls,
        bracket_widths=tuple(widths),
    )


class CalibrationCheck(BaseModel):
    """Mean read-out of every isolated qubit of one device, with J = 0 and h = 0, before and after calibration."""

    instance_id: str = Field(alias="instance")
    L: PositiveInt
    s_star: float = Field(gt=0.0, lt=1.0)
    before: FloatVector
    after: FloatVector

    def fraction_above(self, threshold: float, *, calibrated: bool) -> float:
        """Fraction of qubits with |⟨σ_i⟩| above ``threshold``."""
        means = (self.after if calibrated else self.before).as_array()
        return float(np.mean(np.abs(means) > threshold))


def zero_problem_means(
    device: DeviceModel,
    schedule: Schedule,
    protocol: ProtocolParams | None = None,
    *,
    n_runs: int | None = None,
    seed: int | None = None,
) -> npt.NDArray[np.float64]:
    """Mean read-out of each qubit with zero couplings, zero fields and no trial flux; exact when ``n_runs`` is None."""
    protocol = protocol or ProtocolParams(s_star=DEFAULT_CALIBRATION_S_STAR)
    reader = _ZeroProblemReader(device, protocol, schedule, n_runs, device.seed if seed is None else seed)
    return reader(np.zeros(device.n_sites))


def check_calibration(
    before: DeviceModel,
    after: DeviceModel,
    schedule: Schedule,
    protocol: ProtocolParams | None = None,
    *,
    n_runs: int | None = None,
) -> CalibrationCheck:
    """Compare the zero-problem read-outs of a device before and after calibration."""
    protocol = protocol or ProtocolParams(s_star=DEFAULT_CALIBRATION_S_STAR)
    return CalibrationCheck(
        instance_id=before.instance.label,
        L=before.instance.graph.L,
        s_star=protocol.s_star,
        before=zero_problem_means(before, schedule, protocol, n_runs=n_runs),
        after=zero_problem_means(after, schedule, protocol, n_runs=n_runs),
    )
