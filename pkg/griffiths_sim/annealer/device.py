# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The simulated annealing device.

A device holds one disorder instance, static intrinsic qubit biases b_i, flux-bias corrections f_i
and a quench strength q, all in device units. Intrinsic biases and corrections act on the
physical qubits. A gauge ε relabels the programmed problem: the physical qubits see couplings
ε_iε_jJ_ij and fields ε_ih_i, and a read-out physical spin σ′_i is reported as σ_i = ε_iσ′_i.
"""

from typing import Self, final

import numpy as np
import numpy.typing as npt
from pydantic import Field, PositiveFloat, model_validator

from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim._models.common.session_guarded import SessionGuarded
from griffiths_sim.annealer.protocol import DEFAULT_TEMPERATURE_K, DEVICE_TO_QMC_SCALE
from griffiths_sim.lattice.disorder import MAX_SEED, DisorderInstance
from griffiths_sim.logging import logger
from griffiths_sim.qmc.hamiltonian import IsingProblem

DEFAULT_BIAS_HALF_WIDTH = 0.05

# Quench strength of the smallest lattice; larger lattices get proportionally less distortion.
_BASE_QUENCH_STRENGTH = 0.3


class DeviceModel(SessionGuarded):
    """
    A simulated device programmed with one instance.

    Attributes:
        instance: The programmed disorder instance.
        biases: Intrinsic longitudinal bias b_i of each physical qubit.
        flux_corrections: Correction f_i of each physical qubit; the qubit sees b_i − f_i.
        temperature_k: Physical temperature of the chip.
        quench_strength: Probability that a sample relaxes to a classical local minimum during the quench.
        seed: Seed of the device's random streams.
        gauge: ε_i per qubit; empty means the identity gauge.

    """

    instance: DisorderInstance
    biases: FloatVector
    flux_corrections: FloatVector
    temperature_k: PositiveFloat = DEFAULT_TEMPERATURE_K
    quench_strength: float = Field(default=0.0, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    gauge: tuple[int, ...] = ()

    @model_validator(mode="after")
    def vectors_match_instance(self) -> Self:
        n_sites = self.instance.n_sites
        if len(self.biases) != n_sites or len(self.flux_corrections) != n_sites:
            err_msg = f"biases and flux corrections need one entry per qubit ({n_sites})."
            raise ValueError(err_msg)
        if self.gauge and (len(self.gauge) != n_sites or any(e not in {-1, 1} for e in self.gauge)):
            err_msg = "the gauge needs one ±1 entry per qubit."
            raise ValueError(err_msg)
        return self

    @property
    def n_sites(self) -> int:
        return self.instance.n_sites

    def gauge_array(self) -> npt.NDArray[np.int8]:
        return np.asarray(self.gauge, dtype=np.int8) if self.gauge else np.ones(self.n_sites, dtype=np.int8)

    def logical_biases(self) -> npt.NDArray[np.float64]:
        """The intrinsic biases as seen in the logical frame, ε_i·b_i."""
        return self.gauge_array() * self.biases.as_array()

    def effective_biases(self) -> npt.NDArray[np.float64]:
        """b_i − f_i on the physical qubits."""
        return self.biases.as_array() - self.flux_corrections.as_array()

    def physical_problem(self, h_field: npt.ArrayLike | None = None, flux: npt.ArrayLike | None = None, *, decoupled: bool = False) -> IsingProblem:
        """
        The classical part of the Hamiltonian the physical qubits see, in QMC units.

        Args:
            h_field: Programmed longitudinal field per logical site (device units), zero if omitted.
            flux: Additional trial flux per physical qubit, used by calibration.
            decoupled: Program zero couplings, as calibration does.

        """
        epsilon = self.gauge_array().astype(np.float64)
        edges = self.instance.graph.edge_array()
        couplings = np.zeros(len(edges)) if decoupled else epsilon[edges[:, 0]] * epsilon[edges[:, 1]] * self.instance.coupling_array()
        programmed = np.zeros(self.n_sites) if h_field is None else np.broadcast_to(np.asarray(h_field, dtype=np.float64), (self.n_sites,))
        fields = epsilon * programmed + self.effective_biases()
        if flux is not None:
            fields = fields + np.asarray(flux, dtype=np.float64)
        problem = IsingProblem.from_instance(self.instance)
        return problem.with_couplings(DEVICE_TO_QMC_SCALE * couplings).with_fields(DEVICE_TO_QMC_SCALE * fields)

    def to_logical(self, physical_spins: npt.NDArray[np.int8]) -> npt.NDArray[np.int8]:
        """Map physical read-outs (rows are samples) back to the logical frame."""
        return (physical_spins * self.gauge_array()[None, :]).astype(np.int8)

    def with_flux_corrections(self, corrections: npt.ArrayLike) -> "DeviceModel":
        return DeviceModel(**{**self._field_values(), "flux_corrections": np.asarray(corrections, dtype=np.float64)})

    def _field_values(self) -> dict[str, object]:
        return {name: getattr(self, name) for name in type(self).model_fields}


def gauge_transform(device: DeviceModel, epsilon: npt.ArrayLike) -> DeviceModel:
    """
    Apply the gauge ε on top of the device's current gauge.

    Couplings become ε_iε_jJ_ij and the logical-frame biases ε_ib_i; samples are mapped back by ε.

    Raises:
        ValueError: If an entry of ε is not ±1.

    """
    eps = np.asarray(epsilon, dtype=np.int64)
    eps = np.broadcast_to(eps, (device.n_sites,)) if eps.ndim == 0 else eps
    if eps.shape != (device.n_sites,) or np.any(np.abs(eps) != 1):
        err_msg = "the gauge must be one ±1 entry per qubit."
        raise ValueError(err_msg)
    composed = tuple(int(v) for v in eps * device.gauge_array())
    return DeviceModel(**{**device._field_values(), "gauge": composed})  # noqa: SLF001


def random_gauge(n_sites: int, rng: np.random.Generator) -> npt.NDArray[np.int8]:
    return (2 * rng.integers(0, 2, size=n_sites) - 1).astype(np.int8)


def default_quench_strength(L: int) -> float:
    """Quench strength for lattice size L; small lattices are distorted more."""
    return min(1.0, _BASE_QUENCH_STRENGTH / L)


@final
class DeviceFactory:
    """Factory which can be used to create simulated devices."""

    @staticmethod
    def create(
        instance: DisorderInstance,
        *,
        seed: int,
        bias_half_width: float = DEFAULT_BIAS_HALF_WIDTH,
        temperature_k: float = DEFAULT_TEMPERATURE_K,
        quench_strength: float | None = None,
    ) -> DeviceModel:
        """
        Creates a device with intrinsic biases drawn uniformly from [−w, w] and no corrections.

        Args:
            instance (DisorderInstance): The instance programmed into the device.
            seed (int): Seed of the bias draw; the same seed regenerates the same biases.
            bias_half_width (float): Half-width w of the bias distribution. Defaults to 0.05.
            temperature_k (float): Physical temperature. Defaults to 12 mK.
            quench_strength (float | None): Quench strength q. Defaults to the size-dependent default.

        Returns:
            DeviceModel: The uncalibrated device.

        """
        if bias_half_width < 0.0:
            err_msg = f"bias half-width must be non-negative, got {bias_half_width}."
            raise ValueError(err_msg)
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(instance.instance_id,)))
        biases = rng.uniform(-bias_half_width, bias_half_width, size=instance.n_sites)
        q = default_quench_strength(instance.graph.L) if quench_strength is None else quench_strength
        logger.debug("ANNEALER - device for %s with bias half-width %g and q=%g", instance.label, bias_half_width, q)
        return DeviceModel(
            instance=instance,
            biases=biases,
            flux_corrections=np.zeros(instance.n_sites),
            temperature_k=temperature_k,
            quench_strength=q,
            seed=seed,
        )


