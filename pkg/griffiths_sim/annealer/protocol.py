# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Anneal-pause-quench protocol parameters and the mapping of the pause point to QMC units.

The device Hamiltonian H(s) = −A(s)/2 Σσˣ + B(s)/2 (Σ J σᶻσᶻ − Σ h σᶻ) at physical temperature T
has the same Boltzmann weight as the QMC Hamiltonian with β = B(s)/(4 k_B T) (B as an energy),
Γ = 2A(s)/B(s), and couplings and fields equal to twice the device values.
"""

from pydantic import Field, PositiveFloat, PositiveInt
from scipy.constants import Boltzmann, Planck

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.annealer.schedule import Schedule

DEFAULT_TEMPERATURE_K = 0.012

DEVICE_TO_QMC_SCALE = 2.0
"""Factor converting device couplings and fields to QMC units."""

_GHZ = 1e9


class ProtocolParams(BaseModel):
    """
    Timing of one anneal-pause-quench run, in microseconds.

    The anneal to s* takes ``anneal_us_per_unit_s``·s*, the pause ``pause_us`` and the quench
    ``quench_us_per_unit_s``·(1 − s*).
    """

    s_star: float = Field(gt=0.0, lt=1.0)
    n_rep: PositiveInt = 100
    anneal_us_per_unit_s: PositiveFloat = 1000.0
    pause_us: PositiveFloat = 100.0
    quench_us_per_unit_s: PositiveFloat = 1.0
    interval_us: PositiveFloat = 200.0

    @property
    def t1(self) -> float:
        """End of the anneal."""
        return self.anneal_us_per_unit_s * self.s_star

    @property
    def t2(self) -> float:
        """End of the pause."""
        return self.t1 + self.pause_us

    @property
    def tf(self) -> float:
        """End of the quench."""
        return self.t2 + self.quench_us_per_unit_s * (1.0 - self.s_star)

    def at(self, s_star: float) -> "ProtocolParams":
        return self.model_copy(update={"s_star": ProtocolParams(s_star=s_star).s_star})


def map_s_to_beta_gamma(schedule: Schedule, s_star: float, temperature_k: float = DEFAULT_TEMPERATURE_K) -> tuple[float, float]:
    """
    (β, Γ) of the pause point in QMC units.

    Raises:
        ValueError: If s* lies outside the schedule, B(s*) ≤ 0 or T ≤ 0.

    """
    if temperature_k <= 0.0:
        err_msg = f"the physical temperature must be positive, got {temperature_k} K."
        raise ValueError(err_msg)
    a_ghz, b_ghz = schedule.amplitudes(s_star)
    if b_ghz <= 0.0:
        err_msg = f"B(s*) must be positive, got {b_ghz} GHz at s* = {s_star}."
        raise ValueError(err_msg)
    beta = Planck * b_ghz * _GHZ / (4.0 * Boltzmann * temperature_k)
    gamma = 2.0 * a_ghz / b_ghz
    return beta, gamma
