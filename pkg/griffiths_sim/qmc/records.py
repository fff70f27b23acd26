# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from typing import Self

import numpy as np
from pydantic import Field, NonNegativeFloat, NonNegativeInt, PositiveFloat, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector

# Slack for the moment inequalities, which hold for every sample and hence for exact averages.
_BOUND_TOLERANCE = 1e-12


class MomentRecord(BaseModel):
    """
    Thermal averages of one chain for one (instance, β, Γ) cell.

    The record log key of the instance is ``instance``. ``m`` is the space-time averaged
    magnetization and ``m_i`` the Trotter-averaged magnetization of site i.

    Attributes:
        instance_id: Label of the disorder instance.
        L: Linear size of the lattice.
        beta: Inverse temperature.
        gamma: Transverse field.
        M: Number of Trotter slices.
        n_meas: Number of measurements that entered the averages.
        m_abs: ⟨|m|⟩.
        m2: ⟨m²⟩.
        m4: ⟨m⁴⟩.
        mi2: ⟨m_i²⟩ for every site.
        mi4: ⟨m_i⁴⟩ for every site.
        seed: Seed of the chain's random stream.
        acceptance_rate: Fraction of accepted Metropolis proposals.

    """

    instance_id: str = Field(alias="instance")
    L: PositiveInt
    beta: PositiveFloat
    gamma: NonNegativeFloat
    M: PositiveInt
    n_meas: PositiveInt
    m_abs: float = Field(ge=0.0, le=1.0)
    m2: float = Field(ge=0.0, le=1.0)
    m4: float = Field(ge=0.0, le=1.0)
    mi2: FloatVector
    mi4: FloatVector
    m_abs_err: NonNegativeFloat = 0.0
    m2_err: NonNegativeFloat = 0.0
    m4_err: NonNegativeFloat = 0.0
    mi2_err: FloatVector = FloatVector()
    mi4_err: FloatVector = FloatVector()
    seed: NonNegativeInt = 0
    acceptance_rate: float = Field(default=0.0, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def moments_are_ordered(self) -> Self:
        """Validate ⟨m⁴⟩ ≤ ⟨m²⟩ and the per-site bounds, which follow from |m| ≤ 1."""
        if self.m4 > self.m2 + _BOUND_TOLERANCE:
            err_msg = f"⟨m⁴⟩ = {self.m4} exceeds ⟨m²⟩ = {self.m2}."
            raise ValueError(err_msg)
        mi2 = self.mi2.as_array()
        mi4 = self.mi4.as_array()
        if mi2.shape != mi4.shape:
            err_msg = "mi2 and mi4 must have the same length."
            raise ValueError(err_msg)
        if np.any(mi2 < 0.0) or np.any(mi2 > 1.0 + _BOUND_TOLERANCE) or np.any(mi4 > mi2 + _BOUND_TOLERANCE):
            err_msg = "per-site moments violate 0 ≤ ⟨m_i⁴⟩ ≤ ⟨m_i²⟩ ≤ 1."
            raise ValueError(err_msg)
        for name in ("mi2_err", "mi4_err"):
            errors = getattr(self, name)
            if errors and len(errors) != mi2.size:
                err_msg = f"{name} must be empty or have one entry per site."
                raise ValueError(err_msg)
        return self

    @property
    def n_sites(self) -> int:
        return len(self.mi2)

    def jensen_gap(self) -> float:
        """⟨m⁴⟩ − ⟨m²⟩², non-negative up to statistical error."""
        return self.m4 - self.m2 * self.m2
