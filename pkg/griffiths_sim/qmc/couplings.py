# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Couplings of the classical (d+1)-dimensional model obtained from the Suzuki-Trotter decomposition."""

import math
from typing import Self

import numpy as np
from pydantic import Field, PositiveFloat, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.lattice.chimera import Edge
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.qmc.hamiltonian import IsingProblem

# Below this argument ln coth(x) is evaluated from its series to avoid cancellation.
_SMALL_ARGUMENT = 1e-4


def trotter_coupling(beta: float, gamma: float, M: int) -> float:
    """
    Return the imaginary-time coupling (1/2) ln coth(βΓ/M).

    >>> round(trotter_coupling(50.0, 1.79, 150), 3)
    0.313

    Raises:
        ValueError: If βΓ/M is not positive or the coupling underflows to zero.

    """
    x = beta * gamma / M
    if not x > 0.0 or not math.isfinite(x):
        err_msg = f"the Trotter coupling needs 0 < βΓ/M < inf, got {x} (use the classical oracle for Γ = 0)."
        raise ValueError(err_msg)
    if x < _SMALL_ARGUMENT:
        return 0.5 * (-math.log(x) + x * x / 3.0)
    q = math.exp(-2.0 * x)
    coupling = 0.5 * (math.log1p(q) - math.log1p(-q))
    if coupling <= 0.0:
        err_msg = f"the Trotter coupling underflows for βΓ/M = {x}; increase M."
        raise ValueError(err_msg)
    return coupling


class EffectiveCouplings(BaseModel):
    """
    Dimensionless couplings of the path action.

    The action is S = Σ_t [Σ_edges k_ij σ_i(t)σ_j(t) − Σ_i k_h,i σ_i(t)] − k_trotter Σ_i Σ_t σ_i(t)σ_i(t+1),
    with path weight e^{−S}.
    """

    beta: PositiveFloat
    gamma: PositiveFloat
    M: PositiveInt = Field(ge=2)
    n_sites: PositiveInt
    edges: tuple[Edge, ...]
    colors: tuple[int, ...]
    k_spatial: FloatVector
    k_field: FloatVector
    k_trotter: PositiveFloat

    @model_validator(mode="after")
    def shapes_are_consistent(self) -> Self:
        if len(self.k_spatial) != len(self.edges):
            err_msg = "k_spatial needs one entry per edge."
            raise ValueError(err_msg)
        if len(self.k_field) != self.n_sites or len(self.colors) != self.n_sites:
            err_msg = "k_field and colors need one entry per site."
            raise ValueError(err_msg)
        if not math.isfinite(self.k_trotter):
            err_msg = "k_trotter must be finite."
            raise ValueError(err_msg)
        return self

    @property
    def bond_probability(self) -> float:
        """Probability 1 − e^{−2 k_trotter} of activating an imaginary-time bond between equal spins."""
        return -math.expm1(-2.0 * self.k_trotter)


def effective_couplings(beta: float, gamma: float, M: int, instance: DisorderInstance | IsingProblem) -> EffectiveCouplings:
    """
    Map (β, Γ, M) and a problem to the couplings of the path action.

    The spatial couplings are βJ_ij/M, the field couplings βh_i/M and the Trotter coupling
    (1/2) ln coth(βΓ/M), shared by all imaginary-time bonds.

    Raises:
        ValueError: If β ≤ 0, M < 2 or Γ ≤ 0.

    """
    if beta <= 0.0 or M < 2:  # noqa: PLR2004
        err_msg = f"need β > 0 and M ≥ 2, got β={beta}, M={M}."
        raise ValueError(err_msg)
    problem = instance if isinstance(instance, IsingProblem) else IsingProblem.from_instance(instance)
    scale = beta / M
    return EffectiveCouplings(
        beta=beta,
        gamma=gamma,
        M=M,
        n_sites=problem.n_sites,
        edges=problem.edges,
        colors=problem.colors,
        k_spatial=scale * problem.couplings.as_array(),
        k_field=scale * problem.fields.as_array(),
        k_trotter=trotter_coupling(beta, gamma, M),
    )


def path_action(spins: np.ndarray, couplings: EffectiveCouplings) -> float:
    """Evaluate the path action S of one (N, M) configuration."""
    configuration = np.asarray(spins, dtype=np.float64)
    edges = np.asarray(couplings.edges, dtype=np.int64).reshape(-1, 2)
    spatial = float(np.sum(couplings.k_spatial.as_array()[:, None] * configuration[edges[:, 0]] * configuration[edges[:, 1]]))
    field = float(np.sum(couplings.k_field.as_array()[:, None] * configuration))
    temporal = float(np.sum(configuration * np.roll(configuration, -1, axis=1)))
    return spatial - field - couplings.k_trotter * temporal
