# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Susceptibilities of a device instance from the magnetization curve m(h)."""

import warnings

import numpy as np
import numpy.typing as npt
from pydantic import Field, PositiveFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.analysis.magnetization import MagnetizationFit, fit_magnetization_curve
from griffiths_sim.annealer.apq import expected_magnetization, sample_apq
from griffiths_sim.annealer.device import DeviceModel
from griffiths_sim.annealer.protocol import DEVICE_TO_QMC_SCALE, ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.samplers import ThermalSampler
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.logging import logger

DEFAULT_FIELD_POINTS = 9

# Target bound on |χh| over the default grid, which keeps m(h) in the cubic regime.
_LINEAR_RESPONSE_BOUND = 0.5

# |m| above which a point counts as saturated.
_SATURATION = 1.0 - 1e-6


class FieldSweepResult(BaseModel):
    """χ and χ_nl of one instance at one pause point, with the curve they were fitted to."""

    instance_id: str = Field(alias="instance")
    L: int
    s_star: float
    chi: float
    chi_nl: float
    fields: FloatVector
    magnetizations: FloatVector
    fit: MagnetizationFit
    saturated: bool


def default_field_grid(beta: float, n_points: int = DEFAULT_FIELD_POINTS, chi_bound: PositiveFloat | None = None) -> npt.NDArray[np.float64]:
    """
    Symmetric field grid (device units) with |χh| ≤ 0.5 for susceptibilities up to ``chi_bound``.

    The default bound is the free-spin maximum of dm/dh, 2β in device units.
    """
    bound = chi_bound if chi_bound is not None else DEVICE_TO_QMC_SCALE * beta
    return np.linspace(-1.0, 1.0, n_points) * (_LINEAR_RESPONSE_BOUND / bound)


def field_sweep_susceptibility(
    device: DeviceModel,
    protocol: ProtocolParams,
    schedule: Schedule,
    fields: npt.ArrayLike | None = None,
    *,
    sampler: ThermalSampler | None = None,
    degree: int = 3,
    expectation: bool = False,
    seed: int | None = None,
) -> FieldSweepResult:
    """
    Measure m(h) on a uniform-field grid and fit m ≃ χh − χ_nl h³.

    With ``expectation`` the exact expected magnetization replaces the N_rep-run average. A curve
    that is saturated (|m| ≈ 1) over the whole grid is flagged and warned about; its fitted χ is ≈ 0.
    """
    beta, _ = map_s_to_beta_gamma(schedule, protocol.s_star, device.temperature_k)
    grid = default_field_grid(beta) if fields is None else np.asarray(fields, dtype=np.float64)
    magnetizations = np.empty(grid.size)
    for k, h in enumerate(grid):
        if expectation:
            magnetizations[k] = float(expected_magnetization(device, protocol, schedule, h, sampler=sampler).mean())
        else:
            base_seed = device.seed if seed is None else seed
            samples = sample_apq(device, protocol, schedule, h, sampler=sampler, seed=base_seed + k)
            magnetizations[k] = float(samples.magnetizations().mean())

    fit = fit_magnetization_curve(grid, magnetizations, degree=degree)
    saturated = bool(np.all(np.abs(magnetizations) >= _SATURATION))
    if saturated:
        warnings.warn(f"magnetization of {device.instance.label} is saturated over the whole field grid.", RuntimeWarning, stacklevel=2)
        logger.warning("ANNEALER - saturated magnetization curve for %s at s*=%g", device.instance.label, protocol.s_star)
    return FieldSweepResult(
        instance_id=device.instance.label,
        L=device.instance.graph.L,
        s_star=protocol.s_star,
        chi=fit.chi,
        chi_nl=fit.chi_nl,
        fields=grid,
        magnetizations=magnetizations,
        fit=fit,
        saturated=saturated,
    )
