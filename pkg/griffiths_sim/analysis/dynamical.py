# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Dynamical-exponent scan.

At the critical point the Binder ratio depends on β and L through β/L^z, and ln g is well
described by a concave quadratic in u = ln(β/L^z). For each trial z the quadratic is fitted by
least squares; the best z minimizes the mean squared residual.
"""

import warnings
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from pydantic import NonNegativeFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.errors import FitError
from griffiths_sim.logging import logger

MIN_GRID_POINTS = 5

_MIN_DATA_POINTS = 3


class ZScan(BaseModel):
    """
    MSE of the quadratic fit for every trial z.

    ``concave`` is False when the best quadratic opens upwards (a > 0), which contradicts the
    assumed shape of the master curve.
    """

    z_star: float
    mse_at_z_star: NonNegativeFloat
    z_grid: FloatVector
    mse: FloatVector
    quadratic: FloatVector
    concave: bool
    coarse_grid: bool


def _quadratic_fit(u: npt.NDArray[np.float64], log_g: npt.NDArray[np.float64]) -> tuple[npt.NDArray[np.float64], float]:
    coefficients = np.polyfit(u, log_g, 2)
    residuals = log_g - np.polyval(coefficients, u)
    return coefficients, float(np.mean(residuals**2))


def scan_dynamical_z(points: Sequence[tuple[float, int, float]], z_grid: npt.ArrayLike) -> ZScan:
    """
    Scan z over ``z_grid`` for Binder values g(β, L) at the critical point.

    Args:
        points: (β, L, g) triples with g > 0.
        z_grid: The trial dynamical exponents.

    Raises:
        FitError: With fewer than three points, non-positive g, or fewer than three distinct
            β/L^z at the best z.

    """
    grid = np.asarray(z_grid, dtype=np.float64)
    if grid.size == 0:
        err_msg = "the z grid is empty."
        raise FitError(err_msg)
    if len(points) < _MIN_DATA_POINTS:
        err_msg = f"need at least {_MIN_DATA_POINTS} (β, L) points, got {len(points)}."
        raise FitError(err_msg)
    data = np.asarray(points, dtype=np.float64)
    beta, size, g = data[:, 0], data[:, 1], data[:, 2]
    if np.any(g <= 0.0) or np.any(beta <= 0.0):
        err_msg = "β and g must be positive."
        raise FitError(err_msg)
    coarse = grid.size < MIN_GRID_POINTS
    if coarse:
        warnings.warn(f"z grid has only {grid.size} values; the minimum is poorly resolved.", RuntimeWarning, stacklevel=2)

    log_g = np.log(g)
    fits = [_quadratic_fit(np.log(beta) - z * np.log(size), log_g) for z in grid]
    mse = np.array([m for _, m in fits])
    best = int(np.argmin(mse))
    u_best = np.log(beta) - grid[best] * np.log(size)
    if np.unique(np.round(u_best, 12)).size < _MIN_DATA_POINTS:
        err_msg = "fewer than three distinct β/L^z values at the best z."
        raise FitError(err_msg)
    coefficients = fits[best][0]
    concave = bool(coefficients[0] < 0.0)
    if not concave:
        warnings.warn("the best quadratic is convex (a > 0), inconsistent with a concave master curve.", RuntimeWarning, stacklevel=2)
    logger.info("ANALYSIS - z scan minimum at z=%.3f (MSE %.3g)", grid[best], mse[best])
    return ZScan(
        z_star=float(grid[best]),
        mse_at_z_star=float(mse[best]),
        z_grid=grid,
        mse=mse,
        quadratic=coefficients,
        concave=concave,
        coarse_grid=coarse,
    )
