# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import numpy.typing as npt
from pydantic import NonNegativeFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.errors import FitError


class ExtrapolationResult(BaseModel):
    """Weighted straight-line fit y = intercept + slope·x."""

    intercept: float
    intercept_error: NonNegativeFloat
    slope: float
    slope_error: NonNegativeFloat
    chi2: NonNegativeFloat
    n_points: int

    def value_at(self, x: float) -> float:
        return self.intercept + self.slope * x


def linear_extrapolate(x: npt.ArrayLike, y: npt.ArrayLike, y_err: npt.ArrayLike | None = None) -> ExtrapolationResult:
    """
    Extrapolate a weighted linear fit to x = 0.

    Used for Γ_c(T) → T = 0 and for peak positions against 1/L.

    Raises:
        FitError: With fewer than two points or when all x coincide.

    >>> result = linear_extrapolate([1.0, 2.0], [3.0, 5.0])
    >>> round(result.intercept, 9), round(result.slope, 9)
    (1.0, 2.0)
    """
    xs = np.asarray(x, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    errors = np.ones_like(ys) if y_err is None else np.asarray(y_err, dtype=np.float64)
    if xs.size < 2 or xs.shape != ys.shape or errors.shape != ys.shape:  # noqa: PLR2004
        err_msg = "need at least two (x, y, y_err) points of matching shape."
        raise FitError(err_msg)
    if np.ptp(xs) == 0.0:
        err_msg = "all x values coincide; the line is undetermined."
        raise FitError(err_msg)
    if np.any(errors <= 0.0):
        err_msg = "y errors must be positive."
        raise FitError(err_msg)

    weights = 1.0 / errors**2
    design = np.column_stack([np.ones_like(xs), xs])
    normal = design.T @ (weights[:, None] * design)
    covariance = np.linalg.inv(normal)
    intercept, slope = covariance @ (design.T @ (weights * ys))
    residuals = ys - (intercept + slope * xs)
    return ExtrapolationResult(
        intercept=float(intercept),
        intercept_error=math.sqrt(max(float(covariance[0, 0]), 0.0)),
        slope=float(slope),
        slope_error=math.sqrt(max(float(covariance[1, 1]), 0.0)),
        chi2=float(np.sum(weights * residuals**2)),
        n_points=xs.size,
    )
