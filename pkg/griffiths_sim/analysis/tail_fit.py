# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Power-law tail fits of susceptibility histograms and their conversion to d/z′.

A Griffiths phase gives ln P(χ_loc) ≃ −(d/z′ + 1) ln χ_loc for the linear local susceptibility
and ln P(χ_nl) ≃ −(d/(3z′) + 1) ln χ_nl for the nonlinear one.
"""

import math
from collections.abc import Mapping
from enum import StrEnum
from typing import Self

import numpy as np
from pydantic import Field, NonNegativeFloat, PositiveFloat, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.analysis.histogram import Histogram
from griffiths_sim.errors import FitError
from griffiths_sim.logging import logger

SPATIAL_DIMENSION = 2
"""d of the diluted Chimera graph, which is quasi-two-dimensional."""

_MIN_FIT_POINTS = 3


class FitRangePolicy(BaseModel):
    """
    Which histogram bins enter a tail fit.

    The fit starts at ``start_factor`` times the peak position and runs right until the first bin
    whose density is at or below ``density_floor`` or whose count is below ``min_count``.
    """

    start_factor: PositiveFloat = 0.8
    density_floor: NonNegativeFloat = 1e-4
    min_count: PositiveInt = 10

    @classmethod
    def qmc(cls) -> "FitRangePolicy":
        return cls(density_floor=1e-4)

    @classmethod
    def device(cls) -> "FitRangePolicy":
        return cls(density_floor=1e-2)


class SlopeFit(BaseModel):
    """Weighted least-squares slope of ln P against ln x over ``[x_lo, x_hi]``."""

    slope: float
    slope_error: NonNegativeFloat
    intercept: float
    x_lo: PositiveFloat
    x_hi: PositiveFloat
    n_points: int = Field(ge=_MIN_FIT_POINTS)
    policy: FitRangePolicy

    @model_validator(mode="after")
    def range_is_ordered(self) -> Self:
        if self.x_lo >= self.x_hi:
            err_msg = f"fit range [{self.x_lo}, {self.x_hi}] is empty."
            raise ValueError(err_msg)
        return self


class SusceptibilityKind(StrEnum):
    LINEAR = "linear"
    NONLINEAR = "nonlinear"


class ExponentEstimate(BaseModel):
    """d/z′ with its error, the susceptibility it came from and the control parameter (Γ or s*)."""

    d_over_zprime: float
    error: NonNegativeFloat
    source: SusceptibilityKind
    control: float | None = None

    @property
    def z_prime(self) -> float:
        """z′ for d = ``SPATIAL_DIMENSION``."""
        return SPATIAL_DIMENSION / self.d_over_zprime if self.d_over_zprime else math.inf


def _fit_bins(histogram: Histogram, policy: FitRangePolicy) -> np.ndarray:
    centers = histogram.centers()
    density = histogram.density.as_array()
    counts = np.asarray(histogram.counts)
    start = policy.start_factor * centers[histogram.peak_index()]
    selected: list[int] = []
    for k in np.nonzero(centers >= start)[0]:
        if density[k] <= policy.density_floor or counts[k] < policy.min_count:
            break
        selected.append(int(k))
    return np.asarray(selected, dtype=np.int64)


def fit_tail_slope(histogram: Histogram, policy: FitRangePolicy | None = None) -> SlopeFit:
    """
    Fit ln P = a ln x + c over the tail of ``histogram``.

    Each bin is weighted by the multinomial error of its log-density, σ_lnP = sqrt((1 − p)/n_k),
    where n_k is the bin count and p = n_k / n.

    Raises:
        FitError: If fewer than three bins survive the fit-range policy.

    """
    policy = policy or FitRangePolicy.qmc()
    bins = _fit_bins(histogram, policy)
    if bins.size < _MIN_FIT_POINTS:
        logger.error("ANALYSIS - only %d usable bins for the tail fit", bins.size)
        err_msg = f"need at least {_MIN_FIT_POINTS} usable bins for a tail fit, got {bins.size}."
        raise FitError(err_msg)

    centers = histogram.centers()[bins]
    counts = np.asarray(histogram.counts, dtype=np.float64)[bins]
    fraction = counts / histogram.n_samples
    sigma = np.sqrt(np.clip(1.0 - fraction, 1e-12, None) / counts)
    x = np.log(centers)
    y = np.log(histogram.density.as_array()[bins])
    coefficients, covariance = np.polyfit(x, y, 1, w=1.0 / sigma, cov="unscaled")
    edges = histogram.edges.as_array()
    fit = SlopeFit(
        slope=float(coefficients[0]),
        slope_error=math.sqrt(max(float(covariance[0, 0]), 0.0)),
        intercept=float(coefficients[1]),
        x_lo=float(edges[bins[0]]),
        x_hi=float(edges[bins[-1] + 1]),
        n_points=bins.size,
        policy=policy,
    )
    logger.debug("ANALYSIS - tail slope %.4f ± %.4f over %d bins", fit.slope, fit.slope_error, fit.n_points)
    return fit


def dz_from_linear_slope(fit: SlopeFit, control: float | None = None) -> ExponentEstimate:
    """
    d/z′ = −slope − 1.

    >>> fit = SlopeFit(slope=-13.83, slope_error=0.15, intercept=0.0, x_lo=1.0, x_hi=2.0, n_points=5, policy=FitRangePolicy())
    >>> round(dz_from_linear_slope(fit).d_over_zprime, 2)
    12.83
    """
    return ExponentEstimate(d_over_zprime=-fit.slope - 1.0, error=fit.slope_error, source=SusceptibilityKind.LINEAR, control=control)


def dz_from_nonlinear_slope(fit: SlopeFit, control: float | None = None) -> ExponentEstimate:
    """d/z′ = 3(−slope − 1)."""
    return ExponentEstimate(d_over_zprime=3.0 * (-fit.slope - 1.0), error=3.0 * fit.slope_error, source=SusceptibilityKind.NONLINEAR, control=control)


def size_dependent_slope(fits: Mapping[int, SlopeFit]) -> SlopeFit:
    """
    Pick the slope of the largest system size.

    Finite-size effects make the slope steepen with L, so the largest-L slope bounds the
    infinite-size slope from below.
    """
    if not fits:
        err_msg = "no slope fits given."
        raise FitError(err_msg)
    largest = max(fits)
    logger.info("ANALYSIS - slopes by size %s, reporting L=%d", {L: round(fit.slope, 3) for L, fit in sorted(fits.items())}, largest)
    return fits[largest]
