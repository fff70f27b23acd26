# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Finite-size-scaling collapse.

Curves y_L(x) are rescaled as x → L^{1/ν}(x − x_c) and y → y·L^{y_exponent}, where the exponent is
0 for the Binder ratio, −γ/ν for the susceptibility and +β/ν for the magnetization. The collapse
quality S compares every rescaled point with a local weighted linear fit through the points of
the other sizes.
"""

import math
import warnings
from collections.abc import Callable, Sequence
from enum import StrEnum
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import NonNegativeFloat, PositiveFloat, PositiveInt, model_validator
from scipy.optimize import brentq, minimize

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.errors import FitError
from griffiths_sim.logging import logger

BANDWIDTH_FACTOR = 1.5

# Objective value for parameters where the collapse is undefined.
_UNDEFINED_QUALITY = 1e12

_MAX_ITERATIONS = 4000


class ScalingObservable(StrEnum):
    BINDER = "binder"
    SUSCEPTIBILITY = "susceptibility"
    MAGNETIZATION = "magnetization"


class ScalingCurve(BaseModel):
    """One observable versus the control parameter (Γ or s*) at system size L."""

    L: PositiveInt
    x: FloatVector
    y: FloatVector
    y_err: FloatVector

    @model_validator(mode="after")
    def lengths_match(self) -> Self:
        if not len(self.x) == len(self.y) == len(self.y_err):
            err_msg = "x, y and y_err need the same length."
            raise ValueError(err_msg)
        if np.any(self.y_err.as_array() <= 0.0):
            err_msg = "y errors must be positive."
            raise ValueError(err_msg)
        return self


class CollapseSearchBox(BaseModel):
    """Bounds of the collapse parameters. ``exponent`` is γ or β_mag; leave it unset for the Binder ratio."""

    x_c: tuple[float, float]
    nu: tuple[PositiveFloat, PositiveFloat]
    exponent: tuple[float, float] | None = None

    @model_validator(mode="after")
    def bounds_are_ordered(self) -> Self:
        for name in ("x_c", "nu", "exponent"):
            bounds = getattr(self, name)
            if bounds is not None and bounds[0] >= bounds[1]:
                err_msg = f"{name} bounds {bounds} are empty."
                raise ValueError(err_msg)
        return self

    def bounds(self) -> list[tuple[float, float]]:
        return [self.x_c, self.nu] + ([self.exponent] if self.exponent is not None else [])

    def center(self) -> npt.NDArray[np.float64]:
        return np.array([(lo + hi) / 2.0 for lo, hi in self.bounds()])


class ScalingFit(BaseModel):
    """
    Collapse parameters with errors from the S_min + 1 contour.

    ``exponent`` is γ for a susceptibility collapse and β_mag for a magnetization collapse.
    """

    observable: ScalingObservable
    x_c: float
    x_c_error: NonNegativeFloat
    nu: PositiveFloat
    nu_error: NonNegativeFloat
    exponent: float | None = None
    exponent_error: NonNegativeFloat | None = None
    quality: NonNegativeFloat
    converged: bool = True


def _y_exponent(observable: ScalingObservable, nu: float, exponent: float | None) -> float:
    if observable is ScalingObservable.BINDER:
        return 0.0
    if exponent is None:
        err_msg = f"a {observable} collapse needs its exponent."
        raise ValueError(err_msg)
    sign = -1.0 if observable is ScalingObservable.SUSCEPTIBILITY else 1.0
    return sign * exponent / nu


def _rescale(curves: Sequence[ScalingCurve], x_c: float, nu: float, y_exponent: float) -> list[tuple[npt.NDArray[np.float64], ...]]:
    rescaled = []
    for curve in curves:
        x_scale = curve.L ** (1.0 / nu)
        y_scale = curve.L**y_exponent
        x = x_scale * (curve.x.as_array() - x_c)
        order = np.argsort(x)
        rescaled.append((x[order], y_scale * curve.y.as_array()[order], y_scale * curve.y_err.as_array()[order]))
    return rescaled


def _local_linear(x0: float, x: npt.NDArray[np.float64], y: npt.NDArray[np.float64], err: npt.NDArray[np.float64]) -> tuple[float, float] | None:
    """Weighted linear fit through (x, y) evaluated at x0: value and variance, or None if singular."""
    w = 1.0 / err**2
    d = x - x0
    normal = np.array([[w.sum(), (w * d).sum()], [(w * d).sum(), (w * d * d).sum()]])
    det = normal[0, 0] * normal[1, 1] - normal[0, 1] ** 2
    if det <= 1e-12 * normal[0, 0] * normal[1, 1]:
        return None
    rhs = np.array([(w * y).sum(), (w * d * y).sum()])
    value = (normal[1, 1] * rhs[0] - normal[0, 1] * rhs[1]) / det
    return float(value), float(normal[1, 1] / det)


def collapse_quality(
    curves: Sequence[ScalingCurve],
    x_c: float,
    nu: float,
    observable: ScalingObservable = ScalingObservable.BINDER,
    exponent: float | None = None,
) -> float:
    """
    S = mean over points of (y − Y)² / (σ² + σ_Y²), with Y the master curve at the point's x.

    The master curve at a point of size L is a local weighted linear fit through the other sizes'
    points within 1.5 median x-spacings, together with the pair of points of each other size that
    brackets x. Points outside the x-range of every other size do not contribute.

    Raises:
        FitError: With fewer than two distinct sizes, or when no point can be compared.

    """
    if len({curve.L for curve in curves}) < 2:  # noqa: PLR2004
        err_msg = "a collapse needs curves of at least two distinct sizes."
        raise FitError(err_msg)
    if nu <= 0.0:
        err_msg = f"ν must be positive, got {nu}."
        raise FitError(err_msg)
    rescaled = _rescale(curves, x_c, nu, _y_exponent(observable, nu, exponent))
    all_x = np.sort(np.concatenate([x for x, _, _ in rescaled]))
    spacings = np.diff(all_x)
    spacings = spacings[spacings > 0.0]
    if spacings.size == 0:
        err_msg = "rescaled x values are degenerate."
        raise FitError(err_msg)
    bandwidth = BANDWIDTH_FACTOR * float(np.median(spacings))

    terms: list[float] = []
    for k, (xs, ys, es) in enumerate(rescaled):
        others = [rescaled[j] for j in range(len(rescaled)) if j != k and curves[j].L != curves[k].L]
        for x0, y0, e0 in zip(xs, ys, es, strict=True):
            picks: list[tuple[npt.NDArray[np.float64], ...]] = []
            for ox, oy, oe in others:
                if not ox[0] <= x0 <= ox[-1]:
                    continue
                near = np.abs(ox - x0) <= bandwidth
                right = int(np.searchsorted(ox, x0))
                near[max(right - 1, 0)] = True
                near[min(right, ox.size - 1)] = True
                picks.append((ox[near], oy[near], oe[near]))
            if not picks:
                continue
            fit = _local_linear(x0, *(np.concatenate(column) for column in zip(*picks, strict=True)))
            if fit is None:
                continue
            value, variance = fit
            terms.append((y0 - value) ** 2 / (e0**2 + variance))
    if not terms:
        err_msg = "no overlapping points between sizes after rescaling."
        raise FitError(err_msg)
    return float(np.mean(terms))


type Objective = Callable[[npt.NDArray[np.float64]], float]


def _objective(curves: Sequence[ScalingCurve], observable: ScalingObservable) -> Objective:
    def quality(params: npt.NDArray[np.float64]) -> float:
        exponent = float(params[2]) if params.size > 2 else None  # noqa: PLR2004
        try:
            return collapse_quality(curves, float(params[0]), float(params[1]), observable, exponent)
        except FitError:
            return _UNDEFINED_QUALITY

    return quality


def _contour_error(quality: Objective, best: npt.NDArray[np.float64], s_min: float, axis: int, bounds: tuple[float, float]) -> float:
    """Half-width of the S_min + 1 contour along one axis; distance to the box edge if unreached."""
    target = s_min + 1.0

    def excess(position: float) -> float:
        point = best.copy()
        point[axis] = position
        return quality(point) - target

    widths = []
    for edge in bounds:
        if excess(edge) < 0.0:
            widths.append(abs(edge - best[axis]))
        else:
            lo, hi = sorted((float(best[axis]), edge))
            widths.append(abs(brentq(excess, lo, hi, xtol=1e-10) - best[axis]) if lo < hi else 0.0)
    return max(widths)


def optimize_collapse(
    curves: Sequence[ScalingCurve],
    box: CollapseSearchBox,
    observable: ScalingObservable = ScalingObservable.BINDER,
) -> ScalingFit:
    """
    Minimize the collapse quality with Nelder-Mead inside ``box``, starting from its centre.

    Binder collapses fit (x_c, ν); susceptibility and magnetization collapses also fit γ or β_mag,
    which requires ``box.exponent``. A run that exhausts its iteration budget is returned with
    ``converged=False`` and the best parameters found.
    """
    if (observable is ScalingObservable.BINDER) != (box.exponent is None):
        err_msg = "the search box has an exponent range exactly when the observable needs one."
        raise ValueError(err_msg)
    quality = _objective(curves, observable)
    bounds = box.bounds()
    result = minimize(
        quality,
        box.center(),
        method="Nelder-Mead",
        bounds=bounds,
        options={"xatol": 1e-7, "fatol": 1e-10, "maxiter": _MAX_ITERATIONS, "adaptive": True},
    )
    best = np.asarray(result.x, dtype=np.float64)
    s_min = float(result.fun)
    if s_min >= _UNDEFINED_QUALITY:
        err_msg = "the collapse is undefined everywhere the optimizer looked."
        raise FitError(err_msg)
    if not result.success:
        warnings.warn(f"collapse optimization did not converge: {result.message}", RuntimeWarning, stacklevel=2)
        logger.warning("ANALYSIS - collapse optimization stopped after %d iterations: %s", result.nit, result.message)

    errors = [_contour_error(quality, best, s_min, axis, bounds[axis]) for axis in range(best.size)]
    fit = ScalingFit(
        observable=observable,
        x_c=float(best[0]),
        x_c_error=errors[0],
        nu=float(best[1]),
        nu_error=errors[1],
        exponent=float(best[2]) if best.size > 2 else None,  # noqa: PLR2004
        exponent_error=errors[2] if best.size > 2 else None,  # noqa: PLR2004
        quality=max(s_min, 0.0),
        converged=bool(result.success),
    )
    logger.info("ANALYSIS - %s collapse x_c=%.4f±%.4f nu=%.3f±%.3f S=%.3g", observable, fit.x_c, fit.x_c_error, fit.nu, fit.nu_error, fit.quality)
    return fit


def rescaled_points(curves: Sequence[ScalingCurve], fit: ScalingFit) -> list[tuple[int, float, float, float]]:
    """(L, x_scaled, y_scaled, err_scaled) rows of the collapsed curves, for plotting."""
    rescaled = _rescale(curves, fit.x_c, fit.nu, _y_exponent(fit.observable, fit.nu, fit.exponent))
    return [
        (curve.L, float(x), float(y), float(e))
        for curve, (xs, ys, es) in zip(curves, rescaled, strict=True)
        for x, y, e in zip(xs, ys, es, strict=True)
        if math.isfinite(x)
    ]
