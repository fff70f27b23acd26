# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import numpy.typing as npt
from pydantic import NonNegativeFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.errors import FitError

# Points on each side of the maximum that enter the parabola.
_HALF_WINDOW = 2


class Peak(BaseModel):
    position: float
    error: NonNegativeFloat
    height: float


def locate_peak(x: npt.ArrayLike, y: npt.ArrayLike, y_err: npt.ArrayLike | None = None) -> Peak:
    """
    Peak of a sampled curve from a weighted parabola through the maximum and its neighbours.

    Without ``y_err`` the position error is half the local grid step; with it, the fit covariance
    is propagated to the vertex.

    Raises:
        FitError: If the maximum sits on the edge of the window or the parabola opens upwards.

    >>> round(locate_peak([0.0, 1.0, 2.0], [0.0, 1.0, 0.0]).position, 9)
    1.0
    """
    xs = np.asarray(x, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    order = np.argsort(xs)
    xs, ys = xs[order], ys[order]
    errors = np.ones_like(ys) if y_err is None else np.asarray(y_err, dtype=np.float64)[order]
    k = int(np.argmax(ys))
    if k in {0, xs.size - 1}:
        err_msg = "the maximum lies on the edge of the scanned window."
        raise FitError(err_msg)
    window = slice(max(k - _HALF_WINDOW, 0), min(k + _HALF_WINDOW, xs.size - 1) + 1)
    u = xs[window] - xs[k]
    design = np.column_stack([u**2, u, np.ones_like(u)])
    weights = 1.0 / errors[window]
    coefficients, *_ = np.linalg.lstsq(design * weights[:, None], ys[window] * weights)
    a, b, c = (float(v) for v in coefficients)
    if a >= 0.0:
        err_msg = "the fitted parabola has no maximum."
        raise FitError(err_msg)
    offset = -b / (2.0 * a)
    if not u[0] <= offset <= u[-1]:
        offset = 0.0
    if y_err is None:
        error = (xs[k + 1] - xs[k - 1]) / 4.0
    else:
        covariance = np.linalg.pinv((design * weights[:, None]).T @ (design * weights[:, None]))
        gradient = np.array([b / (2.0 * a * a), -1.0 / (2.0 * a), 0.0])
        error = math.sqrt(max(float(gradient @ covariance @ gradient), 0.0))
    return Peak(position=float(xs[k] + offset), error=float(error), height=a * offset**2 + b * offset + c)
