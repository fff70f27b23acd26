# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from collections.abc import Sequence

import numpy as np
from pydantic import NonNegativeFloat, PositiveInt

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.analysis.collapse import ScalingCurve
from griffiths_sim.logging import logger


class Crossing(BaseModel):
    """Where the curves of two consecutive sizes cross; the error is half the bracketing grid step."""

    L_small: PositiveInt
    L_large: PositiveInt
    x: float
    error: NonNegativeFloat


def find_crossing(curves: Sequence[ScalingCurve]) -> list[Crossing]:
    """
    Crossings of the curves of consecutive sizes.

    The larger size's curve is interpolated linearly onto the smaller size's grid and the roots of
    the difference are located by linear interpolation between sign changes.
    """
    ordered = sorted(curves, key=lambda curve: curve.L)
    crossings: list[Crossing] = []
    for small, large in zip(ordered, ordered[1:], strict=False):
        order_small = np.argsort(small.x.as_array())
        order_large = np.argsort(large.x.as_array())
        x = small.x.as_array()[order_small]
        x_large = large.x.as_array()[order_large]
        inside = (x >= x_large[0]) & (x <= x_large[-1])
        x = x[inside]
        difference = np.interp(x, x_large, large.y.as_array()[order_large]) - small.y.as_array()[order_small][inside]
        for k in range(x.size - 1):
            a, b = difference[k], difference[k + 1]
            if a == 0.0:
                crossings.append(Crossing(L_small=small.L, L_large=large.L, x=float(x[k]), error=0.0))
            elif a * b < 0.0:
                root = x[k] - a * (x[k + 1] - x[k]) / (b - a)
                crossings.append(Crossing(L_small=small.L, L_large=large.L, x=float(root), error=float(x[k + 1] - x[k]) / 2.0))
        if x.size and difference[-1] == 0.0:
            crossings.append(Crossing(L_small=small.L, L_large=large.L, x=float(x[-1]), error=0.0))
    logger.debug("ANALYSIS - %d crossings found", len(crossings))
    return crossings
