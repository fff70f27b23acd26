# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Synthetic data with known answers, for the exponent, collapse and z-scan pipelines."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from griffiths_sim.analysis.collapse import ScalingCurve
from griffiths_sim.analysis.tail_fit import SusceptibilityKind


def power_law_susceptibilities(
    d_over_zprime: float,
    n_samples: int,
    kind: SusceptibilityKind = SusceptibilityKind.LINEAR,
    *,
    x_min: float = 1.0,
    seed: int = 0,
) -> npt.NDArray[np.float64]:
    """
    Pareto samples whose density decays like the Griffiths tail with the given d/z′.

    The linear susceptibility has P(χ) ~ χ^{−1−d/z′}, the nonlinear one P(χ_nl) ~ χ_nl^{−1−d/(3z′)}.

    >>> samples = power_law_susceptibilities(2.0, 1000, seed=1)
    >>> bool(samples.min() >= 1.0)
    True
    """
    if d_over_zprime <= 0.0:
        err_msg = f"d/z′ must be positive, got {d_over_zprime}."
        raise ValueError(err_msg)
    tail_index = d_over_zprime if SusceptibilityKind(kind) is SusceptibilityKind.LINEAR else d_over_zprime / 3.0
    rng = np.random.default_rng(seed)
    return x_min * rng.random(n_samples) ** (-1.0 / tail_index)


def binder_curves(
    x_c: float,
    nu: float,
    sizes: Sequence[int],
    x: npt.ArrayLike,
    *,
    noise: float = 0.0,
    seed: int = 0,
) -> list[ScalingCurve]:
    """Binder-like curves g = (1 − tanh((x − x_c) L^{1/ν}))/2, optionally with Gaussian noise of width ``noise``."""
    grid = np.asarray(x, dtype=np.float64)
    rng = np.random.default_rng(seed)
    error = max(noise, 1e-3)
    curves = []
    for L in sizes:
        g = 0.5 * (1.0 - np.tanh((grid - x_c) * L ** (1.0 / nu)))
        if noise > 0.0:
            g = g + rng.normal(0.0, noise, size=grid.size)
        curves.append(ScalingCurve(L=L, x=grid, y=g, y_err=np.full(grid.size, error)))
    return curves


def dynamical_points(
    z: float,
    betas: Sequence[float],
    sizes: Sequence[int],
    *,
    quadratic: tuple[float, float, float] = (-0.3, 0.1, -1.0),
    noise: float = 0.0,
    seed: int = 0,
) -> list[tuple[float, int, float]]:
    """(β, L, g) triples with ln g an exact concave quadratic in ln(β/L^z), plus optional noise on ln g."""
    rng = np.random.default_rng(seed)
    points = []
    for L in sizes:
        for beta in betas:
            u = np.log(beta) - z * np.log(L)
            log_g = float(np.polyval(quadratic, u))
            if noise > 0.0:
                log_g += float(rng.normal(0.0, noise))
            points.append((float(beta), int(L), float(np.exp(log_g))))
    return points
