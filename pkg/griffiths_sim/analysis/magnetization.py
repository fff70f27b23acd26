# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Magnetization curves m(h) and magnetization histograms of device runs."""

from collections.abc import Mapping

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import Field, NonNegativeFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.errors import FitError

_MIN_FIELDS = 4

DEFAULT_MAGNETIZATION_BINS = 50


class MagnetizationFit(BaseModel):
    """Coefficients of m(h) ≃ χh − χ_nl h³ (+ c₅h⁵)."""

    chi: float
    chi_nl: float
    chi_error: NonNegativeFloat | None = None
    chi_nl_error: NonNegativeFloat | None = None
    quintic: float | None = None
    degree: int = Field(ge=3, le=5)
    residual: NonNegativeFloat


def fit_magnetization_curve(
    fields: npt.ArrayLike,
    magnetizations: npt.ArrayLike,
    degree: int = 3,
    m_err: npt.ArrayLike | None = None,
) -> MagnetizationFit:
    """
    Least-squares odd-polynomial fit of the magnetization curve.

    χ is the linear coefficient and χ_nl minus the cubic coefficient. With ``m_err`` the fit is
    weighted and the coefficient errors are reported.

    Raises:
        FitError: With fewer than four fields or a rank-deficient design.

    """
    if degree not in {3, 5}:
        err_msg = f"the polynomial degree must be 3 or 5, got {degree}."
        raise ValueError(err_msg)
    h = np.asarray(fields, dtype=np.float64)
    m = np.asarray(magnetizations, dtype=np.float64)
    if h.shape != m.shape or h.size < _MIN_FIELDS:
        err_msg = f"need at least {_MIN_FIELDS} (h, m) pairs of matching shape."
        raise FitError(err_msg)
    powers = (1, 3) if degree == 3 else (1, 3, 5)  # noqa: PLR2004
    design = np.column_stack([h**p for p in powers])
    weights = np.ones_like(m) if m_err is None else 1.0 / np.asarray(m_err, dtype=np.float64)
    weighted = design * weights[:, None]
    coefficients, _, rank, _ = np.linalg.lstsq(weighted, m * weights)
    if rank < len(powers) or np.unique(np.abs(h)).size < len(powers):
        err_msg = f"rank-deficient magnetization design (rank {rank} for {len(powers)} coefficients)."
        raise FitError(err_msg)
    residual = float(np.sum((m - design @ coefficients) ** 2))

    chi_error = chi_nl_error = None
    if m_err is not None:
        covariance = np.linalg.inv(weighted.T @ weighted)
        chi_error, chi_nl_error = float(np.sqrt(covariance[0, 0])), float(np.sqrt(covariance[1, 1]))
    return MagnetizationFit(
        chi=float(coefficients[0]),
        chi_nl=-float(coefficients[1]),
        chi_error=chi_error,
        chi_nl_error=chi_nl_error,
        quintic=float(coefficients[2]) if degree == 5 else None,  # noqa: PLR2004
        degree=degree,
        residual=residual,
    )


def magnetization_histogram(samples: Mapping[float, npt.ArrayLike], n_bins: int = DEFAULT_MAGNETIZATION_BINS) -> pd.DataFrame:
    """
    Heat-map table of the magnetization distribution for every pause point s*.

    One row per (s*, bin) with the bin range on [−1, 1], the normalized density and log10 of the
    density (NaN for empty bins).
    """
    edges = np.linspace(-1.0, 1.0, n_bins + 1)
    frames = []
    for s_star, values in sorted(samples.items()):
        magnetizations = np.asarray(values, dtype=np.float64).ravel()
        if magnetizations.size == 0:
            continue
        density, _ = np.histogram(magnetizations, bins=edges, density=True)
        with np.errstate(divide="ignore"):
            log_density = np.where(density > 0.0, np.log10(np.where(density > 0.0, density, 1.0)), np.nan)
        frames.append(pd.DataFrame({"s_star": s_star, "m_lo": edges[:-1], "m_hi": edges[1:], "density": density, "log_density": log_density}))
    if not frames:
        return pd.DataFrame(columns=["s_star", "m_lo", "m_hi", "density", "log_density"])
    return pd.concat(frames, ignore_index=True)
