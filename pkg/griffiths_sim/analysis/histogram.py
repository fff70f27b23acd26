# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Log-binned densities of positive samples."""

from collections.abc import Sequence
from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import Field, NonNegativeInt, PositiveFloat, PositiveInt, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.float_vector import FloatVector
from griffiths_sim.logging import logger

DEFAULT_BINS = 40

_NORMALIZATION_TOLERANCE = 1e-12


class HistogramRange(BaseModel):
    """
    Bin range policy. Unset bounds follow the samples: smallest positive sample, largest sample.

    Samples outside an explicit range are counted in ``Histogram.n_out_of_range``.
    """

    lower: PositiveFloat | None = None
    upper: PositiveFloat | None = None

    @model_validator(mode="after")
    def lower_below_upper(self) -> Self:
        if self.lower is not None and self.upper is not None and self.lower >= self.upper:
            err_msg = f"lower bound {self.lower} must be smaller than upper bound {self.upper}."
            raise ValueError(err_msg)
        return self


class Histogram(BaseModel):
    """
    A normalized density on logarithmically spaced bins.

    Attributes:
        edges: Strictly increasing, positive bin edges.
        density: P per bin, normalized so that Σ P·Δx = 1 over the binned samples.
        counts: Number of samples per bin.
        n_samples: Number of binned samples.
        n_non_positive: Samples that were zero or negative and therefore excluded.
        n_out_of_range: Positive samples outside an explicit range.

    """

    edges: FloatVector
    density: FloatVector
    counts: tuple[NonNegativeInt, ...]
    n_samples: PositiveInt
    n_non_positive: NonNegativeInt = 0
    n_out_of_range: NonNegativeInt = 0

    @model_validator(mode="after")
    def is_normalized_density(self) -> Self:
        edges = self.edges.as_array()
        density = self.density.as_array()
        if edges.size < 2 or np.any(edges <= 0.0) or np.any(np.diff(edges) <= 0.0):  # noqa: PLR2004
            err_msg = "edges must be positive and strictly increasing."
            raise ValueError(err_msg)
        if density.size != edges.size - 1 or len(self.counts) != density.size:
            err_msg = "density and counts need one entry per bin."
            raise ValueError(err_msg)
        if np.any(density < 0.0):
            err_msg = "densities must be non-negative."
            raise ValueError(err_msg)
        if abs(float(np.sum(density * np.diff(edges))) - 1.0) > _NORMALIZATION_TOLERANCE:
            err_msg = "density is not normalized."
            raise ValueError(err_msg)
        return self

    @property
    def n_bins(self) -> int:
        return len(self.counts)

    def centers(self) -> npt.NDArray[np.float64]:
        """Geometric bin centres."""
        edges = self.edges.as_array()
        return np.sqrt(edges[:-1] * edges[1:])

    def widths(self) -> npt.NDArray[np.float64]:
        return np.diff(self.edges.as_array())

    def peak_index(self) -> int:
        return int(np.argmax(self.density.as_array()))


def build_histogram(samples: npt.ArrayLike | Sequence[float], n_bins: int = DEFAULT_BINS, value_range: HistogramRange | None = None) -> Histogram:
    """
    Histogram positive samples on ``n_bins`` logarithmic bins.

    Raises:
        ValueError: If no sample is positive (or none falls inside ``value_range``).

    >>> histogram = build_histogram([1.0, 1.5, 2.0], n_bins=1, value_range=HistogramRange(lower=1.0, upper=2.0))
    >>> histogram.density
    (1.0,)
    """
    if n_bins < 1:
        err_msg = f"need at least one bin, got {n_bins}."
        raise ValueError(err_msg)
    values = np.asarray(samples, dtype=np.float64).ravel()
    positive = values[values > 0.0]
    n_non_positive = values.size - positive.size
    if n_non_positive:
        logger.info("ANALYSIS - %d non-positive samples excluded from the histogram", n_non_positive)
    if positive.size == 0:
        err_msg = "the histogram needs at least one positive sample."
        raise ValueError(err_msg)

    value_range = value_range or HistogramRange()
    lower = value_range.lower if value_range.lower is not None else float(positive.min())
    upper = value_range.upper if value_range.upper is not None else float(positive.max())
    if upper <= lower:
        # A single distinct value: widen to one decade so that the bins are well defined.
        lower, upper = lower / np.sqrt(10.0), upper * np.sqrt(10.0)
    inside = positive[(positive >= lower) & (positive <= upper)]
    if inside.size == 0:
        err_msg = f"no positive sample inside [{lower}, {upper}]."
        raise ValueError(err_msg)

    edges = np.geomspace(lower, upper, n_bins + 1)
    counts, _ = np.histogram(inside, bins=edges)
    density = counts / (inside.size * np.diff(edges))
    return Histogram(
        edges=edges,
        density=density,
        counts=tuple(int(c) for c in counts),
        n_samples=inside.size,
        n_non_positive=n_non_positive,
        n_out_of_range=positive.size - inside.size,
    )
