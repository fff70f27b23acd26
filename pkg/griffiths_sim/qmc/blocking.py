# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Error bars for autocorrelated Monte Carlo time series."""

import numpy as np
import numpy.typing as npt

# A blocking level only counts when it still has this many blocks.
MIN_BLOCKS = 16
DEFAULT_BINS = 32


def blocking_error(series: npt.ArrayLike) -> float:
    """
    Standard error of the mean of a correlated series by blocking.

    Neighbouring entries are averaged pairwise (block size doubling) and the naive standard
    error is computed at every level that keeps at least 16 blocks; the largest one is returned.
    Series too short for a single such level fall back to the naive error.

    >>> blocking_error([1.0, 1.0, 1.0])
    0.0
    """
    values = np.asarray(series, dtype=np.float64)
    if values.size < 2:  # noqa: PLR2004
        return 0.0
    error = float(np.std(values, ddof=1) / np.sqrt(values.size))
    while values.size >= 2 * MIN_BLOCKS:
        half = values.size // 2
        values = 0.5 * (values[0 : 2 * half : 2] + values[1 : 2 * half : 2])
        error = max(error, float(np.std(values, ddof=1) / np.sqrt(values.size)))
    return error


def binned_error(bin_means: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """
    Standard error from a fixed number of bin means.

    ``bin_means`` has shape (n_bins, ...); the error is taken along the first axis.
    """
    means = np.asarray(bin_means, dtype=np.float64)
    if means.shape[0] < 2:  # noqa: PLR2004
        return np.zeros(means.shape[1:])
    return np.std(means, axis=0, ddof=1) / np.sqrt(means.shape[0])
