# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Delete-one jackknife and bootstrap errors for functions of ensemble means."""

import math
from collections.abc import Callable
from enum import StrEnum

import numpy as np
import numpy.typing as npt

type MeanEstimator = Callable[[npt.NDArray[np.float64]], float]

DEFAULT_RESAMPLES = 1000


class ResamplingMethod(StrEnum):
    JACKKNIFE = "jackknife"
    BOOTSTRAP = "bootstrap"


def _first_component(means: npt.NDArray[np.float64]) -> float:
    return float(means[0])


def _as_columns(samples: npt.ArrayLike) -> npt.NDArray[np.float64]:
    values = np.asarray(samples, dtype=np.float64)
    return values[:, None] if values.ndim == 1 else values


def jackknife(samples: npt.ArrayLike, estimator: MeanEstimator = _first_component) -> tuple[float, float]:
    """
    Value and delete-one jackknife error of ``estimator`` applied to the column means of ``samples``.

    ``samples`` holds one row per instance. With fewer than two rows the error is infinite.

    >>> value, error = jackknife([1.0, 2.0, 3.0])
    >>> value, round(error, 6)
    (2.0, 0.57735)
    """
    values = _as_columns(samples)
    n = values.shape[0]
    value = estimator(values.mean(axis=0))
    if n < 2:  # noqa: PLR2004
        return value, math.inf
    leave_one_out = (values.sum(axis=0)[None, :] - values) / (n - 1)
    replicas = np.array([estimator(row) for row in leave_one_out])
    error = math.sqrt((n - 1) / n * float(np.sum((replicas - replicas.mean()) ** 2)))
    return value, error


def bootstrap(
    samples: npt.ArrayLike,
    estimator: MeanEstimator = _first_component,
    n_resamples: int = DEFAULT_RESAMPLES,
    seed: int = 0,
) -> tuple[float, float]:
    """Value and bootstrap error (standard deviation over resampled instance sets)."""
    values = _as_columns(samples)
    n = values.shape[0]
    value = estimator(values.mean(axis=0))
    if n < 2:  # noqa: PLR2004
        return value, math.inf
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, n, size=(n_resamples, n))
    replicas = np.array([estimator(values[rows].mean(axis=0)) for rows in picks])
    return value, float(np.std(replicas, ddof=1))


def resample(
    samples: npt.ArrayLike,
    estimator: MeanEstimator = _first_component,
    method: ResamplingMethod = ResamplingMethod.JACKKNIFE,
) -> tuple[float, float]:
    if method is ResamplingMethod.BOOTSTRAP:
        return bootstrap(samples, estimator)
    return jackknife(samples, estimator)
