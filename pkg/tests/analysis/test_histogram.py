# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim.analysis.histogram import Histogram, HistogramRange, build_histogram


def test_histogram_is_a_normalized_density() -> None:
    """Test that verifies Σ P·Δx = 1 and that every positive sample is counted."""
    samples = np.random.default_rng(0).lognormal(size=5000)
    histogram = build_histogram(samples, n_bins=30)
    assert histogram.n_bins == 30
    assert sum(histogram.counts) == histogram.n_samples == 5000
    assert float(np.sum(histogram.density.as_array() * histogram.widths())) == pytest.approx(1.0)
    np.testing.assert_allclose(np.diff(np.log(histogram.edges.as_array())), np.log(histogram.edges[1] / histogram.edges[0]))


def test_geometric_centres() -> None:
    """Test that verifies that bin centres are geometric means of their edges."""
    histogram = build_histogram([1.0, 10.0, 100.0], n_bins=2)
    np.testing.assert_allclose(histogram.centers(), [np.sqrt(10.0), np.sqrt(1000.0)])


def test_non_positive_and_out_of_range_samples_are_excluded() -> None:
    """Test that verifies the bookkeeping of excluded samples."""
    histogram = build_histogram([-1.0, 0.0, 0.5, 1.0, 2.0, 50.0], n_bins=4, value_range=HistogramRange(lower=0.5, upper=10.0))
    assert histogram.n_non_positive == 2
    assert histogram.n_out_of_range == 1
    assert histogram.n_samples == 3


def test_single_value_is_widened_to_a_decade() -> None:
    """Test that verifies that identical samples still give well-defined bins."""
    histogram = build_histogram([2.0, 2.0, 2.0], n_bins=4)
    assert histogram.edges[-1] / histogram.edges[0] == pytest.approx(10.0)


@pytest.mark.parametrize(
    ("samples", "value_range", "match"),
    [
        ([0.0, -1.0], None, "at least one positive sample"),
        ([1.0, 2.0], HistogramRange(lower=5.0, upper=6.0), "no positive sample inside"),
    ],
)
def test_histogram_errors(samples: list[float], value_range: HistogramRange | None, match: str) -> None:
    """Test that verifies the errors for unusable samples."""
    with pytest.raises(ValueError, match=match):
        _ = build_histogram(samples, value_range=value_range)


def test_range_and_density_are_validated() -> None:
    """Test that verifies the range ordering and the normalization check of the model."""
    with pytest.raises(ValidationError, match="must be smaller than upper bound"):
        _ = HistogramRange(lower=2.0, upper=1.0)
    with pytest.raises(ValidationError, match="density is not normalized"):
        _ = Histogram(edges=[1.0, 2.0], density=[0.5], counts=(1,), n_samples=1)
