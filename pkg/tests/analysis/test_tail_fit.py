# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import pytest

from griffiths_sim.analysis.histogram import build_histogram
from griffiths_sim.analysis.tail_fit import (
    FitRangePolicy,
    SusceptibilityKind,
    dz_from_linear_slope,
    dz_from_nonlinear_slope,
    fit_tail_slope,
    size_dependent_slope,
)
from griffiths_sim.errors import FitError
from griffiths_sim.verification.synthetic import power_law_susceptibilities


def test_linear_tail_gives_d_over_zprime() -> None:
    """Test that verifies that a Pareto tail with index d/z′ = 2 gives slope −3 and d/z′ = 2."""
    fit = fit_tail_slope(build_histogram(power_law_susceptibilities(2.0, 100_000, seed=3)))
    estimate = dz_from_linear_slope(fit, control=1.8)
    assert fit.slope == pytest.approx(-3.0, abs=0.1)
    assert estimate.d_over_zprime == pytest.approx(2.0, abs=0.1)
    assert estimate.source is SusceptibilityKind.LINEAR
    assert estimate.control == 1.8
    assert estimate.z_prime == pytest.approx(2.0 / estimate.d_over_zprime)
    assert fit.n_points >= 3


def test_nonlinear_tail_gives_three_times_the_index() -> None:
    """Test that verifies d/z′ = 3(−slope − 1) for the nonlinear susceptibility."""
    samples = power_law_susceptibilities(6.0, 100_000, SusceptibilityKind.NONLINEAR, seed=4)
    estimate = dz_from_nonlinear_slope(fit_tail_slope(build_histogram(samples)))
    assert estimate.d_over_zprime == pytest.approx(6.0, abs=0.3)
    assert estimate.error > 0.0


def test_fit_range_starts_near_the_peak() -> None:
    """Test that verifies that the device policy starts at the peak and stops at its higher density floor."""
    histogram = build_histogram(power_law_susceptibilities(3.0, 50_000, seed=5))
    fit = fit_tail_slope(histogram, FitRangePolicy.device())
    assert fit.x_lo <= histogram.centers()[histogram.peak_index()]
    # P(χ) = 3χ⁻⁴ drops to 1e-2 near χ ≈ 4.2
    assert fit.x_hi < 5.0
    assert fit.policy.density_floor == 1e-2


def test_too_few_bins_raise() -> None:
    """Test that verifies that a histogram without a usable tail cannot be fitted."""
    with pytest.raises(FitError, match="usable bins for a tail fit"):
        _ = fit_tail_slope(build_histogram([1.0, 2.0, 3.0, 4.0, 5.0], n_bins=5))


def test_size_dependent_slope_reports_the_largest_size() -> None:
    """Test that verifies that the largest lattice's slope is the one reported."""
    fits = {L: fit_tail_slope(build_histogram(power_law_susceptibilities(2.0 + L, 20_000, seed=L))) for L in (4, 8)}
    assert size_dependent_slope(fits) is fits[8]
    with pytest.raises(FitError, match="no slope fits"):
        _ = size_dependent_slope({})
