# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest

from griffiths_sim.analysis.tail_fit import SusceptibilityKind
from griffiths_sim.verification.synthetic import binder_curves, dynamical_points, power_law_susceptibilities


def test_power_law_survival_function() -> None:
    """Test that verifies P(χ > x) = x^{−d/z′} for the linear kind and the slower tail of the nonlinear kind."""
    linear = power_law_susceptibilities(2.0, 200_000, seed=1)
    nonlinear = power_law_susceptibilities(6.0, 200_000, SusceptibilityKind.NONLINEAR, seed=1)
    assert float(np.mean(linear > 10.0)) == pytest.approx(0.01, rel=0.1)
    assert float(np.mean(nonlinear > 10.0)) == pytest.approx(0.01, rel=0.1)
    with pytest.raises(ValueError, match="must be positive"):
        _ = power_law_susceptibilities(0.0, 10)


def test_binder_curves_cross_at_the_critical_point() -> None:
    """Test that verifies that every size passes through g = 1/2 at x_c."""
    curves = binder_curves(1.75, 1.4, (4, 8), [1.5, 1.75, 2.0])
    for curve in curves:
        assert curve.y[1] == pytest.approx(0.5)
    assert curves[1].y[0] > curves[0].y[0]


def test_dynamical_points_collapse_at_the_planted_z() -> None:
    """Test that verifies that equal β/L^z give equal Binder values."""
    points = dynamical_points(1.0, (4.0, 8.0), (4, 8))
    by_key = {(beta, L): g for beta, L, g in points}
    assert by_key[4.0, 4] == pytest.approx(by_key[8.0, 8])
