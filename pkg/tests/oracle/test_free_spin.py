# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

from griffiths_sim.oracle.free_spin import free_spin_autocorrelation, free_spin_continuum, free_spin_correlator


def test_autocorrelation_is_one_at_zero_lag_and_symmetric() -> None:
    """Test that verifies ⟨σ(0)σ(0)⟩ = 1 and the ring symmetry r ↔ M − r."""
    correlation = free_spin_autocorrelation(2.0, 1.0, 16)
    assert correlation[0] == pytest.approx(1.0)
    np.testing.assert_allclose(correlation[1:], correlation[1:][::-1])
    assert np.all(np.diff(correlation[: 9]) < 0.0)


def test_correlator_converges_to_the_continuum() -> None:
    """Test that verifies that the finite-M correlator approaches tanh(βΓ)/(βΓ)."""
    continuum = free_spin_continuum(2.0, 1.0)
    assert continuum == pytest.approx(math.tanh(2.0) / 2.0)
    coarse = abs(free_spin_correlator(2.0, 1.0, 8) - continuum)
    fine = abs(free_spin_correlator(2.0, 1.0, 256) - continuum)
    assert fine < coarse
    assert fine < 1e-3


def test_correlator_needs_a_transverse_field() -> None:
    """Test that verifies that Γ = 0 is refused."""
    with pytest.raises(ValueError, match="needs Γ > 0"):
        _ = free_spin_correlator(1.0, 0.0, 8)


@pytest.mark.parametrize(("beta", "gamma"), [(2.0, 1.0), (4.0, 1.5), (10.0, 0.5)])
def test_trotter_error_shrinks_with_every_doubling(beta: float, gamma: float) -> None:
    """Test that verifies that the finite-M deviation from the continuum falls monotonically over M = 8 … 64."""
    continuum = free_spin_continuum(beta, gamma)
    deviations = [abs(free_spin_correlator(beta, gamma, M) - continuum) for M in (8, 16, 32, 64)]
    assert all(fine < coarse for coarse, fine in zip(deviations, deviations[1:], strict=False))
    assert deviations[-1] < deviations[0] / 16.0
