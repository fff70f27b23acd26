# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

from griffiths_sim.annealer.device import DeviceFactory
from griffiths_sim.annealer.protocol import ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.samplers import ExactThermalSampler
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.annealer.susceptibility import default_field_grid, field_sweep_susceptibility
from griffiths_sim.lattice.disorder import DisorderInstance


def test_default_field_grid() -> None:
    """Test that verifies the symmetric grid bounded by |χh| ≤ 0.5 with χ up to 2β."""
    grid = default_field_grid(2.0)
    assert grid.size == 9
    assert grid[-1] == pytest.approx(0.5 / 4.0)
    np.testing.assert_allclose(grid, -grid[::-1])
    assert default_field_grid(2.0, 5, chi_bound=10.0)[-1] == pytest.approx(0.05)


def test_free_qubits_give_the_closed_form_susceptibility(free_instance: DisorderInstance, schedule: Schedule) -> None:
    """Test that verifies dm/dh = 2 tanh(βΓ)/Γ in device units for independent, unbiased qubits."""
    device = DeviceFactory.create(free_instance, seed=0, bias_half_width=0.0, quench_strength=0.0)
    protocol = ProtocolParams(s_star=0.386)
    beta, gamma = map_s_to_beta_gamma(schedule, 0.386)
    result = field_sweep_susceptibility(device, protocol, schedule, sampler=ExactThermalSampler(), degree=5, expectation=True)
    assert result.chi == pytest.approx(2.0 * math.tanh(beta * gamma) / gamma, rel=0.01)
    assert result.chi_nl > 0.0
    assert not result.saturated
    assert len(result.fields) == len(result.magnetizations) == 9


def test_sampled_sweep_estimates_the_susceptibility(free_instance: DisorderInstance, schedule: Schedule) -> None:
    """Test that verifies that the N_rep-run average gives a noisy but sensible χ."""
    device = DeviceFactory.create(free_instance, seed=0, bias_half_width=0.0, quench_strength=0.0)
    beta, gamma = map_s_to_beta_gamma(schedule, 0.386)
    result = field_sweep_susceptibility(device, ProtocolParams(s_star=0.386, n_rep=2000), schedule)
    exact = 2.0 * math.tanh(beta * gamma) / gamma
    assert 0.5 * exact < result.chi < 1.5 * exact


def test_saturated_curve_is_flagged(free_instance: DisorderInstance, schedule: Schedule) -> None:
    """Test that verifies the warning for a magnetization pinned at ±1 on the whole grid."""
    device = DeviceFactory.create(free_instance, seed=0, bias_half_width=0.0, quench_strength=0.0)
    fields = np.array([-4.0, -3.0, -2.0, -1.0, 1.0, 2.0, 3.0, 4.0])
    with pytest.warns(RuntimeWarning, match="saturated"):
        result = field_sweep_susceptibility(device, ProtocolParams(s_star=0.95), schedule, fields, expectation=True)
    assert result.saturated
