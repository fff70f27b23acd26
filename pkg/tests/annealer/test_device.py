# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest
from pydantic import ValidationError

from griffiths_sim.annealer.device import DeviceFactory, DeviceModel, default_quench_strength, gauge_transform, random_gauge
from griffiths_sim.annealer.protocol import DEVICE_TO_QMC_SCALE
from griffiths_sim.lattice.disorder import DisorderInstance


def test_factory_draws_reproducible_biases(cell_instance: DisorderInstance) -> None:
    """Test that verifies that biases are uniform in [−w, w] and fixed by the seed."""
    device = DeviceFactory.create(cell_instance, seed=3, bias_half_width=0.05)
    again = DeviceFactory.create(cell_instance, seed=3, bias_half_width=0.05)
    other = DeviceFactory.create(cell_instance, seed=4, bias_half_width=0.05)
    assert device.biases == again.biases
    assert device.biases != other.biases
    assert np.all(np.abs(device.biases.as_array()) <= 0.05)
    assert not np.any(device.flux_corrections.as_array())
    assert device.quench_strength == default_quench_strength(1) == 0.3


def test_default_quench_strength_falls_with_size() -> None:
    """Test that verifies q(L) = 0.3/L."""
    assert default_quench_strength(2) == pytest.approx(0.15)
    assert default_quench_strength(12) == pytest.approx(0.025)


def test_factory_rejects_negative_width(cell_instance: DisorderInstance) -> None:
    """Test that verifies that a negative bias half-width is refused."""
    with pytest.raises(ValueError, match="bias half-width must be non-negative"):
        _ = DeviceFactory.create(cell_instance, seed=0, bias_half_width=-0.1)


def test_device_vectors_must_match_the_instance(noiseless_device: DeviceModel) -> None:
    """Test that verifies that biases need one entry per qubit."""
    with pytest.raises(ValidationError, match="one entry per qubit"):
        _ = DeviceModel(instance=noiseless_device.instance, biases=[0.0], flux_corrections=[0.0])


def test_physical_problem_in_qmc_units(cell_instance: DisorderInstance) -> None:
    """Test that verifies that couplings and fields are doubled and the qubits see h + b − f."""
    device = DeviceFactory.create(cell_instance, seed=1, bias_half_width=0.05).with_flux_corrections(np.full(8, 0.01))
    problem = device.physical_problem(0.1)
    np.testing.assert_allclose(problem.couplings.as_array(), DEVICE_TO_QMC_SCALE * cell_instance.coupling_array())
    np.testing.assert_allclose(problem.fields.as_array(), DEVICE_TO_QMC_SCALE * (0.1 + device.biases.as_array() - 0.01))
    assert device.physical_problem(decoupled=True).is_decoupled()


def test_gauge_relabels_couplings_and_read_outs(noiseless_device: DeviceModel) -> None:
    """Test that verifies the gauge action on couplings, fields and read-outs."""
    epsilon = np.array([1, -1, 1, -1, -1, 1, 1, -1])
    gauged = gauge_transform(noiseless_device, epsilon)
    edges = noiseless_device.instance.graph.edge_array()
    expected = epsilon[edges[:, 0]] * epsilon[edges[:, 1]] * noiseless_device.instance.coupling_array() * DEVICE_TO_QMC_SCALE
    np.testing.assert_allclose(gauged.physical_problem().couplings.as_array(), expected)
    np.testing.assert_allclose(gauged.physical_problem(0.2).fields.as_array(), DEVICE_TO_QMC_SCALE * 0.2 * epsilon)
    physical = np.ones((3, 8), dtype=np.int8)
    np.testing.assert_array_equal(gauged.to_logical(physical), np.tile(epsilon, (3, 1)))
    assert gauge_transform(gauged, epsilon).gauge == (1,) * 8


def test_gauge_entries_must_be_signs(noiseless_device: DeviceModel) -> None:
    """Test that verifies that a gauge entry other than ±1 is refused."""
    with pytest.raises(ValueError, match="one ±1 entry per qubit"):
        _ = gauge_transform(noiseless_device, [1, 0, 1, 1, 1, 1, 1, 1])


def test_random_gauge_is_a_sign_vector() -> None:
    """Test that verifies that random gauges hold only ±1."""
    gauge = random_gauge(100, np.random.default_rng(0))
    assert set(gauge.tolist()) == {-1, 1}
