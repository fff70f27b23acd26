# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

from griffiths_sim.errors import CapabilityError
from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.oracle.classical import classical_limit_moments
from griffiths_sim.oracle.free_spin import free_spin_continuum, free_spin_correlator
from griffiths_sim.oracle.path_enumeration import path_boltzmann_distribution, total_variation_distance
from griffiths_sim.oracle.spectral import exact_thermal_moments, sigma_z_distribution
from griffiths_sim.qmc.couplings import effective_couplings
from griffiths_sim.qmc.hamiltonian import IsingProblem


def _pair(coupling: float = -1.0) -> IsingProblem:
    return IsingProblem(n_sites=2, edges=((0, 1),), couplings=[coupling], fields=[0.0, 0.0])


def _single() -> IsingProblem:
    return IsingProblem(n_sites=1, edges=(), couplings=[], fields=[0.0])


def test_classical_pair() -> None:
    """Test that verifies ⟨m²⟩ of a ferromagnetic pair, which is the probability of aligned spins."""
    beta = 0.7
    moments = classical_limit_moments(_pair(), beta)
    aligned = math.exp(beta) / (math.exp(beta) + math.exp(-beta))
    assert moments.m2 == pytest.approx(aligned)
    assert moments.m4 == pytest.approx(aligned)
    assert moments.chi_global == moments.m2
    assert moments.probability_sum == pytest.approx(1.0)
    assert moments.m_mean == pytest.approx(0.0)


def test_classical_enumeration_is_bounded(small_instance: DisorderInstance) -> None:
    """Test that verifies that problems beyond 20 sites are refused."""
    with pytest.raises(CapabilityError, match="at most 20 sites"):
        _ = classical_limit_moments(small_instance, 1.0)


def test_spectral_free_spin_matches_the_continuum() -> None:
    """Test that verifies the local susceptibility of one spin in a transverse field."""
    moments = exact_thermal_moments(_single(), 2.0, 1.0)
    assert moments.chi_loc_array()[0] == pytest.approx(free_spin_continuum(2.0, 1.0))
    assert moments.chi_global == pytest.approx(free_spin_continuum(2.0, 1.0))
    assert moments.m2 == pytest.approx(1.0)


def test_spectral_without_field_equals_classical() -> None:
    """Test that verifies that Γ = 0 reproduces the classical Boltzmann moments."""
    problem = _pair().with_fields([0.2, -0.1])
    exact = exact_thermal_moments(problem, 1.3, 0.0)
    classical = classical_limit_moments(problem, 1.3)
    assert exact.m2 == pytest.approx(classical.m2)
    assert exact.m_mean == pytest.approx(classical.m_mean)
    assert exact.chi_global == pytest.approx(classical.m2)
    np.testing.assert_allclose(exact.chi_loc_array(), 1.0)


def test_sigma_z_distribution_is_normalized(cell_instance: DisorderInstance) -> None:
    """Test that verifies that the σᶻ read-out distribution of a cell sums to one."""
    spins, probabilities = sigma_z_distribution(cell_instance, 1.0, 1.0)
    assert spins.shape == (256, 8)
    assert probabilities.sum() == pytest.approx(1.0)
    assert np.all(probabilities >= 0.0)


def test_spectral_oracle_is_bounded(small_instance: DisorderInstance) -> None:
    """Test that verifies that problems beyond 12 sites are refused."""
    with pytest.raises(CapabilityError, match="at most 12 sites"):
        _ = exact_thermal_moments(small_instance, 1.0, 1.0)


def test_path_distribution_of_a_free_spin() -> None:
    """Test that verifies that the enumerated path weights give the transfer-matrix correlator."""
    couplings = effective_couplings(2.0, 1.0, 8, _single())
    probabilities = path_boltzmann_distribution(couplings)
    codes = np.arange(probabilities.size)
    spins = 2 * ((codes[:, None] >> np.arange(8)[None, :]) & 1) - 1
    m2 = float(probabilities @ spins.mean(axis=1) ** 2)
    assert probabilities.sum() == pytest.approx(1.0)
    assert m2 == pytest.approx(free_spin_correlator(2.0, 1.0, 8))


def test_path_enumeration_is_bounded(cell_instance: DisorderInstance) -> None:
    """Test that verifies that N·M above 20 is refused."""
    with pytest.raises(CapabilityError, match="N·M ≤ 20"):
        _ = path_boltzmann_distribution(effective_couplings(1.0, 1.0, 4, cell_instance))


def test_total_variation_distance() -> None:
    """Test that verifies the distance of point masses and of an exact match."""
    assert total_variation_distance([0, 0], np.array([1.0, 0.0])) == 0.0
    assert total_variation_distance([1, 1], np.array([1.0, 0.0])) == pytest.approx(1.0)
    assert total_variation_distance([0, 1], np.array([0.25, 0.75])) == pytest.approx(0.25)


@pytest.mark.parametrize(("beta", "gamma"), [(0.5, 0.3), (2.0, 1.0), (10.0, 2.0)])
def test_odd_moments_vanish_without_longitudinal_field(cell_instance: DisorderInstance, beta: float, gamma: float) -> None:
    """Test that verifies that ⟨m⟩, ⟨m³⟩ and every ⟨σ_i⟩ are zero at h = 0, quantum and classical."""
    spins, probabilities = sigma_z_distribution(cell_instance, beta, gamma)
    magnetization = spins.mean(axis=1, dtype=np.float64)
    assert float(probabilities @ magnetization) == pytest.approx(0.0, abs=1e-10)
    assert float(probabilities @ magnetization**3) == pytest.approx(0.0, abs=1e-10)
    exact = exact_thermal_moments(cell_instance, beta, gamma)
    assert exact.m_mean == pytest.approx(0.0, abs=1e-10)
    np.testing.assert_allclose(exact.site_means.as_array(), 0.0, atol=1e-10)
    classical = classical_limit_moments(cell_instance, beta)
    assert classical.m_mean == pytest.approx(0.0, abs=1e-10)
    np.testing.assert_allclose(classical.site_means.as_array(), 0.0, atol=1e-10)
