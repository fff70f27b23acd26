# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Exact references: spectral thermal averages, classical enumeration and the free-spin Trotter ring."""

from griffiths_sim.oracle.classical import MAX_ENUMERATED_SITES, classical_limit_moments
from griffiths_sim.oracle.free_spin import free_spin_autocorrelation, free_spin_continuum, free_spin_correlator
from griffiths_sim.oracle.moments import ExactMoments
from griffiths_sim.oracle.path_enumeration import MAX_PATH_SITES, path_boltzmann_distribution, total_variation_distance
from griffiths_sim.oracle.spectral import MAX_SPECTRAL_SITES, exact_thermal_moments, sigma_z_distribution

__all__ = [
    "MAX_ENUMERATED_SITES",
    "MAX_PATH_SITES",
    "MAX_SPECTRAL_SITES",
    "ExactMoments",
    "classical_limit_moments",
    "exact_thermal_moments",
    "free_spin_autocorrelation",
    "free_spin_continuum",
    "free_spin_correlator",
    "path_boltzmann_distribution",
    "sigma_z_distribution",
    "total_variation_distance",
]
