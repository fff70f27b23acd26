# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Diluted Chimera graphs and quenched disorder instances."""

from griffiths_sim.lattice.chimera import ChimeraGraph, DilutionKind, DilutionPattern, build_diluted_chimera, site_coordinates
from griffiths_sim.lattice.disorder import DisorderDistribution, DisorderInstance, sample_disorder

__all__ = [
    "ChimeraGraph",
    "DilutionKind",
    "DilutionPattern",
    "DisorderDistribution",
    "DisorderInstance",
    "build_diluted_chimera",
    "sample_disorder",
    "site_coordinates",
]
