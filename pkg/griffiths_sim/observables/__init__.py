# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Disorder-ensemble estimators with resampling error bars."""

from griffiths_sim.observables.estimates import (
    BinderRatio,
    EnsembleEstimate,
    GlobalSusceptibilities,
    LocalSusceptibilities,
    binder_ratio,
    device_binder_ratio,
    global_nl_susceptibility,
    global_susceptibility,
    local_susceptibilities,
    magnetization_average,
    pool_global_susceptibilities,
    pool_local_susceptibilities,
)
from griffiths_sim.observables.resampling import ResamplingMethod, bootstrap, jackknife

__all__ = [
    "BinderRatio",
    "EnsembleEstimate",
    "GlobalSusceptibilities",
    "LocalSusceptibilities",
    "ResamplingMethod",
    "binder_ratio",
    "bootstrap",
    "device_binder_ratio",
    "global_nl_susceptibility",
    "global_susceptibility",
    "jackknife",
    "local_susceptibilities",
    "magnetization_average",
    "pool_global_susceptibilities",
    "pool_local_susceptibilities",
]
