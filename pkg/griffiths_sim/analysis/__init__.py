# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Histograms, tail fits, scaling collapses and the other fits of the analysis stage."""

from griffiths_sim.analysis.collapse import (
    CollapseSearchBox,
    ScalingCurve,
    ScalingFit,
    ScalingObservable,
    collapse_quality,
    optimize_collapse,
    rescaled_points,
)
from griffiths_sim.analysis.crossing import Crossing, find_crossing
from griffiths_sim.analysis.dynamical import ZScan, scan_dynamical_z
from griffiths_sim.analysis.extrapolation import ExtrapolationResult, linear_extrapolate
from griffiths_sim.analysis.histogram import Histogram, HistogramRange, build_histogram
from griffiths_sim.analysis.magnetization import MagnetizationFit, fit_magnetization_curve, magnetization_histogram
from griffiths_sim.analysis.peaks import Peak, locate_peak
from griffiths_sim.analysis.tail_fit import (
    SPATIAL_DIMENSION,
    ExponentEstimate,
    FitRangePolicy,
    SlopeFit,
    SusceptibilityKind,
    dz_from_linear_slope,
    dz_from_nonlinear_slope,
    fit_tail_slope,
    size_dependent_slope,
)

__all__ = [
    "SPATIAL_DIMENSION",
    "CollapseSearchBox",
    "Crossing",
    "ExponentEstimate",
    "ExtrapolationResult",
    "FitRangePolicy",
    "Histogram",
    "HistogramRange",
    "MagnetizationFit",
    "Peak",
    "ScalingCurve",
    "ScalingFit",
    "ScalingObservable",
    "SlopeFit",
    "SusceptibilityKind",
    "ZScan",
    "build_histogram",
    "collapse_quality",
    "dz_from_linear_slope",
    "dz_from_nonlinear_slope",
    "find_crossing",
    "fit_magnetization_curve",
    "fit_tail_slope",
    "linear_extrapolate",
    "locate_peak",
    "magnetization_histogram",
    "optimize_collapse",
    "rescaled_points",
    "scan_dynamical_z",
    "size_dependent_slope",
]
