# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Figure recipes on simulated-annealer record logs; the control parameter is the pause point s*."""

from typing import final

import numpy as np

from griffiths_sim._models.common.figure_point import FigurePoint
from griffiths_sim.analysis.collapse import ScalingCurve
from griffiths_sim.analysis.crossing import find_crossing
from griffiths_sim.analysis.extrapolation import linear_extrapolate
from griffiths_sim.analysis.magnetization import magnetization_histogram
from griffiths_sim.analysis.peaks import Peak, locate_peak
from griffiths_sim.errors import FitError
from griffiths_sim.logging import logger
from griffiths_sim.observables.estimates import EnsembleEstimate, device_binder_ratio, magnetization_average
from griffiths_sim.observables.resampling import resample
from griffiths_sim.recipes._base import Recipe, RecipeContext, RecipeOutput, dump, group_by
from griffiths_sim.version import RunMode

_MIN_ERROR = 1e-9

# |m| above which a read-out counts as saturated in the magnetization heat map.
_SATURATION_LEVEL = 0.9

_CALIBRATION_BEFORE_LEVEL = 0.1
_CALIBRATION_AFTER_LEVEL = 0.05

_SUSCEPTIBILITIES = ("chi", "chi_nl")


def _curve(L: int, estimates: list[EnsembleEstimate]) -> ScalingCurve | None:
    if len(estimates) < 2:  # noqa: PLR2004
        return None
    return ScalingCurve(
        L=L,
        x=[estimate.s_star for estimate in estimates],
        y=[estimate.value for estimate in estimates],
        y_err=[max(estimate.error, _MIN_ERROR) for estimate in estimates],
    )


def sweep_estimates(context: RecipeContext) -> dict[str, dict[int, list[EnsembleEstimate]]]:
    """Disorder averages of the field-sweep χ and χ_nl per size and pause point."""
    method = context.config.analysis.resampling
    by_observable: dict[str, dict[int, list[EnsembleEstimate]]] = {name: {} for name in _SUSCEPTIBILITIES}
    for L, results in context.sweep_results.items():
        for (s_star,), group in group_by(results, "s_star").items():
            for name in _SUSCEPTIBILITIES:
                value, error = resample([getattr(result, name) for result in group], method=method)
                estimate = EnsembleEstimate(observable=name, value=value, error=error, n_instances=len(group), L=L, s_star=s_star)
                by_observable[name].setdefault(L, []).append(estimate)
    return by_observable


def susceptibility_peaks(estimates: dict[int, list[EnsembleEstimate]]) -> dict[int, Peak]:
    peaks = {}
    for L, curve in estimates.items():
        errors = [estimate.error for estimate in curve]
        try:
            peaks[L] = locate_peak(
                [estimate.s_star for estimate in curve],
                [estimate.value for estimate in curve],
                errors if all(0.0 < e < np.inf for e in errors) else None,
            )
        except FitError as e:
            logger.warning("ANALYSIS - no peak for L=%d: %s", L, e)
    return peaks


@final
class MagnetizationHeatMap(Recipe):
    name = "dfig15"
    mode = RunMode.DEVICE_SIM
    description = "Histogram of the read-out magnetization against s* for every size"

    def run(self, context: RecipeContext) -> RecipeOutput:
        points: list[FigurePoint] = []
        saturation: dict[str, dict[str, float]] = {}
        for L, logs in context.magnetization_logs.items():
            samples = {s_star: np.concatenate([log.magnetizations.as_array() for log in group]) for (s_star,), group in group_by(logs, "s_star").items()}
            table = magnetization_histogram(samples)
            points.extend(
                FigurePoint(recipe=self.name, series=f"L={L} s*={row.s_star:g}", x=0.5 * (row.m_lo + row.m_hi), y=row.density)
                for row in table.itertuples(index=False)
            )
            saturation[str(L)] = {f"{s_star:g}": float(np.mean(np.abs(values) > _SATURATION_LEVEL)) for s_star, values in samples.items()}
        return RecipeOutput(points=tuple(points), summary={"saturated_fraction": saturation, "saturation_level": _SATURATION_LEVEL})


@final
class DeviceBinderAndMagnetization(Recipe):
    name = "dfig17"
    mode = RunMode.DEVICE_SIM
    description = "Device Binder ratio and [⟨|m|⟩] against s* for every size"

    def run(self, context: RecipeContext) -> RecipeOutput:
        method = context.config.analysis.resampling
        points: list[FigurePoint] = []
        estimates: list[EnsembleEstimate] = []
        binder_curves = []
        for L, records in context.device_records.items():
            binder, magnetization = [], []
            for group in group_by(records, "s_star").values():
                binder.append(device_binder_ratio(group, method).g)
                magnetization.append(magnetization_average(group, method))
            for series, curve in (("g", binder), ("|m|", magnetization)):
                points.extend(FigurePoint(recipe=self.name, series=f"{series} L={L}", x=e.s_star, y=e.value, y_err=e.error) for e in curve)
            estimates.extend(binder + magnetization)
            if (curve := _curve(L, binder)) is not None:
                binder_curves.append(curve)
        crossings = find_crossing(binder_curves) if len(binder_curves) >= 2 else []  # noqa: PLR2004
        return RecipeOutput(points=tuple(points), estimates=tuple(estimates), summary={"binder_crossings": [dump(c) for c in crossings]})


@final
class DeviceSusceptibilities(Recipe):
    name = "dfig18"
    mode = RunMode.DEVICE_SIM
    description = "Disorder-averaged χ and χ_nl from field sweeps against s*, with their peaks"

    def run(self, context: RecipeContext) -> RecipeOutput:
        points: list[FigurePoint] = []
        estimates: list[EnsembleEstimate] = []
        summary: dict[str, object] = {}
        for name, by_size in sweep_estimates(context).items():
            for L, curve in by_size.items():
                points.extend(FigurePoint(recipe=self.name, series=f"{name} L={L}", x=e.s_star, y=e.value, y_err=e.error) for e in curve)
                estimates.extend(curve)
            summary[f"{name}_peaks"] = {str(L): dump(peak) for L, peak in susceptibility_peaks(by_size).items()}
        return RecipeOutput(points=tuple(points), estimates=tuple(estimates), summary=summary)


@final
class PeakExtrapolation(Recipe):
    name = "dfig19"
    mode = RunMode.DEVICE_SIM
    description = "Susceptibility peak positions against 1/L, extrapolated linearly to the critical pause point"

    def run(self, context: RecipeContext) -> RecipeOutput:
        window = (min(context.config.grid.s_stars), max(context.config.grid.s_stars))
        points: list[FigurePoint] = []
        summary: dict[str, object] = {"window": window}
        for name, by_size in sweep_estimates(context).items():
            peaks = susceptibility_peaks(by_size)
            if len(peaks) < 2:  # noqa: PLR2004
                logger.warning("ANALYSIS - %s peaks found for %d sizes, need two to extrapolate", name, len(peaks))
                continue
            inverse_sizes = [1.0 / L for L in peaks]
            positions = [peak.position for peak in peaks.values()]
            errors = [peak.error for peak in peaks.values()]
            extrapolation = linear_extrapolate(inverse_sizes, positions, errors if all(e > 0.0 for e in errors) else None)
            points.extend(FigurePoint(recipe=self.name, series=f"{name} peak", x=x, y=p, y_err=e) for x, p, e in zip(inverse_sizes, positions, errors, strict=True))
            points.extend(FigurePoint(recipe=self.name, series=f"{name} fit", x=x, y=extrapolation.value_at(x)) for x in (0.0, max(inverse_sizes)))
            s_c = extrapolation.intercept
            summary[name] = {
                "extrapolation": dump(extrapolation),
                "s_c": s_c,
                "s_c_error": extrapolation.intercept_error,
                "inside_window": bool(window[0] <= s_c <= window[1]),
            }
        if len(summary) == 1:
            err_msg = "no susceptibility has peaks for two sizes."
            raise FitError(err_msg)
        return RecipeOutput(points=tuple(points), summary=summary)


@final
class CalibrationContrast(Recipe):
    name = "dfig26"
    mode = RunMode.DEVICE_SIM
    description = "Mean read-out of every isolated qubit before and after flux-bias calibration"

    def run(self, context: RecipeContext) -> RecipeOutput:
        points: list[FigurePoint] = []
        before, after = [], []
        for checks in context.calibration_checks.values():
            for check in checks:
                offset = len(before)
                before.extend(check.before)
                after.extend(check.after)
                points.extend(FigurePoint(recipe=self.name, series="before", x=offset + i, y=m) for i, m in enumerate(check.before))
                points.extend(FigurePoint(recipe=self.name, series="after", x=offset + i, y=m) for i, m in enumerate(check.after))
        summary = {
            "n_qubits": len(before),
            "fraction_before_above": float(np.mean(np.abs(before) > _CALIBRATION_BEFORE_LEVEL)),
            "fraction_after_above": float(np.mean(np.abs(after) > _CALIBRATION_AFTER_LEVEL)),
            "before_level": _CALIBRATION_BEFORE_LEVEL,
            "after_level": _CALIBRATION_AFTER_LEVEL,
            "max_abs_after": float(np.max(np.abs(after))),
        }
        return RecipeOutput(points=tuple(points), summary=summary)


DEVICE_RECIPES = (
    MagnetizationHeatMap(),
    DeviceBinderAndMagnetization(),
    DeviceSusceptibilities(),
    PeakExtrapolation(),
    CalibrationContrast(),
)
