# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Figure recipes on path-integral QMC record logs.

Histogram and Binder recipes work at one inverse temperature, ``analysis.focus_beta`` (default:
the largest β of the grid). Recipes far from and close to the critical point pick the grid Γ
nearest to ``analysis.far_gamma`` and ``analysis.near_gamma``.
"""

import math
from collections.abc import Callable, Sequence
from enum import StrEnum
from typing import ClassVar, final

import numpy as np
import numpy.typing as npt

from griffiths_sim._models.common.figure_point import FigurePoint
from griffiths_sim.analysis.collapse import ScalingCurve, ScalingObservable, optimize_collapse, rescaled_points
from griffiths_sim.analysis.crossing import find_crossing
from griffiths_sim.analysis.dynamical import scan_dynamical_z
from griffiths_sim.analysis.extrapolation import linear_extrapolate
from griffiths_sim.analysis.histogram import Histogram, build_histogram
from griffiths_sim.analysis.tail_fit import ExponentEstimate, SlopeFit, dz_from_linear_slope, dz_from_nonlinear_slope, fit_tail_slope, size_dependent_slope
from griffiths_sim.errors import FitError
from griffiths_sim.logging import logger
from griffiths_sim.observables.estimates import (
    EnsembleEstimate,
    binder_ratio,
    global_susceptibility,
    magnetization_average,
    pool_global_susceptibilities,
    pool_local_susceptibilities,
)
from griffiths_sim.qmc.records import MomentRecord
from griffiths_sim.recipes._base import Recipe, RecipeContext, RecipeOutput, dump, group_by
from griffiths_sim.version import RunMode

# Floor of curve errors, so that single-instance cells do not break weighted fits.
_MIN_ERROR = 1e-9

type CellEstimator = Callable[[RecipeContext, list[MomentRecord]], EnsembleEstimate | None]


def _nearest(values: Sequence[float], target: float | None, fallback: float) -> float:
    goal = fallback if target is None else target
    return min(values, key=lambda value: abs(value - goal))


def focus_beta(context: RecipeContext) -> float:
    betas = context.config.grid.betas
    return _nearest(betas, context.config.analysis.focus_beta, max(betas))


def far_gamma(context: RecipeContext) -> float:
    gammas = context.config.grid.gammas
    return _nearest(gammas, context.config.analysis.far_gamma, max(gammas))


def near_gamma(context: RecipeContext) -> float:
    gammas = context.config.grid.gammas
    return _nearest(gammas, context.config.analysis.near_gamma, float(np.median(gammas)))


def _cell(records: list[MomentRecord], beta: float, gamma: float) -> list[MomentRecord]:
    return [record for record in records if record.beta == beta and record.gamma == gamma]


def _binder_g(context: RecipeContext, cell: list[MomentRecord]) -> EnsembleEstimate:
    return binder_ratio(cell, context.config.analysis.resampling).g


def _binder_log(context: RecipeContext, cell: list[MomentRecord]) -> EnsembleEstimate | None:
    return binder_ratio(cell, context.config.analysis.resampling).log_scale


def _susceptibility(context: RecipeContext, cell: list[MomentRecord]) -> EnsembleEstimate:
    return global_susceptibility(cell, cell[0].beta, cell[0].n_sites, context.config.analysis.resampling)


def _magnetization(context: RecipeContext, cell: list[MomentRecord]) -> EnsembleEstimate:
    return magnetization_average(cell, context.config.analysis.resampling)


def curves_at(context: RecipeContext, beta: float, estimator: CellEstimator) -> tuple[list[ScalingCurve], list[EnsembleEstimate]]:
    """One curve per size of an estimator against Γ at fixed β, skipping cells where it is undefined."""
    curves, estimates = [], []
    for L, records in context.qmc_records.items():
        xs, ys, errors = [], [], []
        for (beta_key, gamma), cell in group_by(records, "beta", "gamma").items():
            if beta_key != beta or (estimate := estimator(context, cell)) is None:
                continue
            estimates.append(estimate)
            xs.append(gamma)
            ys.append(estimate.value)
            errors.append(max(estimate.error, _MIN_ERROR))
        if len(xs) >= 2:  # noqa: PLR2004
            curves.append(ScalingCurve(L=L, x=xs, y=ys, y_err=errors))
        else:
            logger.warning("ANALYSIS - fewer than two Γ points for L=%d at β=%g, curve dropped", L, beta)
    return curves, estimates


def curve_points(recipe: str, curves: Sequence[ScalingCurve], prefix: str = "") -> list[FigurePoint]:
    return [
        FigurePoint(recipe=recipe, series=f"{prefix}L={curve.L}", x=x, y=y, y_err=e)
        for curve in curves
        for x, y, e in zip(curve.x, curve.y, curve.y_err, strict=True)
    ]


def histogram_points(recipe: str, series: str, histogram: Histogram) -> list[FigurePoint]:
    return [FigurePoint(recipe=recipe, series=series, x=float(x), y=float(p)) for x, p in zip(histogram.centers(), histogram.density, strict=True)]


def fit_line_points(recipe: str, series: str, fit: SlopeFit) -> list[FigurePoint]:
    """The fitted power law at the ends of its range."""
    return [FigurePoint(recipe=recipe, series=series, x=x, y=math.exp(fit.intercept) * x**fit.slope) for x in (fit.x_lo, fit.x_hi)]


class TailSource(StrEnum):
    """The susceptibility whose distribution a tail fit reads."""

    CHI_LOC = "chi_loc"
    CHI_NLLOC = "chi_nlloc"
    CHI = "chi"
    CHI_NL = "chi_nl"

    def samples(self, cell: list[MomentRecord]) -> npt.NDArray[np.float64]:
        """Pooled per-site values for local sources, one value per instance for global ones."""
        if self in {TailSource.CHI_LOC, TailSource.CHI_NLLOC}:
            linear, nonlinear = pool_local_susceptibilities(cell)
        else:
            linear, nonlinear = pool_global_susceptibilities(cell)
        return linear if self in {TailSource.CHI_LOC, TailSource.CHI} else nonlinear

    def exponent(self, fit: SlopeFit, control: float) -> ExponentEstimate:
        if self in {TailSource.CHI_LOC, TailSource.CHI}:
            return dz_from_linear_slope(fit, control)
        return dz_from_nonlinear_slope(fit, control)


def _tail_fit(context: RecipeContext, cell: list[MomentRecord], source: TailSource) -> tuple[Histogram, SlopeFit | None] | None:
    analysis = context.config.analysis
    try:
        histogram = build_histogram(source.samples(cell), n_bins=analysis.histogram_bins)
    except ValueError as e:
        logger.warning("ANALYSIS - no %s histogram: %s", source, e)
        return None
    try:
        fit = fit_tail_slope(histogram, analysis.fit_policy(RunMode.QMC))
    except FitError as e:
        logger.warning("ANALYSIS - no %s tail fit: %s", source, e)
        fit = None
    return histogram, fit


class TailRecipe(Recipe):
    """
    Histograms of one or more susceptibilities at a single (β, Γ) for every size, with tail fits.

    The first source is the recipe's main estimate; the reported slope is the largest-size fit.
    """

    mode = RunMode.QMC
    sources: ClassVar[tuple[TailSource, ...]]
    near_critical: ClassVar[bool]

    def run(self, context: RecipeContext) -> RecipeOutput:
        beta = focus_beta(context)
        gamma = near_gamma(context) if self.near_critical else far_gamma(context)
        points: list[FigurePoint] = []
        summary: dict[str, object] = {"beta": beta, "gamma": gamma}
        for source in self.sources:
            fits: dict[int, SlopeFit] = {}
            for L, records in context.qmc_records.items():
                result = _tail_fit(context, _cell(records, beta, gamma), source)
                if result is None:
                    continue
                histogram, fit = result
                points.extend(histogram_points(self.name, f"{source} L={L}", histogram))
                if fit is not None:
                    fits[L] = fit
                    points.extend(fit_line_points(self.name, f"{source} fit L={L}", fit))
            if not fits:
                err_msg = f"no {source} tail fit succeeded at β={beta}, Γ={gamma}."
                raise FitError(err_msg)
            slope = size_dependent_slope(fits)
            summary[source] = {
                "fits": {str(L): dump(fit) for L, fit in fits.items()},
                "slope": dump(slope),
                "estimate": dump(source.exponent(slope, gamma)),
            }
        return RecipeOutput(points=tuple(points), summary=summary)


@final
class LocalHistogramFar(TailRecipe):
    name = "fig4"
    description = "P(χ_loc) far from the critical point, with the tail fit and d/z′"
    sources = (TailSource.CHI_LOC,)
    near_critical = False


@final
class LocalHistogramNear(TailRecipe):
    name = "fig5"
    description = "P(χ_loc) close to the critical point, with size-dependent slopes"
    sources = (TailSource.CHI_LOC,)
    near_critical = True


@final
class NonlinearLocalHistogram(TailRecipe):
    name = "fig7"
    description = "P(χ_nlloc) far from the critical point, converted with d/(3z′)"
    sources = (TailSource.CHI_NLLOC,)
    near_critical = False


@final
class GlobalNonlinearHistogram(TailRecipe):
    name = "fig13"
    description = "P(χ_nl) close to the critical point, next to the global linear estimate"
    sources = (TailSource.CHI_NL, TailSource.CHI)
    near_critical = True


class ExponentScanRecipe(Recipe):
    """d/z′ against Γ at the focus β, from the largest size, for each source."""

    mode = RunMode.QMC
    sources: ClassVar[tuple[TailSource, ...]]

    def run(self, context: RecipeContext) -> RecipeOutput:
        beta = focus_beta(context)
        L = max(context.qmc_records)
        records = context.qmc_records[L]
        points: list[FigurePoint] = []
        estimates: dict[str, list[object]] = {}
        for source in self.sources:
            estimates[source] = []
            for gamma in sorted(context.config.grid.gammas):
                result = _tail_fit(context, _cell(records, beta, gamma), source)
                if result is None or result[1] is None:
                    continue
                estimate = source.exponent(result[1], gamma)
                estimates[source].append(dump(estimate))
                points.append(FigurePoint(recipe=self.name, series=source, x=gamma, y=estimate.d_over_zprime, y_err=estimate.error))
        if not points:
            err_msg = f"no tail fit succeeded for L={L} at β={beta}."
            raise FitError(err_msg)
        return RecipeOutput(points=tuple(points), summary={"beta": beta, "L": L, "estimates": estimates})


@final
class LocalExponentScan(ExponentScanRecipe):
    name = "fig9"
    description = "d/z′ against Γ from χ_loc and χ_nlloc"
    sources = (TailSource.CHI_LOC, TailSource.CHI_NLLOC)


@final
class GlobalExponentScan(ExponentScanRecipe):
    name = "fig11"
    description = "d/z′ against Γ from the global linear susceptibility"
    sources = (TailSource.CHI,)


@final
class BinderCrossing(Recipe):
    name = "fig2a"
    mode = RunMode.QMC
    description = "−ln(1 − g) against Γ for every size, with the crossings of consecutive sizes"

    def run(self, context: RecipeContext) -> RecipeOutput:
        beta = focus_beta(context)
        curves, estimates = curves_at(context, beta, _binder_log)
        crossings = find_crossing(curves)
        return RecipeOutput(
            points=tuple(curve_points(self.name, curves)),
            estimates=tuple(estimates),
            summary={"beta": beta, "crossings": [dump(crossing) for crossing in crossings]},
        )


class CollapseRecipe(Recipe):
    """Finite-size-scaling collapse of one observable against Γ at the focus β."""

    mode = RunMode.QMC
    observable: ClassVar[ScalingObservable]
    estimator: ClassVar[CellEstimator]

    def exponent_bounds(self, context: RecipeContext) -> tuple[float, float] | None:
        del context
        return None

    def run(self, context: RecipeContext) -> RecipeOutput:
        beta = focus_beta(context)
        curves, estimates = curves_at(context, beta, self.estimator)
        box = context.config.analysis.collapse_box(context.config.grid.gammas, self.exponent_bounds(context))
        fit = optimize_collapse(curves, box, self.observable)
        collapsed = [FigurePoint(recipe=self.name, series=f"collapsed L={L}", x=x, y=y, y_err=e) for L, x, y, e in rescaled_points(curves, fit)]
        return RecipeOutput(
            points=(*curve_points(self.name, curves), *collapsed),
            estimates=tuple(estimates),
            summary={"beta": beta, "box": dump(box), "fit": dump(fit)},
        )


@final
class BinderCollapse(CollapseRecipe):
    name = "fig2b"
    description = "Binder-ratio collapse giving Γ_c and ν"
    observable = ScalingObservable.BINDER
    estimator = staticmethod(_binder_g)


@final
class SusceptibilityCollapse(CollapseRecipe):
    name = "fig22"
    description = "Global-susceptibility collapse giving Γ_c, ν and γ"
    observable = ScalingObservable.SUSCEPTIBILITY
    estimator = staticmethod(_susceptibility)

    def exponent_bounds(self, context: RecipeContext) -> tuple[float, float] | None:
        return context.config.analysis.collapse_gamma_exponent


@final
class MagnetizationCollapse(CollapseRecipe):
    name = "fig23"
    description = "[⟨|m|⟩] collapse giving Γ_c, ν and the magnetization exponent"
    observable = ScalingObservable.MAGNETIZATION
    estimator = staticmethod(_magnetization)

    def exponent_bounds(self, context: RecipeContext) -> tuple[float, float] | None:
        return context.config.analysis.collapse_beta_exponent


@final
class CriticalPointExtrapolation(Recipe):
    name = "fig3"
    mode = RunMode.QMC
    description = "Γ_c(T) and ν(T) from Binder collapses at every β, extrapolated linearly to T = 0"

    def run(self, context: RecipeContext) -> RecipeOutput:
        temperatures, fits = [], []
        for beta in sorted(context.config.grid.betas):
            curves, _ = curves_at(context, beta, _binder_g)
            box = context.config.analysis.collapse_box(context.config.grid.gammas)
            try:
                fits.append(optimize_collapse(curves, box, ScalingObservable.BINDER))
            except FitError as e:
                logger.warning("ANALYSIS - Binder collapse failed at β=%g: %s", beta, e)
                continue
            temperatures.append(1.0 / beta)
        points: list[FigurePoint] = []
        summary: dict[str, object] = {"collapses": {str(T): dump(fit) for T, fit in zip(temperatures, fits, strict=True)}}
        for parameter in ("x_c", "nu"):
            values = [getattr(fit, parameter) for fit in fits]
            errors = [getattr(fit, f"{parameter}_error") for fit in fits]
            points.extend(FigurePoint(recipe=self.name, series=parameter, x=T, y=v, y_err=e) for T, v, e in zip(temperatures, values, errors, strict=True))
            extrapolation = linear_extrapolate(temperatures, values, errors if all(e > 0.0 for e in errors) else None)
            points.extend(FigurePoint(recipe=self.name, series=f"{parameter} fit", x=T, y=extrapolation.value_at(T)) for T in (0.0, max(temperatures)))
            summary[f"{parameter}_zero_temperature"] = dump(extrapolation)
        return RecipeOutput(points=tuple(points), summary=summary)


@final
class DynamicalExponentScan(Recipe):
    name = "fig25"
    mode = RunMode.QMC
    description = "MSE of the quadratic master curve of g(β/L^z) against z near the critical point"

    def run(self, context: RecipeContext) -> RecipeOutput:
        gamma = near_gamma(context)
        triples = []
        for L, records in context.qmc_records.items():
            for beta in context.config.grid.betas:
                cell = _cell(records, beta, gamma)
                if not cell:
                    continue
                g = _binder_g(context, cell).value
                if g > 0.0:
                    triples.append((beta, L, g))
        scan = scan_dynamical_z(triples, context.config.analysis.z_grid)
        points = [FigurePoint(recipe=self.name, series="mse", x=z, y=mse) for z, mse in zip(scan.z_grid, scan.mse, strict=True)]
        points.extend(FigurePoint(recipe=self.name, series=f"L={L}", x=beta / L**scan.z_star, y=g) for beta, L, g in triples)
        return RecipeOutput(points=tuple(points), summary={"gamma": gamma, "scan": dump(scan)})


QMC_RECIPES: tuple[Recipe, ...] = (
    BinderCrossing(),
    BinderCollapse(),
    CriticalPointExtrapolation(),
    LocalHistogramFar(),
    LocalHistogramNear(),
    NonlinearLocalHistogram(),
    LocalExponentScan(),
    GlobalExponentScan(),
    GlobalNonlinearHistogram(),
    SusceptibilityCollapse(),
    MagnetizationCollapse(),
    DynamicalExponentScan(),
)
