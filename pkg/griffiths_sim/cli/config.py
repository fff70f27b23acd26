# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Experiment configuration.

One TOML file describes one experiment::

    mode = "qmc"
    master_seed = 20190101

    [lattice]
    sizes = [4, 6]

    [disorder]
    n_instances = 50

    [grid]
    betas = [20.0]
    gammas = [1.5, 1.6, 1.7, 1.8, 1.9]

    [run]
    n_sweeps = 131072

Every section but ``[grid]`` has defaults. The grid needs β and Γ values in ``qmc`` mode and
pause points s* in ``device-sim`` mode.
"""

import hashlib
import json
import tomllib
from pathlib import Path
from typing import Any, Self

from pydantic import Field, NonNegativeFloat, NonNegativeInt, PositiveFloat, PositiveInt, field_validator, model_validator

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.analysis.collapse import CollapseSearchBox
from griffiths_sim.analysis.histogram import DEFAULT_BINS
from griffiths_sim.analysis.tail_fit import FitRangePolicy
from griffiths_sim.annealer.calibration import DEFAULT_CALIBRATION_S_STAR, DEFAULT_CALIBRATION_SAMPLES, DEFAULT_H_LOW, DEFAULT_H_UP, DEFAULT_ROUNDS
from griffiths_sim.annealer.device import DEFAULT_BIAS_HALF_WIDTH
from griffiths_sim.annealer.protocol import DEFAULT_TEMPERATURE_K, ProtocolParams
from griffiths_sim.annealer.samplers import SamplerBackend
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.annealer.schedule_files import bundled_schedule, load_schedule_csv
from griffiths_sim.annealer.susceptibility import DEFAULT_FIELD_POINTS
from griffiths_sim.lattice.chimera import DilutionKind
from griffiths_sim.lattice.disorder import MAX_SEED, DisorderDistribution
from griffiths_sim.observables.resampling import ResamplingMethod
from griffiths_sim.persistence.provenance import Provenance
from griffiths_sim.qmc.chain import ChainParams
from griffiths_sim.qmc.sweep import UpdateScheme
from griffiths_sim.version import RunMode

# Fields that change neither results nor file contents.
_DIGEST_EXCLUDE: dict[str, Any] = {"run": {"workers"}, "output": True}


def _default_z_grid() -> tuple[float, ...]:
    return tuple(0.25 + 0.125 * k for k in range(15))


class LatticeSection(BaseModel):
    sizes: tuple[PositiveInt, ...] = Field(min_length=1)
    dilution: DilutionKind = DilutionKind.DEFAULT

    @field_validator("sizes")
    @classmethod
    def sizes_are_distinct(cls, sizes: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(sizes)) != len(sizes):
            err_msg = f"lattice sizes must be distinct, got {list(sizes)}."
            raise ValueError(err_msg)
        return tuple(sorted(sizes))


class DisorderSection(BaseModel):
    distribution: DisorderDistribution = DisorderDistribution.QMC_SIX_LEVEL
    n_instances: PositiveInt = 50


class GridSection(BaseModel):
    betas: tuple[PositiveFloat, ...] = ()
    gammas: tuple[NonNegativeFloat, ...] = ()
    s_stars: tuple[float, ...] = ()

    @field_validator("s_stars")
    @classmethod
    def s_stars_inside_anneal(cls, s_stars: tuple[float, ...]) -> tuple[float, ...]:
        if any(not 0.0 < s < 1.0 for s in s_stars):
            err_msg = f"pause points must lie in (0, 1), got {list(s_stars)}."
            raise ValueError(err_msg)
        return s_stars


class RunSection(BaseModel):
    M: PositiveInt = Field(default=64, ge=2)
    n_sweeps: PositiveInt = 1 << 16
    n_thermalize: NonNegativeInt | None = None
    measure_interval: PositiveInt = 8
    update: UpdateScheme = UpdateScheme.METROPOLIS
    n_bins: PositiveInt = 32
    workers: PositiveInt = 1

    def chain_params(self) -> ChainParams:
        return ChainParams(
            M=self.M,
            n_sweeps=self.n_sweeps,
            n_thermalize=self.n_thermalize,
            measure_interval=self.measure_interval,
            update=self.update,
            n_bins=self.n_bins,
        )


class DeviceSection(BaseModel):
    """
    The simulated annealer.

    Attributes:
        n_rep: Anneal-pause-quench runs per instance and pause point.
        quench_strength: Quench strength q; unset uses the size-dependent default.
        bias_half_width: Half-width of the uniform intrinsic bias distribution.
        temperature_k: Physical temperature in kelvin.
        schedule: Schedule CSV; unset uses the bundled schedule.
        sampler: Thermal sampler backend.
        M: Trotter slices of the path-integral sampler.
        n_gauges: Random gauges the runs are split over.
        calibrate: Whether ``run`` uses calibrated device states when they exist.
        calibration_rounds: Bisection rounds of the flux-bias calibration.
        calibration_samples: Read-outs per calibration call; unset uses exact expected spins.
        h_up0: Initial upper flux bracket.
        h_low0: Initial lower flux bracket.
        field_points: Points of the field-sweep grid.
        sweep_instances: Instances that get a field sweep; unset sweeps all of them.
        sweep_expectation: Use exact expected magnetizations in field sweeps.

    """

    n_rep: PositiveInt = 100
    quench_strength: float | None = Field(default=None, ge=0.0, le=1.0)
    bias_half_width: NonNegativeFloat = DEFAULT_BIAS_HALF_WIDTH
    temperature_k: PositiveFloat = DEFAULT_TEMPERATURE_K
    schedule: Path | None = None
    sampler: SamplerBackend = SamplerBackend.AUTO
    M: PositiveInt = Field(default=64, ge=2)
    n_gauges: PositiveInt = 1
    calibrate: bool = True
    calibration_rounds: PositiveInt = DEFAULT_ROUNDS
    calibration_samples: PositiveInt | None = DEFAULT_CALIBRATION_SAMPLES
    h_up0: PositiveFloat = DEFAULT_H_UP
    h_low0: float = Field(default=DEFAULT_H_LOW, lt=0.0)
    field_points: PositiveInt = Field(default=DEFAULT_FIELD_POINTS, ge=4)
    sweep_instances: PositiveInt | None = None
    sweep_expectation: bool = False

    @model_validator(mode="after")
    def gauges_fit_runs(self) -> Self:
        if self.n_gauges > self.n_rep:
            err_msg = f"n_gauges ({self.n_gauges}) cannot exceed n_rep ({self.n_rep})."
            raise ValueError(err_msg)
        return self

    def protocol(self, s_star: float) -> ProtocolParams:
        return ProtocolParams(s_star=s_star, n_rep=self.n_rep)

    def calibration_protocol(self) -> ProtocolParams:
        return ProtocolParams(s_star=DEFAULT_CALIBRATION_S_STAR, n_rep=self.n_rep)

    def load_schedule(self) -> Schedule:
        return bundled_schedule() if self.schedule is None else load_schedule_csv(self.schedule)


class AnalysisSection(BaseModel):
    """
    Recipe parameters.

    ``far_gamma`` and ``near_gamma`` pick the Γ of the histogram recipes far from and close to the
    critical point; grid values nearest to them are used. Unset, they default to the largest and
    the median grid value. ``focus_beta`` defaults to the largest β of the grid.
    """

    recipes: tuple[str, ...] = ()
    histogram_bins: PositiveInt = DEFAULT_BINS
    start_factor: PositiveFloat = 0.8
    density_floor: NonNegativeFloat | None = None
    min_count: PositiveInt = 10
    resampling: ResamplingMethod = ResamplingMethod.JACKKNIFE
    focus_beta: PositiveFloat | None = None
    far_gamma: NonNegativeFloat | None = None
    near_gamma: NonNegativeFloat | None = None
    collapse_x_c: tuple[float, float] | None = None
    collapse_nu: tuple[PositiveFloat, PositiveFloat] = (0.5, 3.0)
    collapse_gamma_exponent: tuple[float, float] = (0.2, 3.0)
    collapse_beta_exponent: tuple[float, float] = (0.05, 2.0)
    z_grid: tuple[PositiveFloat, ...] = Field(default_factory=_default_z_grid, min_length=5)

    def fit_policy(self, mode: RunMode) -> FitRangePolicy:
        """The tail-fit range policy; the density floor defaults per run mode."""
        preset = FitRangePolicy.qmc() if mode is RunMode.QMC else FitRangePolicy.device()
        floor = preset.density_floor if self.density_floor is None else self.density_floor
        return FitRangePolicy(start_factor=self.start_factor, density_floor=floor, min_count=self.min_count)

    def collapse_box(self, x_values: tuple[float, ...], exponent: tuple[float, float] | None = None) -> CollapseSearchBox:
        x_c = self.collapse_x_c or (min(x_values), max(x_values))
        return CollapseSearchBox(x_c=x_c, nu=self.collapse_nu, exponent=exponent)


class OutputSection(BaseModel):
    directory: Path = Path("out")


class ExperimentConfig(BaseModel):
    """A validated experiment description; see the module docstring for the file format."""

    mode: RunMode = RunMode.QMC
    master_seed: int = Field(ge=0, le=MAX_SEED)
    lattice: LatticeSection
    disorder: DisorderSection = Field(default_factory=DisorderSection)
    grid: GridSection = Field(default_factory=GridSection)
    run: RunSection = Field(default_factory=RunSection)
    device: DeviceSection = Field(default_factory=DeviceSection)
    analysis: AnalysisSection = Field(default_factory=AnalysisSection)
    output: OutputSection = Field(default_factory=OutputSection)

    @model_validator(mode="after")
    def grid_fits_mode(self) -> Self:
        if self.mode is RunMode.QMC and (not self.grid.betas or not self.grid.gammas):
            err_msg = "qmc mode needs non-empty grid.betas and grid.gammas."
            raise ValueError(err_msg)
        if self.mode is RunMode.DEVICE_SIM and not self.grid.s_stars:
            err_msg = "device-sim mode needs a non-empty grid.s_stars."
            raise ValueError(err_msg)
        return self

    @model_validator(mode="after")
    def recipes_exist(self) -> Self:
        from griffiths_sim.recipes import RecipeRegistry  # noqa: PLC0415

        for name in self.analysis.recipes:
            recipe = RecipeRegistry.get_recipe(name)
            if recipe.mode is not self.mode:
                err_msg = f"recipe {name!r} needs {recipe.mode} data, but the experiment runs in {self.mode} mode."
                raise ValueError(err_msg)
        return self

    def digest(self) -> str:
        """Sha256 of the canonical JSON form, ignoring the worker count and the output location."""
        canonical = json.dumps(self.model_dump(mode="json", exclude=_DIGEST_EXCLUDE), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def provenance(self) -> Provenance:
        return Provenance.current(self.digest())


def load_config(path: Path, *, seed: int | None = None, out: Path | None = None, workers: int | None = None) -> ExperimentConfig:
    """
    Read and validate an experiment file, applying command-line overrides.

    Args:
        path: The TOML file.
        seed: Replaces ``master_seed``.
        out: Replaces ``output.directory``.
        workers: Replaces ``run.workers``.

    Returns:
        The validated configuration.

    Raises:
        OSError: If the file cannot be read.
        tomllib.TOMLDecodeError: If the file is not valid TOML.
        pydantic.ValidationError: With the field path of every invalid or missing value.

    """
    with path.open("rb") as handle:
        document = tomllib.load(handle)
    if seed is not None:
        document["master_seed"] = seed
    if out is not None:
        document.setdefault("output", {})["directory"] = str(out)
    if workers is not None:
        document.setdefault("run", {})["workers"] = workers
    return ExperimentConfig.model_validate(document)
