# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The verification battery: checks of the pipeline against exact oracles and planted answers.

``quick`` runs in minutes on a laptop; ``full`` repeats the oracle and stationarity checks at
their full statistics and adds the desk-scale Griffiths-trend and device peak runs, which take
hours.
"""

import tempfile
import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import TYPE_CHECKING, final

import numpy as np
from pydantic import NonNegativeFloat

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.analysis.collapse import CollapseSearchBox, optimize_collapse
from griffiths_sim.analysis.dynamical import scan_dynamical_z
from griffiths_sim.analysis.histogram import build_histogram
from griffiths_sim.analysis.tail_fit import FitRangePolicy, SusceptibilityKind, dz_from_linear_slope, dz_from_nonlinear_slope, fit_tail_slope
from griffiths_sim.annealer.calibration import DEFAULT_CALIBRATION_S_STAR, calibrate_flux_bias, zero_problem_means
from griffiths_sim.annealer.device import DeviceFactory
from griffiths_sim.annealer.protocol import DEVICE_TO_QMC_SCALE, ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.samplers import ExactThermalSampler
from griffiths_sim.annealer.schedule_files import bundled_schedule
from griffiths_sim.annealer.susceptibility import default_field_grid, field_sweep_susceptibility
from griffiths_sim.errors import GriffithsSimError
from griffiths_sim.lattice.chimera import build_diluted_chimera
from griffiths_sim.lattice.disorder import DisorderDistribution, DisorderInstance, sample_disorder
from griffiths_sim.logging import logger
from griffiths_sim.oracle.path_enumeration import path_boltzmann_distribution, total_variation_distance
from griffiths_sim.oracle.spectral import exact_thermal_moments
from griffiths_sim.qmc.chain import run_chain
from griffiths_sim.qmc.couplings import effective_couplings
from griffiths_sim.qmc.hamiltonian import IsingProblem
from griffiths_sim.qmc.state import init_state
from griffiths_sim.qmc.sweep import SweepEngine, UpdateScheme
from griffiths_sim.verification.synthetic import binder_curves, dynamical_points, power_law_susceptibilities

if TYPE_CHECKING:
    from griffiths_sim.cli.config import ExperimentConfig

_ANCHOR_S_STAR = 0.386
_ANCHOR_BETA = 2.49
_ANCHOR_GAMMA = 1.37
_ANCHOR_TOLERANCE = 0.01

_TV_THRESHOLD = 0.01
_TROTTER_SHRINK = 3.0
_DEVICE_CHI_TOLERANCE = 0.05

_CALIBRATION_BEFORE_LEVEL = 0.1
_CALIBRATION_BEFORE_FRACTION = 0.25
_CALIBRATION_AFTER_LEVEL = 0.05
_CALIBRATION_RUNS = 100


class Level(StrEnum):
    QUICK = "quick"
    FULL = "full"


class CheckResult(BaseModel):
    """Outcome of one check; ``measured`` holds the numbers the verdict was based on."""

    name: str
    passed: bool
    detail: str
    measured: dict[str, float] = {}
    seconds: NonNegativeFloat = 0.0


class BatteryResult(BaseModel):
    level: Level
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failed(self) -> list[str]:
        return [result.name for result in self.results if not result.passed]


type Verdict = tuple[bool, str, dict[str, float]]


@final
@dataclass(frozen=True)
class Check:
    name: str
    levels: frozenset[Level]
    run: Callable[[Level], Verdict]


def _one_cell_instances(n: int, seed: int) -> list[DisorderInstance]:
    graph = build_diluted_chimera(1)
    return [sample_disorder(graph, DisorderDistribution.QMC_SIX_LEVEL, seed + k, instance_id=k) for k in range(n)]


def check_schedule_mapping(level: Level) -> Verdict:
    """The bundled schedule maps the anchor pause point to the published (β, Γ)."""
    del level
    beta, gamma = map_s_to_beta_gamma(bundled_schedule(), _ANCHOR_S_STAR)
    passed = abs(beta - _ANCHOR_BETA) <= _ANCHOR_TOLERANCE and abs(gamma - _ANCHOR_GAMMA) <= _ANCHOR_TOLERANCE
    return passed, f"s*={_ANCHOR_S_STAR} maps to beta={beta:.4f}, gamma={gamma:.4f}", {"beta": beta, "gamma": gamma}


def check_exponent_recovery(level: Level) -> Verdict:
    """Planted d/z′ come back from histogram, tail fit and conversion within two standard errors."""
    del level
    measured: dict[str, float] = {}
    misses = []
    for kind, convert in ((SusceptibilityKind.LINEAR, dz_from_linear_slope), (SusceptibilityKind.NONLINEAR, dz_from_nonlinear_slope)):
        for planted in (2.0, 5.0, 12.0):
            samples = power_law_susceptibilities(planted, 100_000, kind, seed=int(planted) + 100 * (kind is SusceptibilityKind.NONLINEAR))
            estimate = convert(fit_tail_slope(build_histogram(samples), FitRangePolicy.qmc()))
            measured[f"{kind}_{planted:g}"] = estimate.d_over_zprime
            if abs(estimate.d_over_zprime - planted) > 2.0 * estimate.error:
                misses.append(f"{kind} {planted:g} -> {estimate.d_over_zprime:.3f}±{estimate.error:.3f}")
    return not misses, "; ".join(misses) or "all planted exponents recovered", measured


def check_collapse_and_z_scan(level: Level) -> Verdict:
    """A Binder collapse recovers (x_c, ν) = (1.75, 1.4); the z scan recovers z = 1 to one grid step."""
    del level
    curves = binder_curves(1.75, 1.4, (4, 6, 8, 12), np.linspace(1.45, 2.05, 13), noise=0.002, seed=7)
    fit = optimize_collapse(curves, CollapseSearchBox(x_c=(1.5, 2.0), nu=(0.8, 2.5)))
    z_grid = 0.25 + 0.125 * np.arange(15)
    scan = scan_dynamical_z(dynamical_points(1.0, (2.0, 4.0, 8.0, 16.0, 32.0), (4, 6, 8, 12), noise=0.005, seed=7), z_grid)
    x_c_ok = abs(fit.x_c - 1.75) <= max(2.0 * fit.x_c_error, 0.02)
    nu_ok = abs(fit.nu - 1.4) <= max(2.0 * fit.nu_error, 0.1)
    z_ok = abs(scan.z_star - 1.0) <= 0.125 + 1e-12
    detail = f"x_c={fit.x_c:.4f}±{fit.x_c_error:.4f}, nu={fit.nu:.3f}±{fit.nu_error:.3f}, z*={scan.z_star:g}"
    return x_c_ok and nu_ok and z_ok, detail, {"x_c": fit.x_c, "nu": fit.nu, "z_star": scan.z_star}


def check_stationarity(level: Level) -> Verdict:
    """A two-site, four-slice chain samples the exact path distribution."""
    n_sweeps = 10_000_000 if level is Level.FULL else 2_000_000
    problem = IsingProblem(n_sites=2, edges=((0, 1),), couplings=(1.0,), fields=(0.3, 0.0), label="pair")
    couplings = effective_couplings(1.0, 1.0, 4, problem)
    state = init_state(problem, 4, 1.0, 11)
    rng = np.random.default_rng(12)
    engine = SweepEngine(couplings, UpdateScheme.METROPOLIS)
    engine.run(state, 1000, rng)
    codes = engine.run(state, n_sweeps, rng, record_codes=True).codes
    distance = total_variation_distance(codes, path_boltzmann_distribution(couplings))
    return distance < _TV_THRESHOLD, f"total variation {distance:.5f} after {n_sweeps} sweeps", {"total_variation": distance}


def check_oracle_equivalence(level: Level) -> Verdict:
    """
    QMC ⟨m²⟩ and ⟨m_i²⟩ agree with the exact imaginary-time integrals on one Chimera cell.

    The tolerance is three statistical errors plus a Trotter bias bound: the M = 16 deviation
    divided by three, which the M = 64 deviation must respect.
    """
    if level is Level.FULL:
        instances, points, n_sweeps = _one_cell_instances(5, 2024), [(b, g) for b in (2.0, 10.0) for g in (0.5, 1.0, 2.0)], 1 << 18
    else:
        instances, points, n_sweeps = _one_cell_instances(1, 2024), [(2.0, 1.0), (10.0, 2.0)], 1 << 15
    worst = 0.0
    misses = []
    for instance in instances:
        for k, (beta, gamma) in enumerate(points):
            exact = exact_thermal_moments(instance, beta, gamma)
            coarse = run_chain(instance, beta, gamma, M=16, n_sweeps=n_sweeps, seed=2 * k, update=UpdateScheme.HYBRID)
            fine = run_chain(instance, beta, gamma, M=64, n_sweeps=n_sweeps, seed=2 * k + 1, update=UpdateScheme.HYBRID)
            bias_bound = abs(coarse.m2 - exact.chi_global) / _TROTTER_SHRINK
            deviation = abs(fine.m2 - exact.chi_global)
            site_deviation = np.abs(fine.mi2.as_array() - exact.chi_loc_array())
            site_bias = np.abs(coarse.mi2.as_array() - exact.chi_loc_array()) / _TROTTER_SHRINK
            site_ok = np.all(site_deviation <= 3.0 * fine.mi2_err.as_array() + site_bias + 1e-12)
            worst = max(worst, deviation / max(3.0 * fine.m2_err + bias_bound, 1e-12))
            if deviation > 3.0 * fine.m2_err + bias_bound + 1e-12 or not site_ok:
                misses.append(f"{instance.label} beta={beta:g} gamma={gamma:g}: m2 {fine.m2:.5f} vs {exact.chi_global:.5f}")
    return not misses, "; ".join(misses) or f"{len(instances) * len(points)} cells agree", {"worst_ratio": worst}


def check_calibration_efficacy(level: Level) -> Verdict:
    """
    Calibration removes uniform ±0.05 biases: many qubits are off before, none after.

    The device keeps its default quench. Every device call is sampled, and the read-outs before and
    after are averaged over 100 runs of ``n_rep`` read-outs each.
    """
    del level
    schedule = bundled_schedule()
    graph = build_diluted_chimera(2)
    device = DeviceFactory.create(sample_disorder(graph, DisorderDistribution.QMC_SIX_LEVEL, 5), seed=17, bias_half_width=0.05)
    protocol = ProtocolParams(s_star=DEFAULT_CALIBRATION_S_STAR)
    n_reads = _CALIBRATION_RUNS * protocol.n_rep
    before = zero_problem_means(device, schedule, protocol, n_runs=n_reads, seed=1)
    calibrated = calibrate_flux_bias(device, schedule, n_rounds=20, protocol=protocol, seed=2).device
    after = zero_problem_means(calibrated, schedule, protocol, n_runs=n_reads, seed=3)
    fraction_before = float(np.mean(np.abs(before) > _CALIBRATION_BEFORE_LEVEL))
    fraction_after = float(np.mean(np.abs(after) >= _CALIBRATION_AFTER_LEVEL))
    passed = fraction_before >= _CALIBRATION_BEFORE_FRACTION and fraction_after == 0.0
    detail = f"{fraction_before:.0%} of qubits above {_CALIBRATION_BEFORE_LEVEL} before, {fraction_after:.0%} above {_CALIBRATION_AFTER_LEVEL} after"
    return passed, detail, {"fraction_before": fraction_before, "fraction_after": fraction_after, "max_after": float(np.max(np.abs(after)))}


def check_device_consistency(level: Level) -> Verdict:
    """
    The field-sweep χ of a noiseless one-cell device equals the Kubo value β_QMC·N·χ_global·2.

    The factor 2 converts the QMC field to device units.
    """
    del level
    schedule = bundled_schedule()
    instance = _one_cell_instances(1, 99)[0]
    device = DeviceFactory.create(instance, seed=3, bias_half_width=0.0, quench_strength=0.0)
    protocol = ProtocolParams(s_star=_ANCHOR_S_STAR)
    beta, gamma = map_s_to_beta_gamma(schedule, protocol.s_star, device.temperature_k)
    exact = exact_thermal_moments(device.physical_problem(), beta, gamma)
    chi_kubo = DEVICE_TO_QMC_SCALE * beta * instance.n_sites * exact.chi_global
    fields = default_field_grid(beta, 11, chi_bound=max(2.0 * chi_kubo, DEVICE_TO_QMC_SCALE * beta))
    sweep = field_sweep_susceptibility(device, protocol, schedule, fields, sampler=ExactThermalSampler(), degree=5, expectation=True)
    relative = abs(sweep.chi - chi_kubo) / chi_kubo
    return relative <= _DEVICE_CHI_TOLERANCE, f"chi {sweep.chi:.5g} against {chi_kubo:.5g}", {"chi": sweep.chi, "chi_kubo": chi_kubo, "relative": relative}


def _trend_config(directory: Path) -> "ExperimentConfig":
    from griffiths_sim.cli.config import ExperimentConfig  # noqa: PLC0415

    return ExperimentConfig.model_validate(
        {
            "mode": "qmc",
            "master_seed": 20,
            "lattice": {"sizes": [4, 6]},
            "disorder": {"n_instances": 50},
            "grid": {"betas": [20.0], "gammas": [1.55, 1.6, 1.65, 1.7, 1.75, 1.79, 1.85, 1.895, 1.95]},
            "run": {"M": 64, "n_sweeps": 1 << 17},
            "analysis": {"recipes": ["fig2a", "fig9"]},
            "output": {"directory": str(directory)},
        },
    )


def check_griffiths_trend(level: Level) -> Verdict:
    """
    Desk-scale QMC run: the Binder crossing falls inside [1.55, 1.95] and d/z′ from local χ falls towards it.

    Between Γ ≈ 1.79 and Γ ≈ 1.895 the drop must exceed three combined errors.
    """
    from griffiths_sim.cli.commands import cmd_run  # noqa: PLC0415
    from griffiths_sim.recipes import RecipeContext, RecipeRegistry  # noqa: PLC0415

    del level
    with tempfile.TemporaryDirectory() as directory:
        config = _trend_config(Path(directory))
        cmd_run(config)
        context = RecipeContext(config)
        crossings = RecipeRegistry.get_recipe("fig2a").run(context).summary["crossings"]
        estimates = RecipeRegistry.get_recipe("fig9").run(context).summary["estimates"]["chi_loc"]
    inside = [c["x"] for c in crossings if 1.55 <= c["x"] <= 1.95]  # noqa: PLR2004
    if not inside:
        return False, f"no Binder crossing inside [1.55, 1.95]: {[c['x'] for c in crossings]}", {}
    crossing = float(np.mean(inside))
    by_gamma = {e["control"]: (e["d_over_zprime"], e["error"]) for e in estimates}
    falling = sorted(g for g in by_gamma if crossing <= g <= 1.9)  # noqa: PLR2004
    monotone = all(by_gamma[a][0] <= by_gamma[b][0] + np.hypot(by_gamma[a][1], by_gamma[b][1]) for a, b in zip(falling, falling[1:], strict=False))
    near = min(by_gamma, key=lambda g: abs(g - 1.79))
    far = min(by_gamma, key=lambda g: abs(g - 1.895))
    drop = by_gamma[far][0] - by_gamma[near][0]
    significant = drop >= 3.0 * np.hypot(by_gamma[far][1], by_gamma[near][1])
    detail = f"crossing {crossing:.3f}, d/z′ {by_gamma[near][0]:.2f} at {near} vs {by_gamma[far][0]:.2f} at {far}"
    return monotone and significant, detail, {"crossing": crossing, "drop": drop}


def check_device_peaks(level: Level) -> Verdict:
    """
    Simulated device sweeps over L ∈ {2, 3, 4}: the susceptibility peaks extrapolate to a finite s_c inside the window.

    The quick level averages four instances per size over seven pause points, the full level sixteen over nine.
    """
    from griffiths_sim.cli.commands import cmd_run  # noqa: PLC0415
    from griffiths_sim.cli.config import ExperimentConfig  # noqa: PLC0415
    from griffiths_sim.recipes import RecipeContext, RecipeRegistry  # noqa: PLC0415

    if level is Level.FULL:
        n_instances, s_stars = 16, [0.30, 0.32, 0.34, 0.36, 0.38, 0.40, 0.42, 0.44, 0.46]
    else:
        n_instances, s_stars = 4, [0.30, 0.33, 0.36, 0.38, 0.40, 0.43, 0.46]
    with tempfile.TemporaryDirectory() as directory:
        config = ExperimentConfig.model_validate(
            {
                "mode": "device-sim",
                "master_seed": 21,
                "lattice": {"sizes": [2, 3, 4]},
                "disorder": {"distribution": "dwave-six-level", "n_instances": n_instances},
                "grid": {"s_stars": s_stars},
                "device": {"calibrate": False, "n_rep": 100},
                "output": {"directory": directory},
            },
        )
        cmd_run(config)
        summary = RecipeRegistry.get_recipe("dfig19").run(RecipeContext(config)).summary
    found = {name: entry for name, entry in summary.items() if isinstance(entry, dict) and np.isfinite(entry["s_c"])}
    inside = {name: entry["s_c"] for name, entry in found.items() if entry["inside_window"]}
    return bool(inside), f"s_c estimates {inside or {name: e['s_c'] for name, e in found.items()}}", {f"s_c_{name}": value for name, value in inside.items()}


CHECKS = (
    Check("schedule-mapping", frozenset(Level), check_schedule_mapping),
    Check("exponent-recovery", frozenset(Level), check_exponent_recovery),
    Check("collapse-and-z-scan", frozenset(Level), check_collapse_and_z_scan),
    Check("stationarity", frozenset(Level), check_stationarity),
    Check("oracle-equivalence", frozenset(Level), check_oracle_equivalence),
    Check("calibration-efficacy", frozenset(Level), check_calibration_efficacy),
    Check("device-consistency", frozenset(Level), check_device_consistency),
    Check("griffiths-trend", frozenset({Level.FULL}), check_griffiths_trend),
    Check("device-peaks", frozenset(Level), check_device_peaks),
)


def run_battery(level: Level | str = Level.QUICK, checks: tuple[Check, ...] = CHECKS) -> BatteryResult:
    """
    Run every check of the level; a check that raises is reported as failed.

    Returns:
        The verdict of every check, in battery order.

    """
    level = Level(level)
    results = []
    for check in checks:
        if level not in check.levels:
            continue
        logger.info("VERIFY - running %s", check.name)
        started = time.perf_counter()
        try:
            passed, detail, measured = check.run(level)
        except (GriffithsSimError, ValueError, KeyError) as e:
            logger.exception("VERIFY - %s raised", check.name)
            passed, detail, measured = False, f"{type(e).__name__}: {e}", {}
        elapsed = time.perf_counter() - started
        logger.info("VERIFY - %s %s in %.1f s: %s", check.name, "passed" if passed else "FAILED", elapsed, detail)
        results.append(CheckResult(name=check.name, passed=bool(passed), detail=detail, measured=measured, seconds=elapsed))
    return BatteryResult(level=level, results=tuple(results))
