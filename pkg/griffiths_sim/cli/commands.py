# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The subcommands, as functions of a validated configuration.

All randomness is derived from the master seed through ``derive_seed``: one stream per purpose,
keyed by lattice size, instance and grid position, so that outputs do not depend on the worker
count or on the order cells complete in.
"""

import json
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path

import numpy as np
from joblib import Parallel, delayed

from griffiths_sim.annealer.apq import DeviceMomentRecord, MagnetizationLog, magnetization_moments, sample_apq
from griffiths_sim.annealer.calibration import CalibrationCheck, calibrate_flux_bias, check_calibration
from griffiths_sim.annealer.device import DeviceFactory, DeviceModel
from griffiths_sim.annealer.protocol import map_s_to_beta_gamma
from griffiths_sim.annealer.samplers import ThermalSamplerFactory
from griffiths_sim.annealer.susceptibility import FieldSweepResult, default_field_grid, field_sweep_susceptibility
from griffiths_sim.cli.config import ExperimentConfig
from griffiths_sim.cli.manifest import RunManifest, SessionFailure, utc_now, write_manifest
from griffiths_sim.errors import CalibrationError, FitError, GriffithsSimError
from griffiths_sim.lattice.chimera import build_diluted_chimera
from griffiths_sim.lattice.disorder import DisorderInstance, sample_disorder
from griffiths_sim.logging import logger
from griffiths_sim.persistence.device_files import read_device_state, write_device_state
from griffiths_sim.persistence.instance_files import read_instance, write_instance
from griffiths_sim.persistence.layout import OutputLayout, RecordKind
from griffiths_sim.persistence.provenance import atomic_write_text
from griffiths_sim.persistence.record_log import write_record_log
from griffiths_sim.qmc.grid import CellFailure, GridRunner
from griffiths_sim.recipes import RecipeContext, RecipeRegistry, write_recipe_output
from griffiths_sim.verification import BatteryResult, Level, run_battery
from griffiths_sim.version import RunMode


class Stream(IntEnum):
    """The purposes random streams are derived for."""

    INSTANCE = 0
    DEVICE = 1
    SAMPLING = 2
    SWEEP = 3
    CALIBRATION = 4


def derive_seed(master_seed: int, stream: Stream, *key: int) -> int:
    """
    A 64-bit seed that depends on the master seed, the stream and the key only.

    >>> derive_seed(1, Stream.INSTANCE, 4, 0) == derive_seed(1, Stream.INSTANCE, 4, 0)
    True
    >>> derive_seed(1, Stream.INSTANCE, 4, 0) == derive_seed(1, Stream.DEVICE, 4, 0)
    False
    """
    sequence = np.random.SeedSequence(master_seed, spawn_key=(int(stream), *key))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _generate_size(config: ExperimentConfig, L: int) -> list[DisorderInstance]:
    graph = build_diluted_chimera(L, config.lattice.dilution)
    return [
        sample_disorder(graph, config.disorder.distribution, derive_seed(config.master_seed, Stream.INSTANCE, L, k), instance_id=k)
        for k in range(config.disorder.n_instances)
    ]


def cmd_generate(config: ExperimentConfig) -> list[Path]:
    """
    Draw and write every disorder instance of the experiment.

    Returns:
        The instance files, by size and instance id.

    """
    layout = OutputLayout(config.output.directory)
    provenance = config.provenance()
    written = []
    for L in config.lattice.sizes:
        written.extend(write_instance(layout.instance_file(instance), instance, provenance) for instance in _generate_size(config, L))
        logger.info("CLI - wrote %d instances of L=%d", config.disorder.n_instances, L)
    return written


def load_instances(config: ExperimentConfig, L: int) -> list[DisorderInstance]:
    """The instances of size L from disk, generating them first when the set is incomplete."""
    layout = OutputLayout(config.output.directory)
    files = layout.instance_files(L)
    if len(files) < config.disorder.n_instances:
        logger.info("CLI - %d of %d instance files of L=%d found, generating", len(files), config.disorder.n_instances, L)
        provenance = config.provenance()
        instances = _generate_size(config, L)
        for instance in instances:
            write_instance(layout.instance_file(instance), instance, provenance)
        return instances
    return [read_instance(path) for path in files[: config.disorder.n_instances]]


def _fresh_device(config: ExperimentConfig, instance: DisorderInstance) -> DeviceModel:
    return DeviceFactory.create(
        instance,
        seed=derive_seed(config.master_seed, Stream.DEVICE, instance.graph.L),
        bias_half_width=config.device.bias_half_width,
        temperature_k=config.device.temperature_k,
        quench_strength=config.device.quench_strength,
    )


def _device_for(config: ExperimentConfig, instance: DisorderInstance) -> DeviceModel:
    path = OutputLayout(config.output.directory).device_file(instance)
    if config.device.calibrate and path.exists():
        return read_device_state(path, instance)
    if config.device.calibrate:
        logger.warning("CLI - no calibrated state for %s, sampling the uncalibrated device", instance.label)
    return _fresh_device(config, instance)


@dataclass
class _DeviceOutcome:
    records: list[DeviceMomentRecord] = field(default_factory=list)
    logs: list[MagnetizationLog] = field(default_factory=list)
    sweeps: list[FieldSweepResult] = field(default_factory=list)
    failures: list[SessionFailure] = field(default_factory=list)


def _run_device(config: ExperimentConfig, instance: DisorderInstance) -> _DeviceOutcome:
    outcome = _DeviceOutcome()
    settings = config.device
    schedule = settings.load_schedule()
    device = _device_for(config, instance)
    sampler = ThermalSamplerFactory.create(settings.sampler, instance.n_sites, M=settings.M)
    sweeps_this_instance = settings.sweep_instances is None or instance.instance_id < settings.sweep_instances
    key = (instance.graph.L, instance.instance_id)
    for k, s_star in enumerate(config.grid.s_stars):
        protocol = settings.protocol(s_star)
        try:
            samples = sample_apq(device, protocol, schedule, sampler=sampler, n_gauges=settings.n_gauges, seed=derive_seed(config.master_seed, Stream.SAMPLING, *key, k))
            outcome.records.append(magnetization_moments(samples))
            outcome.logs.append(MagnetizationLog.from_samples(samples))
            if sweeps_this_instance:
                beta, _ = map_s_to_beta_gamma(schedule, s_star, device.temperature_k)
                outcome.sweeps.append(
                    field_sweep_susceptibility(
                        device,
                        protocol,
                        schedule,
                        default_field_grid(beta, settings.field_points),
                        sampler=sampler,
                        expectation=settings.sweep_expectation,
                        seed=derive_seed(config.master_seed, Stream.SWEEP, *key, k),
                    ),
                )
        except (GriffithsSimError, ValueError) as e:
            outcome.failures.append(SessionFailure(instance=instance.label, s_star=s_star, kind="error", message=f"{type(e).__name__}: {e}"))
    return outcome


def _run_qmc(config: ExperimentConfig, layout: OutputLayout, *, resume: bool, progress: bool) -> tuple[int, int, list[CellFailure], list[str], list[Path]]:
    n_cells = n_done = 0
    failures: list[CellFailure] = []
    recovered: list[str] = []
    outputs: list[Path] = []
    provenance = config.provenance()
    for L in config.lattice.sizes:
        runner = GridRunner(
            load_instances(config, L),
            config.grid.betas,
            config.grid.gammas,
            config.run.chain_params(),
            master_seed=config.master_seed,
            workers=config.run.workers,
            checkpoint_dir=layout.checkpoints_dir,
            progress=progress,
            resume=resume,
        )
        n_cells += len(runner.cells())
        try:
            records = list(runner.run())
        finally:
            failures.extend(runner.failures)
            recovered.extend(runner.recovered)
        n_done += len(records)
        outputs.append(write_record_log(layout.record_log(RecordKind.QMC, L), records, provenance))
    return n_cells, n_done, failures, recovered, outputs


def _run_device_sim(config: ExperimentConfig, layout: OutputLayout) -> tuple[int, int, list[SessionFailure], list[Path]]:
    n_sessions = n_done = 0
    failures: list[SessionFailure] = []
    outputs: list[Path] = []
    provenance = config.provenance()
    for L in config.lattice.sizes:
        instances = load_instances(config, L)
        outcomes: list[_DeviceOutcome] = Parallel(n_jobs=config.run.workers, backend="loky")(delayed(_run_device)(config, instance) for instance in instances)
        n_sessions += len(instances) * len(config.grid.s_stars)
        n_done += sum(len(outcome.records) for outcome in outcomes)
        for outcome in outcomes:
            failures.extend(outcome.failures)
        for kind, rows in (
            (RecordKind.DEVICE, [r for o in outcomes for r in o.records]),
            (RecordKind.MAGNETIZATION, [r for o in outcomes for r in o.logs]),
            (RecordKind.SWEEP, [r for o in outcomes for r in o.sweeps]),
        ):
            outputs.append(write_record_log(layout.record_log(kind, L), rows, provenance))
        logger.info("CLI - device runs of L=%d done, %d failures so far", L, len(failures))
    return n_sessions, n_done, failures, outputs


def cmd_run(config: ExperimentConfig, *, resume: bool = False, progress: bool = False) -> RunManifest:
    """
    Run the experiment's grid and write one record log per lattice size.

    QMC grids checkpoint every cell; with ``resume`` the completed cells of an earlier run are
    reused. On Ctrl-C the manifest is still written, marked as interrupted, before re-raising.

    Returns:
        The manifest, also written to ``manifest.json``.

    """
    layout = OutputLayout(config.output.directory)
    started = utc_now()
    n_units = n_done = 0
    failures: list[CellFailure | SessionFailure] = []
    recovered: list[str] = []
    outputs: list[Path] = []
    interrupted = False
    try:
        if config.mode is RunMode.QMC:
            n_units, n_done, qmc_failures, recovered, outputs = _run_qmc(config, layout, resume=resume, progress=progress)
            failures.extend(qmc_failures)
        else:
            n_units, n_done, device_failures, outputs = _run_device_sim(config, layout)
            failures.extend(device_failures)
    except KeyboardInterrupt:
        interrupted = True
        logger.warning("CLI - interrupted; completed checkpoints are kept, rerun with --resume")
    manifest = RunManifest(
        command="run",
        mode=config.mode,
        provenance=config.provenance(),
        started_at=started,
        finished_at=utc_now(),
        n_units=n_units,
        n_completed=n_done,
        failures=tuple(failures),
        recovered_checkpoints=tuple(recovered),
        interrupted=interrupted,
        outputs=tuple(outputs),
    )
    write_manifest(layout.manifest_path, manifest)
    if interrupted:
        raise KeyboardInterrupt
    return manifest


def _calibrate(config: ExperimentConfig, instance: DisorderInstance) -> DeviceModel | SessionFailure:
    settings = config.device
    device = _fresh_device(config, instance)
    try:
        result = calibrate_flux_bias(
            device,
            settings.load_schedule(),
            settings.h_up0,
            settings.h_low0,
            settings.calibration_rounds,
            protocol=settings.calibration_protocol(),
            samples_per_call=settings.calibration_samples,
            seed=derive_seed(config.master_seed, Stream.CALIBRATION, instance.graph.L, instance.instance_id),
        )
    except CalibrationError as e:
        return SessionFailure(instance=instance.label, kind="calibration", message=f"{e} (qubits {list(e.unbracketed_qubits)})")
    return result.device


def cmd_calibrate(config: ExperimentConfig) -> RunManifest:
    """
    Calibrate the flux biases of every device and write the device states and calibration checks.

    Raises:
        ValueError: If the experiment does not run in device-sim mode.

    """
    if config.mode is not RunMode.DEVICE_SIM:
        err_msg = f"calibrate needs a device-sim experiment, this one runs in {config.mode} mode."
        raise ValueError(err_msg)
    layout = OutputLayout(config.output.directory)
    provenance = config.provenance()
    schedule = config.device.load_schedule()
    started = utc_now()
    failures: list[SessionFailure] = []
    outputs: list[Path] = []
    n_units = 0
    for L in config.lattice.sizes:
        instances = load_instances(config, L)
        n_units += len(instances)
        results = Parallel(n_jobs=config.run.workers, backend="loky")(delayed(_calibrate)(config, instance) for instance in instances)
        checks: list[CalibrationCheck] = []
        for instance, result in zip(instances, results, strict=True):
            if isinstance(result, SessionFailure):
                logger.error("CLI - calibration of %s failed: %s", instance.label, result.message)
                failures.append(result)
                continue
            outputs.append(write_device_state(layout.device_file(instance), result, provenance))
            checks.append(check_calibration(_fresh_device(config, instance), result, schedule, config.device.calibration_protocol()))
        outputs.append(write_record_log(layout.record_log(RecordKind.CALIBRATION, L), checks, provenance))
    manifest = RunManifest(
        command="calibrate",
        mode=config.mode,
        provenance=provenance,
        started_at=started,
        finished_at=utc_now(),
        n_units=n_units,
        n_completed=n_units - len(failures),
        failures=tuple(failures),
        outputs=tuple(outputs),
    )
    write_manifest(layout.manifest_path, manifest)
    return manifest


def cmd_analyze(config: ExperimentConfig, recipe_name: str) -> list[Path]:
    """
    Run one recipe on the experiment's record logs and write its tables and summary.

    Raises:
        UnknownRecipeError: If no recipe has that name.
        ValueError: If the recipe analyzes data of the other run mode.
        FileNotFoundError: If the record logs it needs are missing.
        FitError: If one of its fits fails.

    """
    recipe = RecipeRegistry.get_recipe(recipe_name)
    if recipe.mode is not config.mode:
        err_msg = f"recipe {recipe_name!r} needs {recipe.mode} data, but the experiment runs in {config.mode} mode."
        raise ValueError(err_msg)
    output = recipe.run(RecipeContext(config))
    return write_recipe_output(OutputLayout(config.output.directory), recipe.name, output, config.provenance())


@dataclass
class ReportOutcome:
    path: Path
    failed: list[str]


def cmd_report(config: ExperimentConfig) -> ReportOutcome:
    """
    Run every recipe of the run mode (or those listed in ``analysis.recipes``) and write ``report.json``.

    A failing recipe is reported, not raised.
    """
    layout = OutputLayout(config.output.directory)
    context = RecipeContext(config)
    selected = set(config.analysis.recipes)
    entries = []
    failed = []
    for recipe in RecipeRegistry.recipes_for(config.mode):
        if selected and recipe.name not in selected:
            continue
        try:
            output = recipe.run(context)
        except (FitError, FileNotFoundError, ValueError) as e:
            logger.error("CLI - recipe %s failed: %s", recipe.name, e)
            failed.append(recipe.name)
            entries.append({"recipe": recipe.name, "description": recipe.description, "status": "failed", "error": f"{type(e).__name__}: {e}"})
            continue
        write_recipe_output(layout, recipe.name, output, config.provenance())
        entries.append({"recipe": recipe.name, "description": recipe.description, "status": "ok", "summary": output.summary})
    document = {"provenance": config.provenance().model_dump(), "mode": str(config.mode), "recipes": entries}
    atomic_write_text(layout.report_path, json.dumps(document, indent=2, sort_keys=True) + "\n")
    return ReportOutcome(path=layout.report_path, failed=failed)


def cmd_verify(level: Level | str) -> BatteryResult:
    """Run the verification battery at the given level."""
    return run_battery(Level(level))
