# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Simulated analog annealer: schedules, pause-point sampling, gauges, field sweeps and flux-bias calibration."""

from griffiths_sim.annealer.apq import ApqSamples, DeviceMomentRecord, MagnetizationLog, expected_magnetization, magnetization_moments, sample_apq
from griffiths_sim.annealer.calibration import CalibrationCheck, CalibrationResult, calibrate_flux_bias, check_calibration, zero_problem_means
from griffiths_sim.annealer.device import DeviceFactory, DeviceModel, default_quench_strength, gauge_transform, random_gauge
from griffiths_sim.annealer.protocol import DEFAULT_TEMPERATURE_K, ProtocolParams, map_s_to_beta_gamma
from griffiths_sim.annealer.quench import apply_quench
from griffiths_sim.annealer.samplers import (
    ExactThermalSampler,
    PathIntegralThermalSampler,
    SamplerBackend,
    ThermalSampler,
    ThermalSamplerFactory,
)
from griffiths_sim.annealer.schedule import Schedule, ScheduleNode
from griffiths_sim.annealer.schedule_files import bundled_schedule, load_schedule_csv
from griffiths_sim.annealer.susceptibility import FieldSweepResult, default_field_grid, field_sweep_susceptibility

__all__ = [
    "DEFAULT_TEMPERATURE_K",
    "ApqSamples",
    "CalibrationCheck",
    "CalibrationResult",
    "DeviceFactory",
    "DeviceModel",
    "DeviceMomentRecord",
    "ExactThermalSampler",
    "FieldSweepResult",
    "MagnetizationLog",
    "PathIntegralThermalSampler",
    "ProtocolParams",
    "SamplerBackend",
    "Schedule",
    "ScheduleNode",
    "ThermalSampler",
    "ThermalSamplerFactory",
    "apply_quench",
    "bundled_schedule",
    "calibrate_flux_bias",
    "check_calibration",
    "default_field_grid",
    "default_quench_strength",
    "expected_magnetization",
    "field_sweep_susceptibility",
    "gauge_transform",
    "load_schedule_csv",
    "magnetization_moments",
    "map_s_to_beta_gamma",
    "random_gauge",
    "sample_apq",
    "zero_problem_means",
]
