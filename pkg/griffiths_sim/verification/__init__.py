# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Self-checks of the simulation and analysis pipeline against exact oracles and synthetic data."""

from griffiths_sim.verification.checks import CHECKS, BatteryResult, Check, CheckResult, Level, run_battery

__all__ = [
    "CHECKS",
    "BatteryResult",
    "Check",
    "CheckResult",
    "Level",
    "run_battery",
]
