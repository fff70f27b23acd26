# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Where every artifact of an experiment lives below its output directory.

    instances/L<L>/instance_<id>.json     disorder instances
    devices/L<L>/device_<id>.json         calibrated device states
    records/<kind>_L<L>.ndjson            record logs
    checkpoints/<instance>/b<i>_g<j>.json per-cell checkpoints
    analysis/<recipe>.csv|.json           recipe outputs
    manifest.json, report.json
"""

from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

from griffiths_sim.lattice.disorder import DisorderInstance
from griffiths_sim.persistence.device_files import device_state_path
from griffiths_sim.persistence.instance_files import instance_path


class RecordKind(StrEnum):
    """The record logs an experiment can produce."""

    QMC = "qmc"
    DEVICE = "device"
    MAGNETIZATION = "magnetization"
    SWEEP = "sweep"
    CALIBRATION = "calibration"


@dataclass(frozen=True)
class OutputLayout:
    root: Path

    @property
    def instances_dir(self) -> Path:
        return self.root / "instances"

    @property
    def checkpoints_dir(self) -> Path:
        return self.root / "checkpoints"

    @property
    def analysis_dir(self) -> Path:
        return self.root / "analysis"

    @property
    def manifest_path(self) -> Path:
        return self.root / "manifest.json"

    @property
    def report_path(self) -> Path:
        return self.root / "report.json"

    def instance_file(self, instance: DisorderInstance) -> Path:
        return instance_path(self.root, instance)

    def instance_files(self, L: int) -> list[Path]:
        """The instance files of size L, sorted by instance id."""
        return sorted((self.instances_dir / f"L{L}").glob("instance_*.json"))

    def device_file(self, instance: DisorderInstance) -> Path:
        return device_state_path(self.root, instance)

    def record_log(self, kind: RecordKind, L: int) -> Path:
        return self.root / "records" / f"{kind}_L{L}.ndjson"

    def recipe_table(self, recipe: str) -> Path:
        return self.analysis_dir / f"{recipe}.csv"

    def recipe_summary(self, recipe: str) -> Path:
        return self.analysis_dir / f"{recipe}.json"

    def recipe_estimates(self, recipe: str) -> Path:
        return self.analysis_dir / f"{recipe}_estimates.csv"
