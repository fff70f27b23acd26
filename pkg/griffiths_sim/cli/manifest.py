# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
The run manifest.

Timestamps live here and nowhere else, so that record logs of identical runs stay byte-identical.
"""

from datetime import UTC, datetime
from pathlib import Path
from typing import Literal

from pydantic import NonNegativeInt

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.persistence.provenance import Provenance, atomic_write_text
from griffiths_sim.qmc.grid import CellFailure
from griffiths_sim.version import RunMode


class SessionFailure(BaseModel):
    """A device session (calibration, or sampling at one pause point) that produced no output."""

    instance: str
    s_star: float | None = None
    kind: Literal["error", "calibration"]
    message: str


class RunManifest(BaseModel):
    """Outcome of one ``run`` or ``calibrate`` command."""

    command: str
    mode: RunMode
    provenance: Provenance
    started_at: datetime
    finished_at: datetime
    n_units: NonNegativeInt
    n_completed: NonNegativeInt
    failures: tuple[CellFailure | SessionFailure, ...] = ()
    recovered_checkpoints: tuple[str, ...] = ()
    interrupted: bool = False
    outputs: tuple[Path, ...] = ()

    @property
    def partial(self) -> bool:
        """Whether some cells or sessions are missing from the outputs."""
        return self.interrupted or bool(self.failures)


def utc_now() -> datetime:
    return datetime.now(tz=UTC)


def write_manifest(path: Path, manifest: RunManifest) -> Path:
    atomic_write_text(path, manifest.model_dump_json(indent=2) + "\n")
    return path
