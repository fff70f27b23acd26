# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Per-cell checkpoints.

A completed cell is stored as ``<root>/<group>/<name>.json``; for QMC grids the group is the
instance label and the name ``b<beta_index>_g<gamma_index>``.
"""

from pathlib import Path

from pydantic import BaseModel, ValidationError

from griffiths_sim.errors import CheckpointError
from griffiths_sim.logging import logger
from griffiths_sim.persistence.provenance import atomic_write_text


class CheckpointStore:
    def __init__(self, root: Path) -> None:
        self.root = root

    def path_for(self, group: str, name: str) -> Path:
        return self.root / group / f"{name}.json"

    def save(self, group: str, name: str, payload: BaseModel) -> Path:
        path = self.path_for(group, name)
        atomic_write_text(path, payload.model_dump_json(by_alias=True))
        return path

    def load[PAYLOAD: BaseModel](self, group: str, name: str, payload_type: type[PAYLOAD]) -> PAYLOAD | None:
        """
        Load a stored cell, or None when the cell has not been completed.

        Raises:
            CheckpointError: If the file exists but cannot be parsed into the payload type.

        """
        path = self.path_for(group, name)
        if not path.exists():
            return None
        try:
            return payload_type.model_validate_json(path.read_bytes())
        except (ValidationError, ValueError, OSError) as e:
            logger.warning("CHECKPOINT - cannot read %s: %s", path, e)
            err_msg = f"corrupt checkpoint {path}"
            raise CheckpointError(err_msg) from e

    def discard(self, group: str, name: str) -> None:
        self.path_for(group, name).unlink(missing_ok=True)
