# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import os
import tempfile
from pathlib import Path

from griffiths_sim._models._base_model import BaseModel
from griffiths_sim.version import code_version


class Provenance(BaseModel):
    """The configuration digest and code version embedded in every output file."""

    config_digest: str
    code_version: str

    @classmethod
    def current(cls, config_digest: str) -> "Provenance":
        return cls(config_digest=config_digest, code_version=code_version())


def atomic_write_text(path: Path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory and a rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        Path(tmp_name).replace(path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
