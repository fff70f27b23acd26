# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Newline-delimited JSON record logs.

The first line is ``{"header": {...provenance...}}``, every following line one record dumped by
alias. Records are written in the order given, so a log is byte-identical for identical inputs.
"""

import json
from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel

from griffiths_sim._conversion.input.records import HEADER_KEY, NdjsonRecordConverter
from griffiths_sim.persistence.provenance import Provenance, atomic_write_text


def format_record_log(records: Iterable[BaseModel], provenance: Provenance) -> str:
    lines = [json.dumps({HEADER_KEY: provenance.model_dump()})]
    lines.extend(record.model_dump_json(by_alias=True) for record in records)
    return "\n".join(lines) + "\n"


def write_record_log(path: Path, records: Iterable[BaseModel], provenance: Provenance) -> Path:
    atomic_write_text(path, format_record_log(records, provenance))
    return path


def read_record_header(path: Path) -> Provenance | None:
    with path.open(encoding="utf-8") as handle:
        first = handle.readline()
    if not first.strip():
        return None
    row = json.loads(first)
    return Provenance.model_validate(row[HEADER_KEY]) if HEADER_KEY in row else None


def read_record_log[RECORD: BaseModel](path: Path, record_type: type[RECORD]) -> list[RECORD]:
    """
    Read every record of a log.

    Raises:
        ExceptionGroup: With one entry per malformed line or invalid record.

    """
    return NdjsonRecordConverter(record_type).convert(path.read_text(encoding="utf-8"))
