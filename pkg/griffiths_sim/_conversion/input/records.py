# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Conversion of newline-delimited JSON record logs into record models."""

import json
from collections.abc import Iterable
from typing import Any, final

from pydantic import BaseModel

from griffiths_sim._conversion.input._base_converter import BaseRowConverter, Invalid, Valid, ValidationOutput

# Key of the provenance line that opens every record log.
HEADER_KEY = "header"


@final
class NdjsonRecordConverter[RECORD: BaseModel](BaseRowConverter[dict[str, Any], str, RECORD]):
    """Converts the text of a record log into records of one model type, skipping the header line."""

    def __init__(self, record_type: type[RECORD]) -> None:
        self.record_type = record_type

    def validate_input(self, given_input: str) -> ValidationOutput:
        """
        Validate that every non-empty line of the log is a JSON object.

        Args:
            given_input: The text of the record log.

        Returns:
            The output of the validation.

        """
        errors: list[Exception] = []
        for number, line in enumerate(given_input.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                parsed = json.loads(line)
            except json.JSONDecodeError as e:
                errors.append(ValueError(f"line {number} is not valid JSON: {e.msg}"))
                continue
            if not isinstance(parsed, dict):
                errors.append(ValueError(f"line {number} is not a JSON object."))
        if errors:
            return Invalid(errors=ExceptionGroup("Record log validation errors occurred", errors))
        return Valid()

    def _rows(self, given_input: str) -> Iterable[tuple[int, dict[str, Any]]]:
        for number, line in enumerate(given_input.splitlines(), start=1):
            if not line.strip():
                continue
            row = json.loads(line)
            if HEADER_KEY not in row:
                yield number, row

    def _convert_row(self, row: dict[str, Any]) -> RECORD:
        return self.record_type.model_validate(row)
