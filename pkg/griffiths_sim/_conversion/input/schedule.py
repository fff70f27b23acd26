# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Conversion of schedule tables (pandas DataFrames) into schedule nodes."""

from collections.abc import Hashable, Iterable
from typing import Any, final

import pandas as pd
from pandera.errors import SchemaError, SchemaErrors

from griffiths_sim._conversion.common.dataframe import ScheduleFrameSchema
from griffiths_sim._conversion.input._base_converter import BaseRowConverter, Invalid, Valid, ValidationOutput
from griffiths_sim.annealer.schedule import ScheduleNode


@final
class PandasScheduleConverter(BaseRowConverter[dict[Hashable, Any], pd.DataFrame, ScheduleNode]):
    """Converts a schedule table with columns ``s,A_GHz,B_GHz`` into schedule nodes."""

    def validate_input(self, given_input: pd.DataFrame) -> ValidationOutput:
        """
        Validates the dataframe against the schedule schema, collecting every failed check.

        Args:
            given_input: The dataframe to validate.

        Returns:
            The output of the validation.

        """
        try:
            _ = ScheduleFrameSchema.validate(given_input, lazy=True)
        except (SchemaError, SchemaErrors) as e:
            return Invalid(errors=ExceptionGroup("Schedule validation errors occurred", [e]))
        return Valid()

    def _rows(self, given_input: pd.DataFrame) -> Iterable[tuple[int, dict[Hashable, Any]]]:
        return enumerate(ScheduleFrameSchema.validate(given_input).to_dict(orient="records"))

    def _convert_row(self, row: dict[Hashable, Any]) -> ScheduleNode:
        return ScheduleNode(s=row["s"], a_ghz=row["A_GHz"], b_ghz=row["B_GHz"])
