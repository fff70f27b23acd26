# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import json

import pandas as pd
import pytest

from griffiths_sim._conversion.input.records import NdjsonRecordConverter
from griffiths_sim._conversion.input.schedule import PandasScheduleConverter
from griffiths_sim._models.common.figure_point import FigurePoint


def _line(**fields: object) -> str:
    return json.dumps(fields)


def test_header_and_blank_lines_are_skipped() -> None:
    """Test that verifies that only record lines are converted."""
    text = "\n".join([_line(header={"version": "1"}), "", _line(recipe="fig4", series="L=4", x=1.0, y=2.0), "   "])
    points = NdjsonRecordConverter(FigurePoint).convert(text)
    assert points == [FigurePoint(recipe="fig4", series="L=4", x=1.0, y=2.0)]


def test_failing_rows_are_collected_with_their_line_numbers() -> None:
    """Test that verifies that every invalid row is reported, noted with its line number."""
    text = "\n".join([_line(recipe="a", series="s", x=1.0), _line(recipe="a", series="s"), _line(recipe="a", series="s", x=1.0, y_err=-1.0)])
    with pytest.raises(ExceptionGroup, match="Conversion validation errors occurred") as exc_info:
        _ = NdjsonRecordConverter(FigurePoint).convert(text)
    notes = [note for error in exc_info.value.exceptions for note in getattr(error, "__notes__", [])]
    assert notes == ["while converting row 2", "while converting row 3"]


def test_non_object_lines_fail_validation() -> None:
    """Test that verifies that arrays and broken JSON are rejected before any conversion."""
    with pytest.raises(ExceptionGroup, match="Record log validation errors occurred") as exc_info:
        _ = NdjsonRecordConverter(FigurePoint).convert("[1, 2]\n{broken")
    assert len(exc_info.value.exceptions) == 2


def test_schedule_table_drops_extra_columns() -> None:
    """Test that verifies that extra columns are filtered and nodes keep their order."""
    frame = pd.DataFrame({"s": [0.0, 0.5, 1.0], "A_GHz": [5.0, 1.0, 0.0], "B_GHz": [0.2, 3.0, 6.0], "comment": ["a", "b", "c"]})
    nodes = PandasScheduleConverter().convert(frame)
    assert [node.s for node in nodes] == [0.0, 0.5, 1.0]
    assert nodes[1].a_ghz == 1.0
    assert nodes[2].b_ghz == 6.0


@pytest.mark.parametrize(
    "frame",
    [
        pd.DataFrame({"s": [0.0, 0.0], "A_GHz": [1.0, 1.0], "B_GHz": [1.0, 1.0]}),
        pd.DataFrame({"s": [0.0, 1.0], "A_GHz": [-1.0, 1.0], "B_GHz": [1.0, 1.0]}),
        pd.DataFrame({"s": [0.0, 1.0], "A_GHz": [1.0, 1.0]}),
    ],
)
def test_invalid_schedule_tables(frame: pd.DataFrame) -> None:
    """Test that verifies that repeated nodes, negative energies and missing columns are rejected."""
    with pytest.raises(ExceptionGroup, match="Schedule validation errors occurred"):
        _ = PandasScheduleConverter().convert(frame)
