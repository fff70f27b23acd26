# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from importlib.resources import files
from pathlib import Path

import pandas as pd

from griffiths_sim._conversion.input.schedule import PandasScheduleConverter
from griffiths_sim.annealer.schedule import Schedule
from griffiths_sim.logging import logger

BUNDLED_SCHEDULE = "schedule.csv"


def read_schedule_frame(frame: pd.DataFrame) -> Schedule:
    """Build a schedule from a table with columns ``s, A_GHz, B_GHz``."""
    return Schedule(nodes=tuple(PandasScheduleConverter().convert(frame)))


def load_schedule_csv(path: Path) -> Schedule:
    """
    Read a schedule CSV with header ``s,A_GHz,B_GHz``.

    Raises:
        ExceptionGroup: If the table fails schema validation.

    """
    logger.debug("ANNEALER - reading schedule %s", path)
    return read_schedule_frame(pd.read_csv(path))


def bundled_schedule() -> Schedule:
    """The synthetic schedule shipped with the package, pinned at A(0.386) = 1.71 GHz, B(0.386) = 2.49 GHz."""
    with files("griffiths_sim.annealer.data").joinpath(BUNDLED_SCHEDULE).open("r", encoding="utf-8") as handle:
        return read_schedule_frame(pd.read_csv(handle))
