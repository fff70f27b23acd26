# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from typing import Any, final

from griffiths_sim._conversion.common.dataframe import EstimateFrameSchema, FigureFrameSchema
from griffiths_sim._conversion.output._base_converter import BaseFrameConverter
from griffiths_sim._models.common.figure_point import FigurePoint
from griffiths_sim.observables.estimates import EnsembleEstimate


@final
class PandasEstimateConverter(BaseFrameConverter[EnsembleEstimate]):
    """Converts disorder-averaged estimates to rows of ``EstimateFrameSchema``."""

    schema = EstimateFrameSchema
    columns = ("L", "beta", "gamma", "s_star", "observable", "value", "error", "n")

    def _to_row(self, item: EnsembleEstimate) -> dict[str, Any]:
        row = item.model_dump()
        row["n"] = row.pop("n_instances")
        return row


@final
class PandasFigureConverter(BaseFrameConverter[FigurePoint]):
    """Converts figure points to a plot-ready table of ``FigureFrameSchema``."""

    schema = FigureFrameSchema
    columns = ("recipe", "series", "x", "y", "y_err")

    def _to_row(self, item: FigurePoint) -> dict[str, Any]:
        return item.model_dump()
