# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Pandera schemas of the tabular inputs and outputs."""

from typing import final

import pandas as pd
import pandera.pandas as pa
from pandera.typing import Series


@final
class ScheduleFrameSchema(pa.DataFrameModel):
    """Pandera schema for an annealing schedule table with header ``s,A_GHz,B_GHz``."""

    s: Series[float] = pa.Field(ge=0.0, le=1.0)
    A_GHz: Series[float] = pa.Field(ge=0.0)  # noqa: N815
    B_GHz: Series[float] = pa.Field(ge=0.0)  # noqa: N815

    class Config:
        strict = "filter"  # Extra columns are dropped.
        coerce = True

    @pa.dataframe_check
    def s_strictly_increasing(cls, df: pd.DataFrame) -> bool:  # noqa: N805
        """Check that the schedule nodes are ordered by s without repeats."""
        return bool(df["s"].is_monotonic_increasing and df["s"].is_unique)


@final
class EstimateFrameSchema(pa.DataFrameModel):
    """Pandera schema for disorder-averaged estimate rows: one observable at one (L, β, Γ) or (L, s*) point."""

    L: Series[int] = pa.Field(gt=0)
    beta: Series[float] | None = pa.Field(nullable=True)
    gamma: Series[float] | None = pa.Field(nullable=True)
    s_star: Series[float] | None = pa.Field(nullable=True)
    observable: Series[str] = pa.Field()
    value: Series[float] = pa.Field()
    error: Series[float] = pa.Field(ge=0.0)
    n: Series[int] = pa.Field(gt=0)

    class Config:
        strict = "filter"
        coerce = True


@final
class FigureFrameSchema(pa.DataFrameModel):
    """Pandera schema for plot-ready figure tables: one row per plotted point of one series."""

    recipe: Series[str] = pa.Field()
    series: Series[str] = pa.Field()
    x: Series[float] = pa.Field()
    y: Series[float] = pa.Field(nullable=True)
    y_err: Series[float] | None = pa.Field(nullable=True, ge=0.0)

    class Config:
        strict = "filter"
        coerce = True
