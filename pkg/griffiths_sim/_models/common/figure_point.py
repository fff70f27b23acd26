# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from pydantic import Field

from griffiths_sim._models._base_model import BaseModel


class FigurePoint(BaseModel):
    """
    One plotted point of a figure recipe.

    Attributes:
        recipe: Name of the recipe that produced the point.
        series: Curve the point belongs to, e.g. ``L=6`` or ``fit``.
        x: Abscissa.
        y: Ordinate; None for a gap in the curve.
        y_err: One-sigma error of y, when known.

    """

    recipe: str
    series: str
    x: float
    y: float | None = None
    y_err: float | None = Field(default=None, ge=0.0)
