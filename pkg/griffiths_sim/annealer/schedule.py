# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Annealing schedules A(s), B(s)."""

from typing import Self

import numpy as np
import numpy.typing as npt
from pydantic import Field, model_validator
from scipy.interpolate import PchipInterpolator

from griffiths_sim._models._base_model import BaseModel

# Slack for flat segments in the monotonicity checks (GHz).
_MONOTONE_TOLERANCE = 1e-9


class ScheduleNode(BaseModel):
    """One tabulated point of the schedule, energies in GHz."""

    s: float = Field(ge=0.0, le=1.0)
    a_ghz: float = Field(ge=0.0)
    b_ghz: float = Field(ge=0.0)


class Schedule(BaseModel):
    """
    A tabulated schedule with monotone cubic (PCHIP) interpolation.

    A(s) is non-increasing and B(s) non-decreasing over the table. PCHIP preserves that
    monotonicity and passes through every node exactly.
    """

    nodes: tuple[ScheduleNode, ...]

    @model_validator(mode="after")
    def nodes_are_monotone(self) -> Self:
        if len(self.nodes) < 2:  # noqa: PLR2004
            err_msg = "a schedule needs at least two nodes."
            raise ValueError(err_msg)
        s, a, b = self._columns()
        if np.any(np.diff(s) <= 0.0):
            err_msg = "schedule s values must be strictly increasing."
            raise ValueError(err_msg)
        if np.any(np.diff(a) > _MONOTONE_TOLERANCE):
            err_msg = "A(s) must be non-increasing."
            raise ValueError(err_msg)
        if np.any(np.diff(b) < -_MONOTONE_TOLERANCE):
            err_msg = "B(s) must be non-decreasing."
            raise ValueError(err_msg)
        return self

    def _columns(self) -> tuple[npt.NDArray[np.float64], ...]:
        table = np.array([(node.s, node.a_ghz, node.b_ghz) for node in self.nodes], dtype=np.float64)
        return table[:, 0], table[:, 1], table[:, 2]

    @property
    def s_range(self) -> tuple[float, float]:
        return self.nodes[0].s, self.nodes[-1].s

    def amplitudes(self, s: float) -> tuple[float, float]:
        """
        (A(s), B(s)) in GHz.

        Raises:
            ValueError: If s lies outside the tabulated range.

        """
        lo, hi = self.s_range
        if not lo <= s <= hi:
            err_msg = f"s = {s} lies outside the schedule range [{lo}, {hi}]."
            raise ValueError(err_msg)
        nodes_s, a, b = self._columns()
        return float(PchipInterpolator(nodes_s, a)(s)), float(PchipInterpolator(nodes_s, b)(s))
