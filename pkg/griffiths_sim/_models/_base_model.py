# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import math

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict, field_validator


class BaseModel(PydanticBaseModel):
    """Base model for all domain models."""

    @field_validator("*")
    @classmethod
    def reject_nan(cls, v: object) -> object:
        """Pydantic validator that rejects NaN scalars."""
        if isinstance(v, float) and math.isnan(v):
            err_msg = "value must not be NaN."
            raise ValueError(err_msg)
        return v

    model_config = ConfigDict(
        populate_by_name=True,
        from_attributes=True,
        frozen=True,  # All domain models are considered immutable.
        extra="forbid",
        ser_json_inf_nan="strings",
    )
