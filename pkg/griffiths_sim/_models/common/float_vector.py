# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Contains the FloatVector type."""

from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import GetCoreSchemaHandler
from pydantic_core import CoreSchema, core_schema


def _flatten_array_like(value: Any) -> Any:  # noqa: ANN401
    """Turn numpy arrays and scalars into plain python lists so the list schema accepts them."""
    if isinstance(value, np.ndarray):
        if value.ndim != 1:
            err_msg = f"expected a one-dimensional array, got shape {value.shape}."
            raise ValueError(err_msg)
        return value.tolist()
    if isinstance(value, tuple):
        return list(value)
    return value


class FloatVector(tuple):
    """
    Immutable vector of floats with a convenience conversion to numpy.

    Validates from lists, tuples and one-dimensional numpy arrays, and serializes to a JSON list.
    Being a tuple, two vectors compare equal exactly when every element is bit-identical.
    """

    __slots__ = ()

    def as_array(self) -> npt.NDArray[np.float64]:
        """Return a fresh float64 numpy array holding the vector's values."""
        return np.asarray(self, dtype=np.float64)

    @classmethod
    def __get_pydantic_core_schema__(
        cls,
        source_type: Any,  # noqa: ANN401
        handler: GetCoreSchemaHandler,
    ) -> CoreSchema:
        del source_type, handler
        return core_schema.no_info_before_validator_function(
            _flatten_array_like,
            core_schema.no_info_after_validator_function(
                cls,
                core_schema.list_schema(core_schema.float_schema()),
            ),
            serialization=core_schema.plain_serializer_function_ser_schema(list),
        )
