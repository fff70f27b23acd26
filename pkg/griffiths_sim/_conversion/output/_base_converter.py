# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Module containing the base class of the table output converters."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any, ClassVar

import pandas as pd
import pandera.pandas as pa

from griffiths_sim.logging import logger


class BaseFrameConverter[ITEM](ABC):
    """
    Turns a sequence of models into one schema-validated DataFrame, one row per model in input order.

    Subclasses name the schema, the column order and how a model becomes a row.
    """

    schema: ClassVar[type[pa.DataFrameModel]]
    columns: ClassVar[tuple[str, ...]]

    @abstractmethod
    def _to_row(self, item: ITEM) -> dict[str, Any]:
        """
        Convert one model to a row keyed by column name.

        Args:
            item: The model to convert.

        Returns:
            The row; keys outside ``columns`` are dropped.

        """
        ...

    def convert(self, given_input: Sequence[ITEM]) -> pd.DataFrame:
        frame = pd.DataFrame([self._to_row(item) for item in given_input], columns=list(self.columns))
        if frame.empty:
            logger.warning("CONVERSION - %s got no rows, writing an empty table", type(self).__name__)
        return self.schema.validate(frame)
