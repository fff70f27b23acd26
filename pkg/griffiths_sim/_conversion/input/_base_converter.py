# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Module containing the base class of the input converters.

Conversion runs in two passes: the whole document is checked first, then every row is converted
and all failing rows are reported together.
"""

from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass
from typing import ClassVar


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class Invalid:
    errors: ExceptionGroup


type ValidationOutput = Valid | Invalid


class BaseRowConverter[ROWTYPE, INPUTTYPE, OUTPUTTYPE](ABC):
    group_message: ClassVar[str] = "Conversion validation errors occurred"

    @abstractmethod
    def validate_input(self, given_input: INPUTTYPE) -> ValidationOutput:
        """Check the document as a whole, before any row is converted."""
        ...

    @abstractmethod
    def _rows(self, given_input: INPUTTYPE) -> Iterable[tuple[int, ROWTYPE]]:
        """
        Split the validated input into rows.

        Args:
            given_input: The input that passed ``validate_input``.

        Returns:
            Pairs of a row number, used in error notes, and the row.

        """
        ...

    @abstractmethod
    def _convert_row(self, row: ROWTYPE) -> OUTPUTTYPE: ...

    def convert(self, given_input: INPUTTYPE) -> list[OUTPUTTYPE]:
        """
        Validate the input and convert every row of it.

        Raises:
            ExceptionGroup: If the input fails validation, or with one exception per row that
                failed to convert, each noted with its row number.

        """
        match self.validate_input(given_input):
            case Invalid(errors=group):
                raise group
            case Valid():
                pass

        converted: list[OUTPUTTYPE] = []
        errors: list[Exception] = []
        for number, row in self._rows(given_input):
            try:
                converted.append(self._convert_row(row))
            except (ValueError, KeyError, TypeError) as e:
                e.add_note(f"while converting row {number}")
                errors.append(e)
        if errors:
            raise ExceptionGroup(self.group_message, errors)
        return converted
