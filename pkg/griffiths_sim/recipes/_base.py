# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import json
from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import TYPE_CHECKING, Any, ClassVar, Self, final

from pydantic import BaseModel as PydanticBaseModel
from pydantic import Field

from griffiths_sim._conversion.output.frames import PandasEstimateConverter, PandasFigureConverter
from griffiths_sim._models._base_model import BaseModel
from griffiths_sim._models.common.figure_point import FigurePoint
from griffiths_sim.annealer.apq import DeviceMomentRecord, MagnetizationLog
from griffiths_sim.annealer.calibration import CalibrationCheck
from griffiths_sim.annealer.susceptibility import FieldSweepResult
from griffiths_sim.errors import UnknownRecipeError
from griffiths_sim.logging import logger
from griffiths_sim.observables.estimates import EnsembleEstimate
from griffiths_sim.persistence.layout import OutputLayout, RecordKind
from griffiths_sim.persistence.provenance import Provenance, atomic_write_text
from griffiths_sim.persistence.record_log import read_record_log
from griffiths_sim.qmc.records import MomentRecord
from griffiths_sim.version import RunMode

if TYPE_CHECKING:
    from griffiths_sim.cli.config import ExperimentConfig


class RecipeOutput(BaseModel):
    """
    What a recipe produces.

    Attributes:
        points: Plot-ready points, written to ``<recipe>.csv``.
        estimates: Disorder-averaged estimates, written to ``<recipe>_estimates.csv`` when present.
        summary: JSON-compatible fit results, written to ``<recipe>.json``.

    """

    points: tuple[FigurePoint, ...] = ()
    estimates: tuple[EnsembleEstimate, ...] = ()
    summary: dict[str, Any] = Field(default_factory=dict)


def dump(value: PydanticBaseModel | None) -> dict[str, Any] | None:
    """JSON form of a model for recipe summaries."""
    return None if value is None else value.model_dump(mode="json", by_alias=True)


@dataclass
class RecipeContext:
    """The configuration of an experiment and lazy access to its record logs, grouped by L."""

    config: "ExperimentConfig"

    @cached_property
    def layout(self) -> OutputLayout:
        return OutputLayout(self.config.output.directory)

    def _load[RECORD: PydanticBaseModel](self, kind: RecordKind, record_type: type[RECORD]) -> dict[int, list[RECORD]]:
        loaded: dict[int, list[RECORD]] = {}
        for L in self.config.lattice.sizes:
            path = self.layout.record_log(kind, L)
            if not path.exists():
                logger.warning("ANALYSIS - no %s record log for L=%d at %s", kind, L, path)
                continue
            loaded[L] = read_record_log(path, record_type)
        if not loaded:
            err_msg = f"no {kind} record logs below {self.layout.root}; run the experiment first."
            raise FileNotFoundError(err_msg)
        return loaded

    @cached_property
    def qmc_records(self) -> dict[int, list[MomentRecord]]:
        return self._load(RecordKind.QMC, MomentRecord)

    @cached_property
    def device_records(self) -> dict[int, list[DeviceMomentRecord]]:
        return self._load(RecordKind.DEVICE, DeviceMomentRecord)

    @cached_property
    def magnetization_logs(self) -> dict[int, list[MagnetizationLog]]:
        return self._load(RecordKind.MAGNETIZATION, MagnetizationLog)

    @cached_property
    def sweep_results(self) -> dict[int, list[FieldSweepResult]]:
        return self._load(RecordKind.SWEEP, FieldSweepResult)

    @cached_property
    def calibration_checks(self) -> dict[int, list[CalibrationCheck]]:
        return self._load(RecordKind.CALIBRATION, CalibrationCheck)


def group_by[ITEM](items: list[ITEM], *keys: str) -> dict[tuple[float, ...], list[ITEM]]:
    """Group records by the values of some attributes, keys in ascending order."""
    grouped: dict[tuple[float, ...], list[ITEM]] = defaultdict(list)
    for item in items:
        grouped[tuple(getattr(item, key) for key in keys)].append(item)
    return dict(sorted(grouped.items()))


class Recipe(ABC):
    """
    A reproduction of one figure: reads record logs, runs analysis stages, returns an output.

    Recipes are pure functions of the record logs and the configuration.
    """

    name: ClassVar[str]
    mode: ClassVar[RunMode]
    description: ClassVar[str]

    @abstractmethod
    def run(self, context: RecipeContext) -> RecipeOutput:
        """
        Compute the recipe's tables and fits.

        Raises:
            FileNotFoundError: If the record logs it needs do not exist.
            FitError: If a fit the recipe depends on fails.

        """


@final
class RecipeRegistry:
    """
    Global registry of figure recipes, keyed by name.

    Example:
        ```python
        from griffiths_sim.recipes import RecipeRegistry

        RecipeRegistry.register_recipe(MyRecipe())
        output = RecipeRegistry.get_recipe("my-recipe").run(context)
        ```

    """

    _recipes: ClassVar[dict[str, Recipe]] = {}

    @classmethod
    def register_recipe(cls, recipe: Recipe) -> type[Self]:
        """
        Register a recipe.

        Args:
            recipe (Recipe): The recipe to register.

        Returns:
            type[Self]: The registry.

        """
        if not isinstance(recipe, Recipe):
            msg = f"All recipes must be Recipe instances, got {type(recipe)}"
            raise TypeError(msg)
        if recipe.name in cls._recipes:
            msg = f"A recipe named {recipe.name!r} is already registered"
            raise ValueError(msg)
        cls._recipes[recipe.name] = recipe
        return cls

    @classmethod
    def clear_recipes(cls) -> None:
        """Clear all recipes from the registry."""
        cls._recipes = {}

    @classmethod
    def get_recipe(cls, name: str) -> Recipe:
        try:
            return cls._recipes[name]
        except KeyError:
            msg = f"unknown recipe {name!r}, expected one of {sorted(cls._recipes)}"
            raise UnknownRecipeError(msg) from None

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(cls._recipes)

    @classmethod
    def recipes_for(cls, mode: RunMode) -> tuple[Recipe, ...]:
        """All recipes that analyze data of one run mode, in registration order."""
        return tuple(recipe for recipe in cls._recipes.values() if recipe.mode is mode)


def write_recipe_output(layout: OutputLayout, name: str, output: RecipeOutput, provenance: Provenance) -> list[Path]:
    """Write the figure table, the estimates table and the JSON summary of one recipe run."""
    written = []
    table = PandasFigureConverter().convert(output.points)
    path = layout.recipe_table(name)
    atomic_write_text(path, table.to_csv(index=False, lineterminator="\n"))
    written.append(path)
    if output.estimates:
        estimates = PandasEstimateConverter().convert(output.estimates)
        path = layout.recipe_estimates(name)
        atomic_write_text(path, estimates.to_csv(index=False, lineterminator="\n"))
        written.append(path)
    document = {"recipe": name, "provenance": provenance.model_dump(), "summary": output.summary}
    path = layout.recipe_summary(name)
    atomic_write_text(path, json.dumps(document, indent=2, sort_keys=True) + "\n")
    written.append(path)
    logger.info("ANALYSIS - recipe %s wrote %s", name, ", ".join(p.name for p in written))
    return written
