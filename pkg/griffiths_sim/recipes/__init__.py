# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Figure recipes: named reproductions that turn record logs into plot tables and fit summaries.

Importing the package registers the built-in recipes.
"""

from griffiths_sim.recipes._base import Recipe, RecipeContext, RecipeOutput, RecipeRegistry, write_recipe_output
from griffiths_sim.recipes.device import DEVICE_RECIPES
from griffiths_sim.recipes.qmc import QMC_RECIPES


def register_builtin_recipes() -> None:
    """Register every built-in recipe that is not registered yet."""
    for recipe in (*QMC_RECIPES, *DEVICE_RECIPES):
        if recipe.name not in RecipeRegistry.names():
            RecipeRegistry.register_recipe(recipe)


register_builtin_recipes()

__all__ = [
    "Recipe",
    "RecipeContext",
    "RecipeOutput",
    "RecipeRegistry",
    "register_builtin_recipes",
    "write_recipe_output",
]
