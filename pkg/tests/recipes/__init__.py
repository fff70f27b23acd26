"""Contains tests for the recipes module."""
