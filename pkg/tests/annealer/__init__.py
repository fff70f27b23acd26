"""Contains tests for the annealer module."""
