"""Contains tests for the persistence module."""
