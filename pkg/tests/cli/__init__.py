"""Contains tests for the cli module."""
