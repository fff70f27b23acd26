"""Contains tests for the oracle module."""
