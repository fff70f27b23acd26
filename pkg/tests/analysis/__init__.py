"""Contains tests for the analysis module."""
