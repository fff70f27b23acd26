"""Contains tests for the conversion module."""
