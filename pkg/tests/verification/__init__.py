"""Contains tests for the verification module."""
