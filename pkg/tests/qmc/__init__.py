"""Contains tests for the qmc module."""
