"""Contains tests for the observables module."""
