# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

from enum import StrEnum
from importlib.metadata import PackageNotFoundError, version


class RunMode(StrEnum):
    """The two simulation front ends that feed the analysis pipeline."""

    QMC = "qmc"
    DEVICE_SIM = "device-sim"


def code_version() -> str:
    """
    The version of the installed package, embedded in every output artifact.

    Falls back to the version file written by hatch-vcs, and to ``0.0.0+unknown`` for a bare checkout.
    """
    try:
        return version("griffiths-sim")
    except PackageNotFoundError:
        try:
            from griffiths_sim._version import __version__  # noqa: PLC0415

            return str(__version__)
        except ImportError:
            return "0.0.0+unknown"
