# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Simulation and analysis toolkit for the Griffiths-McCoy singularity on diluted Chimera graphs."""
