# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
This module implements the generic base models for griffiths-sim.

These generic base models serve as the foundation for all the domain models of the package.

Intended for internal use only.
"""
