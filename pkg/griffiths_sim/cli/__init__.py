# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""Command-line interface: experiment configuration, subcommands and the run manifest."""
