# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""On-disk formats: instance files, record logs, checkpoints and device state files."""
