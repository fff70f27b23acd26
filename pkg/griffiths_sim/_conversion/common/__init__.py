# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0
