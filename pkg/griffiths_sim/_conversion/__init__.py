# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

"""
Conversion between the package's domain models and external formats.

Input converters validate a whole document first and then convert it row by row, collecting
every failing row into one ExceptionGroup. Output converters turn model lists into
schema-validated pandas DataFrames.
"""
