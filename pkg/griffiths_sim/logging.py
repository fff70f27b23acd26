# SPDX-FileCopyrightText: Contributors to griffiths-sim
#
# SPDX-License-Identifier: Apache-2.0

import logging

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())
