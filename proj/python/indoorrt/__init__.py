# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The indoorrt Authors
"""Indoor radio propagation by the image method."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "1.0.0"
