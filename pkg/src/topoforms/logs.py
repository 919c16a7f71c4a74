# -*- coding: utf-8 -*- {{{
# ===----------------------------------------------------------------------===
#
#                 topoforms
#
# ===----------------------------------------------------------------------===
#
# Copyright 2026 The topoforms developers
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy
# of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
#
# ===----------------------------------------------------------------------===
# }}}

import logging
import os
import sys
from typing import Optional, TextIO, Union

LOG_LEVEL_ENV = "TOPOFORMS_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"

_handler: Optional[logging.Handler] = None


def setup_logging(level: Union[int, str] = logging.WARNING, stream: Optional[TextIO] = None):
    """
    Attach a single stream handler to the ``topoforms`` logger.

    Calling it again only adjusts the level.  ``TOPOFORMS_LOG_LEVEL`` wins over
    the level argument.
    """
    global _handler
    level = os.environ.get(LOG_LEVEL_ENV, level)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    root = logging.getLogger("topoforms")
    if _handler is None:
        _handler = logging.StreamHandler(stream or sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(_handler)
    root.setLevel(level)
    return root


def verbosity_to_level(verbose: int) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING
