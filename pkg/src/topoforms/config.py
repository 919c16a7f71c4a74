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

from __future__ import annotations

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import psutil
import yaml

from topoforms.errors import InvalidParameter

_log = logging.getLogger(__name__)

# Environment variables consulted by load_config.
CONFIG_ENV = "TOPOFORMS_CONFIG"
RIVER_STEP_CAP_ENV = "TOPOFORMS_RIVER_STEP_CAP"
JOBS_ENV = "TOPOFORMS_JOBS"

PathStr = Union[Path, str]


@dataclass(frozen=True)
class TopographConfig:
    river_step_cap: int = 1_000_000
    max_render_depth: int = 8
    scan_batch_size: int = 512
    jobs: Optional[int] = None
    search_bound: int = 6

    def __post_init__(self):
        for name in ("river_step_cap", "max_render_depth", "scan_batch_size", "search_bound"):
            if getattr(self, name) < 1:
                raise InvalidParameter(f"{name} must be a positive integer")
        if self.jobs is not None and self.jobs < 1:
            raise InvalidParameter("jobs must be a positive integer")

    def effective_jobs(self) -> int:
        """Worker count for scans; defaults to the physical core count."""
        if self.jobs is not None:
            return self.jobs
        return max(1, psutil.cpu_count(logical=False) or 1)


def _from_mapping(data: Dict[str, Any]) -> TopographConfig:
    known = {f.name for f in fields(TopographConfig)}
    unknown = set(data) - known
    if unknown:
        raise InvalidParameter(f"unknown configuration keys: {sorted(unknown)}")
    return TopographConfig(**data)


def _apply_env(config: TopographConfig) -> TopographConfig:
    updates: Dict[str, Any] = {}
    try:
        if os.environ.get(RIVER_STEP_CAP_ENV):
            updates["river_step_cap"] = int(os.environ[RIVER_STEP_CAP_ENV])
        if os.environ.get(JOBS_ENV):
            updates["jobs"] = int(os.environ[JOBS_ENV])
    except ValueError as e:
        raise InvalidParameter(f"invalid integer in environment: {e}") from e
    return replace(config, **updates) if updates else config


def load_config(path: Optional[PathStr] = None) -> TopographConfig:
    """
    Build a configuration from a YAML file and the environment.

    The file is ``path`` if given, else the file named by ``TOPOFORMS_CONFIG``;
    without either the defaults are used.  Environment overrides are applied last.

    :param path: optional YAML file holding a mapping of TopographConfig fields
    :return: the resulting configuration
    """
    if path is None and os.environ.get(CONFIG_ENV):
        path = os.environ[CONFIG_ENV]

    config = TopographConfig()
    if path is not None:
        path = Path(path).expanduser()
        _log.debug(f"Loading configuration from {path}")
        with open(path) as fp:
            data = yaml.safe_load(fp) or {}
        if not isinstance(data, dict):
            raise InvalidParameter(f"configuration file {path} must hold a mapping")
        config = _from_mapping(data)
    return _apply_env(config)


_active_config: Optional[TopographConfig] = None


def get_config() -> TopographConfig:
    global _active_config
    if _active_config is None:
        _active_config = load_config()
    return _active_config


def set_config(config: Optional[TopographConfig]):
    """Replace the active configuration; None forces a reload on next use."""
    global _active_config
    _active_config = config


@contextmanager
def with_config(config: TopographConfig):
    """
    Swap the active configuration for the duration of the block and restore it
    afterwards.

    Example::

        with with_config(TopographConfig(river_step_cap=100)):
            invariant(form)
    """
    previous = _active_config
    set_config(config)
    try:
        yield config
    finally:
        set_config(previous)
