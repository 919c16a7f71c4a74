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

from typing import Optional

__all__ = [
    "TopographError",
    "NonUnimodular",
    "NotDefinite",
    "NotAllPositive",
    "EqualValues",
    "DepthExceeded",
    "NotCoprime",
    "ZeroParameter",
    "InvalidParameter",
    "CongruentInputs",
    "PeriodCapExceeded",
    "AuditFailure",
    "IncompleteGrid",
    "CacheMismatch",
    "CellComputationError",
]


class TopographError(Exception):
    """Root of every error raised by topoforms."""
    pass


class NonUnimodular(TopographError, ValueError):
    pass


class NotDefinite(TopographError, ValueError):
    pass


class NotAllPositive(TopographError, ValueError):
    pass


class EqualValues(TopographError, ValueError):
    pass


class DepthExceeded(TopographError, ValueError):
    pass


class NotCoprime(TopographError, ValueError):
    pass


class ZeroParameter(TopographError, ValueError):
    pass


class InvalidParameter(TopographError, ValueError):
    pass


class CongruentInputs(TopographError, ValueError):
    pass


class PeriodCapExceeded(TopographError):
    """A river walk ran past the step cap without recurring or reaching a lake.

    Rivers of integral forms are always periodic, so this indicates a bug rather
    than a property of the input.
    """

    def __init__(self, cap: int, start: Optional[tuple] = None):
        self.cap = cap
        self.start = start
        super().__init__(f"river starting at {start} did not recur within {cap} steps")


class AuditFailure(TopographError):
    pass


class IncompleteGrid(TopographError):
    pass


class CacheMismatch(TopographError):
    pass


class CellComputationError(TopographError):

    def __init__(self, k: int, n: int, message: str):
        self.k = k
        self.n = n
        super().__init__(f"cell (k={k}, n={n}): {message}")
