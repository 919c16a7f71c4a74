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

from functools import reduce
from typing import Dict

import pytest
from hypothesis import strategies as st

from topoforms.config import TopographConfig, with_config
from topoforms.events import MemoryEventBus
from topoforms.forms import BinaryQuadraticForm, UnimodularMatrix
from topoforms.scan import ScanGrid, scan_panel

# generators of GL2(Z): S and T generate SL2(Z), R has determinant -1
GENERATORS = (
    UnimodularMatrix(0, -1, 1, 0),
    UnimodularMatrix(1, 1, 0, 1),
    UnimodularMatrix(1, -1, 0, 1),
    UnimodularMatrix(1, 0, 0, -1),
)

FIGURE_FORMS: Dict[str, BinaryQuadraticForm] = {
    "well": BinaryQuadraticForm(2, 1, 3),
    "double_well": BinaryQuadraticForm(2, 0, 3),
    "river": BinaryQuadraticForm(1, 0, -7),
    "lake": BinaryQuadraticForm(5, 0, 0),
    "weir": BinaryQuadraticForm(0, 7, 0),
    "lake_pair": BinaryQuadraticForm(6, 11, 0),
}

FIGURE_PANELS = [(2, 3), (3, 5)]
PANEL_SIZE = 30


def forms(bound: int = 50) -> st.SearchStrategy:
    c = st.integers(-bound, bound)
    return st.builds(BinaryQuadraticForm, c, c, c)


def definite_forms(bound: int = 10) -> st.SearchStrategy:
    return forms(bound).filter(lambda f: f.discriminant() < 0)


def unimodular_matrices(max_length: int = 12) -> st.SearchStrategy:
    """Random words in the generators, multiplied out."""
    return st.lists(st.sampled_from(GENERATORS), min_size=1, max_size=max_length).map(
        lambda word: reduce(lambda x, y: x @ y, word))


def coprime_pairs() -> st.SearchStrategy:
    return st.sampled_from([(2, 3), (3, 2), (2, 5), (3, 5), (5, 7), (3, 7), (2, 7), (3, 4)])


@pytest.fixture
def figure_forms() -> Dict[str, BinaryQuadraticForm]:
    return dict(FIGURE_FORMS)


@pytest.fixture
def inline_config():
    """Single-process configuration for the duration of a test."""
    with with_config(TopographConfig(jobs=1)) as config:
        yield config


@pytest.fixture
def event_bus() -> MemoryEventBus:
    return MemoryEventBus()


@pytest.fixture(scope="module", params=FIGURE_PANELS, ids=lambda pq: f"p{pq[0]}q{pq[1]}")
def figure_panel(request) -> ScanGrid:
    """A full |k|, |n| <= 30 panel, scanned once per test module."""
    p, q = request.param
    with with_config(TopographConfig(jobs=1)):
        yield scan_panel(p, q, PANEL_SIZE)


@pytest.fixture(scope="module")
def small_panel() -> ScanGrid:
    with with_config(TopographConfig(jobs=1)):
        yield scan_panel(3, 5, 8)
