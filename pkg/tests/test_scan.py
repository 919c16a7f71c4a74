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

from concurrent.futures import ThreadPoolExecutor

import mock
import pytest

from topoforms.cache import OrbitCache
from topoforms.errors import (AuditFailure, CacheMismatch, CellComputationError, IncompleteGrid,
                              InvalidParameter)
from topoforms.events import SCAN_BATCH, SCAN_COMPLETE, SCAN_START
from topoforms.scan import (FAMILIES, Provenance, audit_symmetry, compute_cell,
                            distinguishable_cells, scan, scan_panel, split_by_family,
                            split_by_type)
from topoforms.seifert import SeifertParams, oriented_pair_distinct, q1_positive_definite
from topoforms.topograph import TopographType


def test_panel_is_complete(small_panel):
    assert small_panel.width == small_panel.height == 17
    assert small_panel.is_complete()
    assert len(small_panel.cells) == 17 * 17
    small_panel.require_complete()


def test_counterexample_cell_is_isomorphic(small_panel):
    assert not small_panel.outcome(-1, 1).distinguishable


def test_provenance(small_panel):
    provenances = {o.provenance for o in small_panel.cells.values()}
    assert provenances == {Provenance.COMPUTED, Provenance.CACHE_HIT}
    computed = [c for c, o in small_panel.cells.items() if o.provenance is Provenance.COMPUTED]
    keys = [small_panel.cells[c].orbit_key for c in computed]
    assert len(keys) == len(set(keys))


def test_cells_share_orbit_outcomes(small_panel):
    by_key = {}
    for outcome in small_panel.cells.values():
        by_key.setdefault(outcome.orbit_key, set()).add(outcome.distinguishable)
    assert all(len(v) == 1 for v in by_key.values())


def test_memoization_matches_full_computation(inline_config, small_panel):
    full = scan(3, 5, (-8, 8), (-8, 8), memoize=False)
    assert {o.provenance for o in full.cells.values()} == {Provenance.COMPUTED}
    for cell, outcome in full.cells.items():
        assert outcome.distinguishable == small_panel.cells[cell].distinguishable
        assert outcome.topograph_type is small_panel.cells[cell].topograph_type


def test_executor_path_matches_inline(inline_config, small_panel):
    grid = scan(3, 5, (-8, 8), (-8, 8), jobs=3, batch_size=7,
                executor_factory=lambda jobs: ThreadPoolExecutor(max_workers=jobs))
    assert {c: o.distinguishable for c, o in grid.cells.items()} == \
        {c: o.distinguishable for c, o in small_panel.cells.items()}


def test_scan_events(inline_config, event_bus):
    callback = mock.MagicMock()
    subscriber = event_bus.subscribe("scan/", callback)
    grid = scan(2, 3, (-2, 2), (-2, 2), bus=event_bus, batch_size=4)
    topics = event_bus.topics()
    assert topics[0] == SCAN_START
    assert topics[-1] == SCAN_COMPLETE
    assert SCAN_BATCH in topics
    assert callback.call_count == len(topics)
    assert len(subscriber.received_events()) == len(topics)
    start = event_bus.published_events[0].payload
    assert start["cells"] == 25
    complete = event_bus.published_events[-1].payload
    assert complete["cells"] == 25
    assert complete["distinguishable"] == len(distinguishable_cells(grid))
    assert (0, 1) in distinguishable_cells(grid)
    assert not grid.cells[(0, 0)].distinguishable


def test_cell_errors_carry_position(inline_config):
    with mock.patch("topoforms.scan.compute_cell", side_effect=AuditFailure("boom")):
        with pytest.raises(CellComputationError) as excinfo:
            scan(2, 3, (0, 1), (0, 1))
    assert (excinfo.value.k, excinfo.value.n) == (0, 0)
    assert "boom" in str(excinfo.value)


def test_compute_cell():
    record = compute_cell(2, 3, 0, 1, 1000)
    assert record.distinguishable
    assert record.oriented_distinct
    assert record.topograph_type is TopographType.WELL
    record = compute_cell(3, 5, -1, 1, 1000)
    assert not record.distinguishable


def test_scan_rejects_bad_parameters(inline_config):
    with pytest.raises(InvalidParameter):
        scan(1, 3, (0, 1), (0, 1))
    with pytest.raises(InvalidParameter):
        scan(2, 3, (1, 0), (0, 1))
    with pytest.raises(InvalidParameter):
        scan_panel(2, 3, -1)


def test_cache_mismatch(inline_config):
    with pytest.raises(CacheMismatch):
        scan(3, 5, (0, 1), (0, 1), cache=OrbitCache(2, 3))


def test_cache_is_extended_and_reused(inline_config):
    cache = OrbitCache(2, 3)
    first = scan(2, 3, (-3, 3), (-3, 3), cache=cache)
    assert len(cache) > 0
    second = scan(2, 3, (-3, 3), (-3, 3), cache=cache)
    assert {o.provenance for o in second.cells.values()} == {Provenance.CACHE_HIT}
    assert {c: o.distinguishable for c, o in first.cells.items()} == \
        {c: o.distinguishable for c, o in second.cells.items()}


def test_two_sided_flag(inline_config):
    grid = scan(2, 3, (-3, 3), (-3, 3), two_sided=True)
    assert grid.two_sided
    for (k, n), outcome in grid.cells.items():
        assert outcome.distinguishable == oriented_pair_distinct(SeifertParams.build(2, 3, k, n))


def test_incomplete_grid(small_panel):
    broken = small_panel.empty_like()
    broken.partial = False
    broken.cells = dict(small_panel.cells)
    del broken.cells[(0, 0)]
    with pytest.raises(IncompleteGrid):
        broken.require_complete()
    with pytest.raises(IncompleteGrid):
        split_by_type(broken)


def test_symmetry_audit_catches_disagreement(small_panel):
    tampered = small_panel.empty_like()
    tampered.partial = False
    tampered.cells = dict(small_panel.cells)
    cell = (2, 2)
    original = tampered.cells[cell]
    tampered.cells[cell] = type(original)(not original.distinguishable, original.topograph_type,
                                          original.orbit_key, original.provenance)
    with pytest.raises(AuditFailure):
        audit_symmetry(tampered)


def test_split_by_type(small_panel):
    panels = split_by_type(small_panel)
    assert set(panels) <= set(TopographType)
    assert sum(len(p.cells) for p in panels.values()) == len(small_panel.cells)
    for kind, panel in panels.items():
        assert panel.partial
        assert all(o.topograph_type is kind for o in panel.cells.values())


def test_split_by_family(small_panel):
    panels = split_by_family(small_panel)
    assert set(panels) == set(FAMILIES)
    for cell in small_panel.positions():
        params = SeifertParams.build(3, 5, *cell)
        assert (cell in panels["well"].cells) == q1_positive_definite(params)
    zero = panels["zero"].cells
    for k in small_panel.k_values():
        assert (k, 0) in zero
        if small_panel.in_range(k, 2 * k - 2):
            assert (k, 2 * k - 2) in zero
