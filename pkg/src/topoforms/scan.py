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

"""
Scanning a (k, n) panel of the Seifert family for fixed (p, q).

Cells in the same <tau, rho>-orbit share their outcome, so with memoization
every orbit is computed once: cells are grouped by ``orbit_key`` and one
representative per unknown key is sent to the workers.  Workers are pure
functions of (p, q, k, n, step cap); their results are merged into the orbit
cache on the calling process after each batch, which keeps the grid identical
whatever the job count or batch size.
"""
from __future__ import annotations

import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from topoforms.cache import OrbitCache, OrbitRecord
from topoforms.config import get_config
from topoforms.errors import (AuditFailure, CellComputationError, IncompleteGrid,
                              InvalidParameter, TopographError)
from topoforms.events import (SCAN_BATCH, SCAN_COMPLETE, SCAN_CRITERIA_DIFFER, SCAN_START,
                              MemoryEventBus)
from topoforms.forms import negate
from topoforms.seifert import (OrbitKey, SeifertParams, orbit_key, oriented_forms, rho, tau,
                               tau_inverse)
from topoforms.topograph import TopographType, invariant

_log = logging.getLogger(__name__)

Cell = Tuple[int, int]
Range = Tuple[int, int]

FAMILIES: Dict[str, Tuple[TopographType, ...]] = {
    "well": (TopographType.WELL, ),
    "river": (TopographType.RIVER, ),
    "zero": (TopographType.LAKE, TopographType.WEIR, TopographType.LAKEPAIR, TopographType.ZERO),
}


class Provenance(Enum):
    COMPUTED = "computed"
    CACHE_HIT = "cache-hit"


@dataclass(frozen=True)
class CellOutcome:
    distinguishable: bool
    topograph_type: TopographType
    orbit_key: OrbitKey
    provenance: Provenance
    criteria_differ: bool = False


@dataclass
class ScanGrid:
    p: int
    q: int
    k_min: int
    k_max: int
    n_min: int
    n_max: int
    cells: Dict[Cell, CellOutcome] = field(default_factory=dict)
    two_sided: bool = False
    # panels cut out of a full grid leave the other cells empty on purpose
    partial: bool = False

    @property
    def width(self) -> int:
        return self.k_max - self.k_min + 1

    @property
    def height(self) -> int:
        return self.n_max - self.n_min + 1

    def k_values(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def n_values(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def positions(self) -> Iterator[Cell]:
        for k in self.k_values():
            for n in self.n_values():
                yield k, n

    def in_range(self, k: int, n: int) -> bool:
        return self.k_min <= k <= self.k_max and self.n_min <= n <= self.n_max

    def is_complete(self) -> bool:
        return all(cell in self.cells for cell in self.positions())

    def require_complete(self):
        if self.partial:
            return
        missing = sum(1 for cell in self.positions() if cell not in self.cells)
        if missing:
            raise IncompleteGrid(f"{missing} of {self.width * self.height} cells have no outcome")

    def outcome(self, k: int, n: int) -> Optional[CellOutcome]:
        return self.cells.get((k, n))

    def params(self, k: int, n: int) -> SeifertParams:
        return SeifertParams.build(self.p, self.q, k, n)

    def empty_like(self) -> ScanGrid:
        return ScanGrid(self.p, self.q, self.k_min, self.k_max, self.n_min, self.n_max,
                        two_sided=self.two_sided, partial=True)


def compute_cell(p: int, q: int, k: int, n: int, step_cap: int) -> OrbitRecord:
    """
    Both comparison criteria and the topograph type for one parameter point.

    :raises AuditFailure: if Q0 and Q1 have different topograph types
    """
    q0, q1 = oriented_forms(SeifertParams.build(p, q, k, n))
    i0, i1 = invariant(q0, step_cap), invariant(q1, step_cap)
    if i0.kind is not i1.kind:
        raise AuditFailure(f"Q0 is {i0.kind.value} but Q1 is {i1.kind.value}")
    oriented = i0 != i1 and i0 != invariant(negate(q1), step_cap)
    return OrbitRecord(i0 != i1, i1.kind, oriented)


def _cell_task(args: Tuple[int, int, int, int, int]):
    # errors come back as text; the calling process attaches the cell
    p, q, k, n, step_cap = args
    try:
        return compute_cell(p, q, k, n, step_cap), None
    except TopographError as e:
        return None, f"{type(e).__name__}: {e}"


def _batches(items: Sequence[Cell], size: int) -> Iterator[Sequence[Cell]]:
    for start in range(0, len(items), size):
        yield items[start:start + size]


def _publish(bus: Optional[MemoryEventBus], topic: str, **payload):
    if bus is not None:
        bus.publish(topic, payload)


def scan(p: int,
         q: int,
         k_range: Range,
         n_range: Range,
         two_sided: bool = False,
         memoize: bool = True,
         cache: Optional[OrbitCache] = None,
         jobs: Optional[int] = None,
         batch_size: Optional[int] = None,
         step_cap: Optional[int] = None,
         bus: Optional[MemoryEventBus] = None,
         executor_factory: Callable[[int], Executor] = ProcessPoolExecutor) -> ScanGrid:
    """
    Fill every cell of the panel k in k_range, n in n_range (both inclusive).

    :param two_sided: colour by oriented_pair_distinct instead of distinguishable
    :param memoize: compute one representative per orbit; False computes every cell
    :param cache: orbit cache to read and extend, e.g. one loaded from disk
    :param jobs: worker processes; 1 runs inline
    :raises CellComputationError: naming the failing (k, n)
    :raises AuditFailure: if tau/rho-related cells disagree
    """
    if p < 2 or q < 2:
        raise InvalidParameter(f"scans need p, q > 1, got ({p}, {q})")
    (k_min, k_max), (n_min, n_max) = k_range, n_range
    if k_min > k_max or n_min > n_max:
        raise InvalidParameter(f"empty panel k={k_range} n={n_range}")
    SeifertParams.build(p, q, 0, 0)

    config = get_config()
    jobs = jobs if jobs is not None else config.effective_jobs()
    batch_size = batch_size or config.scan_batch_size
    step_cap = step_cap or config.river_step_cap
    if cache is None:
        cache = OrbitCache(p, q)
    cache.check_panel(p, q)

    grid = ScanGrid(p, q, k_min, k_max, n_min, n_max, two_sided=two_sided)
    keys = {cell: orbit_key(grid.params(*cell)) for cell in grid.positions()}

    if memoize:
        representatives: Dict[OrbitKey, Cell] = {}
        for cell, key in keys.items():
            if key not in cache and key not in representatives:
                representatives[key] = cell
        pending = list(representatives.values())
    else:
        pending = list(keys)

    _log.info(f"scan p={p} q={q} k={k_range} n={n_range}: {len(keys)} cells, "
              f"{len(pending)} to compute, jobs={jobs}")
    _publish(bus, SCAN_START, p=p, q=q, cells=len(keys), pending=len(pending))

    computed: Dict[Cell, OrbitRecord] = {}
    pool = executor_factory(jobs) if jobs > 1 and len(pending) > 1 else None
    try:
        for batch in _batches(pending, batch_size):
            tasks = [(p, q, k, n, step_cap) for k, n in batch]
            if pool is None:
                results = map(_cell_task, tasks)
            else:
                results = pool.map(_cell_task, tasks)
            merged: Dict[OrbitKey, OrbitRecord] = {}
            for cell, (record, error) in zip(batch, results):
                if error is not None:
                    raise CellComputationError(cell[0], cell[1], error)
                computed[cell] = record
                merged[keys[cell]] = record
                if record.criteria_differ:
                    _log.warning(f"one- and two-sided criteria differ at k={cell[0]} n={cell[1]}")
                    _publish(bus, SCAN_CRITERIA_DIFFER, k=cell[0], n=cell[1])
            if memoize:
                cache.merge(merged)
            _log.info(f"scan batch done: {len(computed)}/{len(pending)}")
            _publish(bus, SCAN_BATCH, done=len(computed), total=len(pending))
    finally:
        if pool is not None:
            pool.shutdown()

    for cell, key in keys.items():
        if memoize:
            record = cache.get(key)
            provenance = Provenance.COMPUTED if cell in computed else Provenance.CACHE_HIT
        else:
            record = computed[cell]
            provenance = Provenance.COMPUTED
        dist = record.oriented_distinct if two_sided else record.distinguishable
        grid.cells[cell] = CellOutcome(dist, record.topograph_type, key, provenance,
                                       record.criteria_differ)

    audit_symmetry(grid)
    marked = len(distinguishable_cells(grid))
    _log.info(f"scan of ({p}, {q}) complete: {marked} of {len(grid.cells)} cells distinguishable")
    _publish(bus, SCAN_COMPLETE, cells=len(grid.cells), computed=len(computed),
             distinguishable=marked)
    return grid


def scan_panel(p: int, q: int, size: int, **kwargs) -> ScanGrid:
    """The square panel |k|, |n| <= size."""
    if size < 0:
        raise InvalidParameter(f"size must be non-negative, got {size}")
    return scan(p, q, (-size, size), (-size, size), **kwargs)


def audit_symmetry(grid: ScanGrid):
    """
    Check that tau-, tau^-1- and rho-related cells inside the panel agree.

    :raises AuditFailure: naming both cells on the first disagreement
    """
    grid.require_complete()
    checked = 0
    for (k, n), outcome in grid.cells.items():
        params = grid.params(k, n)
        for image in (tau(params), tau_inverse(params), rho(params)):
            other = grid.cells.get(image.point)
            if other is None:
                continue
            checked += 1
            if other.distinguishable != outcome.distinguishable \
                    or other.topograph_type is not outcome.topograph_type:
                raise AuditFailure(f"cells {(k, n)} and {image.point} are symmetric but disagree")
    _log.debug(f"symmetry audit passed on {checked} related pairs")


def _panel(grid: ScanGrid, kinds: Sequence[TopographType]) -> ScanGrid:
    panel = grid.empty_like()
    panel.cells = {cell: o for cell, o in grid.cells.items() if o.topograph_type in kinds}
    return panel


def split_by_type(grid: ScanGrid) -> Dict[TopographType, ScanGrid]:
    """One partial grid per topograph type present in ``grid``."""
    grid.require_complete()
    present = {o.topograph_type for o in grid.cells.values()}
    return {kind: _panel(grid, (kind, )) for kind in TopographType if kind in present}


def split_by_family(grid: ScanGrid) -> Dict[str, ScanGrid]:
    """The three panels: positive/negative definite, rivers, and forms representing zero."""
    grid.require_complete()
    return {name: _panel(grid, kinds) for name, kinds in FAMILIES.items()}


def distinguishable_cells(grid: ScanGrid) -> List[Cell]:
    return sorted(cell for cell, o in grid.cells.items() if o.distinguishable)
