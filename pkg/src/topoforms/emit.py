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
Writers for completed scan grids.

Pictures put n on the vertical axis increasing upward and k on the horizontal
axis increasing rightward: the cell (k, n) lands in row n_max - n, column
k - k_min.  Distinguishable cells are orange, isomorphic ones blue, and cells
outside a split panel white.
"""
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from topoforms.errors import InvalidParameter
from topoforms.scan import CellOutcome, Provenance, ScanGrid
from topoforms.seifert import orbit_key_text, parse_orbit_key
from topoforms.topograph import TopographType

Color = Tuple[int, int, int]

ORANGE: Color = (255, 127, 14)
BLUE: Color = (31, 119, 180)
WHITE: Color = (255, 255, 255)

CSV_COLUMNS = ("k", "n", "distinguishable", "type", "orbit_key")

FORMATS = ("csv", "ppm", "ppm-ascii", "ascii", "svg")
EXTENSIONS = {"csv": "csv", "ppm": "ppm", "ppm-ascii": "ppm", "ascii": "txt", "svg": "svg"}


def cell_color(outcome: Optional[CellOutcome]) -> Color:
    if outcome is None:
        return WHITE
    return ORANGE if outcome.distinguishable else BLUE


def _raster(grid: ScanGrid) -> List[List[Color]]:
    return [[cell_color(grid.outcome(k, n)) for k in grid.k_values()]
            for n in reversed(grid.n_values())]


def _hex(color: Color) -> str:
    return "#{:02x}{:02x}{:02x}".format(*color)


def write_csv(grid: ScanGrid) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for (k, n), o in sorted(grid.cells.items()):
        writer.writerow((k, n, str(o.distinguishable).lower(), o.topograph_type.value,
                         orbit_key_text(o.orbit_key)))
    return buf.getvalue().encode()


def write_ppm(grid: ScanGrid, scale: int = 1) -> bytes:
    """Binary portable pixmap (P6)."""
    raster = _raster(grid)
    header = f"P6\n{grid.width * scale} {grid.height * scale}\n255\n".encode()
    body = bytearray()
    for row in raster:
        line = b"".join(bytes(color) * scale for color in row)
        body.extend(line * scale)
    return header + bytes(body)


def write_ppm_ascii(grid: ScanGrid, scale: int = 1) -> bytes:
    """Plain portable pixmap (P3), one pixel row per line."""
    lines = ["P3", f"{grid.width * scale} {grid.height * scale}", "255"]
    for row in _raster(grid):
        line = " ".join(" ".join(str(c) for c in color) for color in row for _ in range(scale))
        lines.extend([line] * scale)
    return ("\n".join(lines) + "\n").encode()


def write_ascii(grid: ScanGrid, scale: int = 1) -> bytes:
    rows = []
    for n in reversed(grid.n_values()):
        chars = []
        for k in grid.k_values():
            o = grid.outcome(k, n)
            chars.append((" " if o is None else ("#" if o.distinguishable else ".")) * scale)
        rows.extend(["".join(chars)] * scale)
    return ("\n".join(rows) + "\n").encode()


def write_svg(grid: ScanGrid, scale: int = 10) -> bytes:
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{grid.width * scale}" '
        f'height="{grid.height * scale}">',
        f'<rect width="100%" height="100%" fill="{_hex(WHITE)}"/>',
    ]
    for row, n in enumerate(reversed(grid.n_values())):
        for col, k in enumerate(grid.k_values()):
            o = grid.outcome(k, n)
            if o is None:
                continue
            lines.append(f'<rect x="{col * scale}" y="{row * scale}" width="{scale}" '
                         f'height="{scale}" fill="{_hex(cell_color(o))}"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode()


_WRITERS: Dict[str, Callable[..., bytes]] = {
    "ppm": write_ppm,
    "ppm-ascii": write_ppm_ascii,
    "ascii": write_ascii,
    "svg": write_svg,
}


def emit_grid(grid: ScanGrid, fmt: str = "csv", scale: Optional[int] = None) -> bytes:
    """
    Serialize a completed grid; output is byte-stable for a fixed grid.

    :raises IncompleteGrid: if a full (not split) grid is missing cells
    """
    if fmt not in FORMATS:
        raise InvalidParameter(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}")
    if scale is not None and scale < 1:
        raise InvalidParameter(f"scale must be positive, got {scale}")
    grid.require_complete()
    if fmt == "csv":
        return write_csv(grid)
    if scale is None:
        return _WRITERS[fmt](grid)
    return _WRITERS[fmt](grid, scale)


def read_grid_csv(source: Union[str, Path, bytes], p: int, q: int,
                  two_sided: bool = False) -> ScanGrid:
    """Rebuild a grid from ``write_csv`` output; cells come back as cache hits."""
    if isinstance(source, bytes):
        text = source.decode()
    elif isinstance(source, Path):
        text = source.read_text()
    else:
        text = source
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise InvalidParameter(f"unexpected CSV columns {reader.fieldnames}")
    cells = {}
    for row in reader:
        cell = int(row["k"]), int(row["n"])
        cells[cell] = CellOutcome(row["distinguishable"] == "true", TopographType(row["type"]),
                                  parse_orbit_key(row["orbit_key"]), Provenance.CACHE_HIT)
    if not cells:
        raise InvalidParameter("CSV holds no cells")
    ks = [k for k, _ in cells]
    ns = [n for _, n in cells]
    grid = ScanGrid(p, q, min(ks), max(ks), min(ns), max(ns), cells=cells, two_sided=two_sided)
    grid.require_complete()
    return grid
