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
Local pictures of a topograph.

The tree is grown breadth-first from the vertex of the marked superbase
((1,0), (0,1), (1,1)).  Crossing the edge between regions A and B from a vertex
whose third region is C reaches the vertex whose third region is A+B or A-B,
whichever is not +-C.  Each edge is oriented by the arithmetic progression
C, A+B, C': it points toward the vertex whose third region carries the larger
value, and stays unoriented when the two values agree.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from topoforms.config import get_config
from topoforms.errors import DepthExceeded, InvalidParameter
from topoforms.forms import BinaryQuadraticForm, evaluate

_log = logging.getLogger(__name__)

Vector = Tuple[int, int]

ROOT_REGIONS: Tuple[Vector, Vector, Vector] = ((1, 0), (0, 1), (1, 1))


def lax(vector: Vector) -> Vector:
    """Representative of +-vector with a positive first non-zero coordinate."""
    x, y = vector
    if x < 0 or (x == 0 and y < 0):
        return -x, -y
    return x, y


@dataclass(frozen=True)
class TreeVertex:
    index: int
    regions: Tuple[Vector, Vector, Vector]
    depth: int


@dataclass(frozen=True)
class TreeEdge:
    parent: int
    child: int
    # the two regions the edge separates
    between: Tuple[Vector, Vector]
    parent_value: int
    child_value: int

    @property
    def toward(self) -> Optional[int]:
        """Index of the vertex the edge points to, None when unoriented."""
        if self.parent_value == self.child_value:
            return None
        return self.child if self.child_value > self.parent_value else self.parent

    @property
    def arrow(self) -> str:
        if self.toward is None:
            return "---"
        return "-->" if self.toward == self.child else "<--"


@dataclass
class TopographTree:
    form: BinaryQuadraticForm
    depth: int
    vertices: List[TreeVertex] = field(default_factory=list)
    edges: List[TreeEdge] = field(default_factory=list)
    values: Dict[Vector, int] = field(default_factory=dict)

    def value(self, region: Vector) -> int:
        region = lax(region)
        if region not in self.values:
            self.values[region] = evaluate(self.form, *region)
        return self.values[region]

    def to_dot(self) -> str:
        return write_dot(self)

    def to_ascii(self) -> str:
        return write_ascii(self)


def _label(tree: TopographTree, region: Vector) -> str:
    return f"({region[0]},{region[1]})={tree.value(region)}"


def render_topograph(form: BinaryQuadraticForm, depth: int,
                     max_depth: Optional[int] = None) -> TopographTree:
    """
    Grow the topograph tree of ``form`` to ``depth`` edges from the root vertex.

    :raises InvalidParameter: if depth < 1
    :raises DepthExceeded: if depth is larger than the configured maximum
    """
    limit = max_depth if max_depth is not None else get_config().max_render_depth
    if depth < 1:
        raise InvalidParameter(f"depth must be positive, got {depth}")
    if depth > limit:
        raise DepthExceeded(f"depth {depth} exceeds the maximum of {limit}")

    tree = TopographTree(form, depth)
    root = TreeVertex(0, ROOT_REGIONS, 0)
    tree.vertices.append(root)
    # (vertex, edges still to expand as (A, B, C) with C the vertex's third region)
    frontier = [(root, [(ROOT_REGIONS[0], ROOT_REGIONS[1], ROOT_REGIONS[2]),
                        (ROOT_REGIONS[1], ROOT_REGIONS[2], ROOT_REGIONS[0]),
                        (ROOT_REGIONS[0], ROOT_REGIONS[2], ROOT_REGIONS[1])])]

    while frontier:
        vertex, pending = frontier.pop(0)
        if vertex.depth >= depth:
            continue
        for a, b, c in pending:
            new = lax((a[0] + b[0], a[1] + b[1]))
            if new == lax(c):
                new = lax((a[0] - b[0], a[1] - b[1]))
            child = TreeVertex(len(tree.vertices), (a, b, new), vertex.depth + 1)
            tree.vertices.append(child)
            tree.edges.append(TreeEdge(vertex.index, child.index, (a, b), tree.value(c),
                                       tree.value(new)))
            frontier.append((child, [(a, new, b), (b, new, a)]))

    _log.debug(f"rendered {len(tree.vertices)} vertices of {form!r} to depth {depth}")
    return tree


def write_dot(tree: TopographTree) -> str:
    lines = [f'digraph topograph {{', f'  label="{tree.form}";', '  node [shape=box];']
    for vertex in tree.vertices:
        label = "\\n".join(_label(tree, r) for r in vertex.regions)
        lines.append(f'  v{vertex.index} [label="{label}"];')
    for edge in tree.edges:
        a, b = edge.between
        label = f"{tree.value(a)}|{tree.value(b)}"
        if edge.toward is None:
            lines.append(f'  v{edge.parent} -> v{edge.child} [label="{label}", dir=none];')
        elif edge.toward == edge.child:
            lines.append(f'  v{edge.parent} -> v{edge.child} [label="{label}"];')
        else:
            lines.append(f'  v{edge.child} -> v{edge.parent} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_ascii(tree: TopographTree) -> str:
    children: Dict[int, List[TreeEdge]] = {}
    for edge in tree.edges:
        children.setdefault(edge.parent, []).append(edge)

    root = tree.vertices[0]
    lines = ["v0: " + " ".join(_label(tree, r) for r in root.regions)]

    def walk(index: int, indent: int):
        for edge in children.get(index, []):
            a, b = edge.between
            child = tree.vertices[edge.child]
            lines.append(f"{'  ' * indent}[{tree.value(a)}|{tree.value(b)}] "
                         f"{edge.parent_value} {edge.arrow} {edge.child_value}  "
                         f"v{child.index}: {_label(tree, child.regions[2])}")
            walk(child.index, indent + 1)

    walk(root.index, 1)
    return "\n".join(lines) + "\n"
