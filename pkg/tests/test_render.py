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

import pytest

from topoforms.config import TopographConfig, with_config
from topoforms.errors import DepthExceeded, InvalidParameter
from topoforms.forms import BinaryQuadraticForm
from topoforms.render import lax, render_topograph


def test_lax():
    assert lax((-1, 2)) == (1, -2)
    assert lax((0, -1)) == (0, 1)
    assert lax((2, -1)) == (2, -1)


def test_double_well_has_unoriented_central_edge():
    tree = render_topograph(BinaryQuadraticForm(2, 0, 3), 1)
    assert len(tree.vertices) == 4
    assert len(tree.edges) == 3
    root_values = sorted(tree.value(r) for r in tree.vertices[0].regions)
    assert root_values == [2, 3, 5]

    central = [e for e in tree.edges if set(e.between) == {(1, 0), (0, 1)}]
    assert len(central) == 1
    edge = central[0]
    assert (edge.parent_value, edge.child_value) == (5, 5)
    assert edge.toward is None
    assert tree.value(tree.vertices[edge.child].regions[2]) == 5


def test_lake_neighbours_share_a_value():
    tree = render_topograph(BinaryQuadraticForm(5, 0, 0), 2)
    assert tree.value((0, 1)) == 0
    neighbours = {r for v in tree.vertices if (0, 1) in v.regions for r in v.regions} - {(0, 1)}
    assert len(neighbours) > 3
    assert all(tree.value(r) == 5 for r in neighbours)


def test_edges_follow_progression():
    tree = render_topograph(BinaryQuadraticForm(1, 1, 1), 1)
    towards = {frozenset(e.between): e.toward for e in tree.edges}
    # the region (1,-1) has value 1, below the root's third value 3
    assert towards[frozenset({(1, 0), (0, 1)})] == 0
    assert towards[frozenset({(0, 1), (1, 1)})] != 0
    assert towards[frozenset({(1, 0), (1, 1)})] != 0


def test_tree_size():
    tree = render_topograph(BinaryQuadraticForm(1, 0, -7), 3)
    # 3 + 6 + 12 vertices beyond the root
    assert len(tree.vertices) == 22
    assert len(tree.edges) == 21


def test_depth_limits():
    with pytest.raises(DepthExceeded):
        render_topograph(BinaryQuadraticForm(1, 0, 1), 9)
    with pytest.raises(InvalidParameter):
        render_topograph(BinaryQuadraticForm(1, 0, 1), 0)
    with with_config(TopographConfig(max_render_depth=2)):
        with pytest.raises(DepthExceeded):
            render_topograph(BinaryQuadraticForm(1, 0, 1), 3)


def test_dot_output():
    dot = render_topograph(BinaryQuadraticForm(2, 0, 3), 1).to_dot()
    assert dot.startswith("digraph topograph {")
    assert dot.rstrip().endswith("}")
    assert 'label="2|3", dir=none' in dot
    assert dot.count("->") == 3


def test_ascii_output():
    text = render_topograph(BinaryQuadraticForm(2, 0, 3), 1).to_ascii()
    lines = text.splitlines()
    assert lines[0] == "v0: (1,0)=2 (0,1)=3 (1,1)=5"
    assert "  [2|3] 5 --- 5  v1: (1,-1)=5" in lines
    assert len(lines) == 4
