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

from topoforms.errors import NonUnimodular
from topoforms.forms import (BinaryQuadraticForm, UnimodularMatrix, VertexTriple, act,
                             discriminant, is_factorizable, negate, neighbor_value,
                             square_plus_form)


@pytest.mark.parametrize("coefficients, expected", [
    ((1, 0, -7), 28),
    ((6, 11, 0), 121),
    ((2, 0, 3), -24),
    ((0, 0, 0), 0),
])
def test_discriminant(coefficients, expected):
    assert discriminant(BinaryQuadraticForm(*coefficients)) == expected


def test_coefficients_must_be_integers():
    with pytest.raises(TypeError):
        BinaryQuadraticForm(1.5, 0, 1)
    with pytest.raises(TypeError):
        BinaryQuadraticForm(True, 0, 1)


def test_evaluate():
    f = BinaryQuadraticForm(2, 1, 3)
    assert f(1, 0) == 2
    assert f(0, 1) == 3
    assert f(1, 1) == 6
    assert f(1, -1) == 4


def test_act_known_witness():
    f = BinaryQuadraticForm(15, 17, 5)
    assert act(f, [[2, 1], [-5, -2]]) == BinaryQuadraticForm(15, 7, 1)


def test_act_rejects_non_unimodular():
    with pytest.raises(NonUnimodular):
        act(BinaryQuadraticForm(1, 0, 1), [[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        UnimodularMatrix(1, 2, 3, 4)


def test_act_identity_and_swap():
    f = BinaryQuadraticForm(5, 0, 0)
    assert act(f, UnimodularMatrix.identity()) == f
    assert act(f, [[0, 1], [1, 0]]) == BinaryQuadraticForm(0, 0, 5)


def test_composition_law():
    f = BinaryQuadraticForm(3, -4, 7)
    p1 = UnimodularMatrix(2, 1, 1, 1)
    p2 = UnimodularMatrix(0, -1, 1, 3)
    assert act(act(f, p1), p2) == act(f, p1 @ p2)


def test_matrix_helpers():
    m = UnimodularMatrix(2, 1, 5, 3)
    assert m.determinant() == 1
    assert m @ m.inverse() == UnimodularMatrix.identity()
    reflection = UnimodularMatrix(1, 0, 0, -1)
    assert reflection.inverse() == reflection
    assert m.transpose() == UnimodularMatrix(2, 5, 1, 3)
    assert m.apply(1, 1) == (3, 8)


def test_act_preserves_discriminant():
    f = BinaryQuadraticForm(6, 11, 0)
    assert discriminant(act(f, [[3, 2], [4, 3]])) == discriminant(f)


def test_vertex_triple():
    f = BinaryQuadraticForm(2, 1, 3)
    triple = VertexTriple.from_form(f)
    assert triple.values == (2, 3, 6)
    assert triple.to_form() == f
    assert triple.negated().values == (-2, -3, -6)
    assert VertexTriple.of([6, 2, 3]).sorted().values == (2, 3, 6)


def test_neighbor_value():
    # across the edge between 2 and 3, opposite 6
    assert neighbor_value(2, 3, 6) == 4
    assert BinaryQuadraticForm(2, 1, 3)(1, -1) == 4


def test_negate():
    assert negate(BinaryQuadraticForm(1, -2, 3)) == BinaryQuadraticForm(-1, 2, -3)
    assert -BinaryQuadraticForm(1, -2, 3) == BinaryQuadraticForm(-1, 2, -3)


def test_is_factorizable():
    assert is_factorizable(BinaryQuadraticForm(6, 11, 0))
    assert is_factorizable(BinaryQuadraticForm(5, 0, 0))
    assert not is_factorizable(BinaryQuadraticForm(1, 0, -7))
    assert not is_factorizable(BinaryQuadraticForm(2, 0, 3))


def test_square_plus_form():
    assert square_plus_form(30, 7, 12) == BinaryQuadraticForm(900, 420, 61)
    assert square_plus_form(30, 13, 12) == BinaryQuadraticForm(900, 780, 181)
