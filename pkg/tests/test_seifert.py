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

from fractions import Fraction

import pytest
import sympy

from topoforms.errors import CongruentInputs, InvalidParameter, NotCoprime, ZeroParameter
from topoforms.forms import BinaryQuadraticForm, evaluate, square_plus_form
from topoforms.seifert import (SeifertParams, alexander_coefficient, alexander_polynomial,
                               bracket_reduce, compute_rs, criteria_differ, describe,
                               distinguishable, large_k_threshold, lemma_bounds, lemma_data,
                               lemma_predicts_distinct, linear_factors, normalize_params,
                               orbit_key, orbit_key_text, oriented_forms, oriented_pair_distinct,
                               parabola_alexander_trivial, parabola_offset, parse_orbit_key,
                               q1_positive_definite, rational_equivalence, rho, seifert_forms,
                               seifert_matrices, tau, tau_inverse, thm_large_k, thm_main_bound,
                               thm_weakened_bound, topograph_types)
from topoforms.topograph import TopographType, invariant


def params(p, q, k, n):
    return SeifertParams.build(p, q, k, n)


@pytest.mark.parametrize("raw, expected", [
    ((3, 5), (3, 5, False)),
    ((2, -3), (2, 3, True)),
    ((-3, -4), (3, 4, False)),
])
def test_normalize_params(raw, expected):
    assert normalize_params(*raw) == expected


def test_normalize_params_errors():
    with pytest.raises(ZeroParameter):
        normalize_params(0, 3)
    with pytest.raises(NotCoprime):
        normalize_params(4, 6)


@pytest.mark.parametrize("pq, rs", [((3, 5), (1, 2)), ((2, 3), (1, 2)), ((3, 4), (2, 3))])
def test_compute_rs(pq, rs):
    assert compute_rs(*pq) == rs


def test_compute_rs_needs_large_parameters():
    with pytest.raises(InvalidParameter):
        compute_rs(1, 3)
    with pytest.raises(InvalidParameter):
        compute_rs(3, 1)


def test_build_with_unit_p():
    P = params(1, 5, 0, 1)
    assert (P.r, P.s) == (0, 1)
    assert seifert_matrices(P) == (((5, 0), (1, 1)), ((5, 0), (1, 1)))
    assert seifert_forms(P) == (BinaryQuadraticForm(5, 1, 1), BinaryQuadraticForm(5, 1, 1))
    assert not distinguishable(P)
    text = describe(P)
    assert "isomorphic: yes" in text
    assert "thm_main_bound" not in text
    for predicate in (thm_main_bound, thm_weakened_bound, thm_large_k):
        with pytest.raises(InvalidParameter):
            predicate(P)


def test_build_mirrored():
    P = params(2, -3, 0, -1)
    assert (P.p, P.q, P.k, P.n, P.mirrored) == (2, 3, 0, 1, True)
    q0, q1 = oriented_forms(P)
    assert q0 == BinaryQuadraticForm(-6, -7, -3)
    assert q1 == BinaryQuadraticForm(-6, -1, -1)
    assert distinguishable(P)


def test_build_with_explicit_rs():
    with pytest.raises(InvalidParameter):
        SeifertParams.build(3, 5, 0, 0, r=1, s=3)
    shifted = SeifertParams.build(3, 5, 1, 4, r=1 + 3, s=2 + 5)
    base = params(3, 5, 1, 4)
    assert invariant(seifert_forms(shifted)[0]) == invariant(seifert_forms(base)[0])
    assert seifert_forms(shifted)[1] == seifert_forms(base)[1]


def test_seifert_matrices():
    pair = seifert_matrices(params(3, 5, -1, 1))
    assert pair.V0 == ((15, 8), (9, 5))
    assert pair.V1 == ((15, 3), (4, 1))
    pair = seifert_matrices(params(3, 5, 0, 0))
    assert pair.V0 == ((15, 5), (6, 2))
    assert pair.V1 == ((15, 0), (1, 0))
    assert seifert_matrices(params(2, 3, 0, 1)).V1 == ((6, 0), (1, 1))


def test_forms_are_half_symmetrizations():
    P = params(3, 5, -1, 1)
    pair = seifert_matrices(P)
    for form, v in zip(seifert_forms(P), pair):
        assert 2 * form.a == 2 * v[0][0]
        assert 2 * form.h == v[0][1] + v[1][0]
        assert 2 * form.b == 2 * v[1][1]


def test_seifert_forms():
    assert seifert_forms(params(3, 5, -1, 1)) == (BinaryQuadraticForm(15, 17, 5),
                                                  BinaryQuadraticForm(15, 7, 1))
    assert seifert_forms(params(2, 3, 0, 1)) == (BinaryQuadraticForm(6, 7, 3),
                                                 BinaryQuadraticForm(6, 1, 1))


@pytest.mark.parametrize("point, expected", [
    ((3, 5, -1, 1), False),
    ((3, 5, 2, 2), False),
    ((2, 3, 0, 1), True),
])
def test_distinguishable(point, expected):
    assert distinguishable(params(*point)) is expected


def test_oriented_pair_distinct():
    assert oriented_pair_distinct(params(2, 3, 0, 1))
    assert not oriented_pair_distinct(params(3, 5, -1, 1))
    assert not criteria_differ(params(2, 3, 0, 1))


def test_thm_main_bound():
    assert thm_main_bound(params(2, 3, 0, 1))
    assert not thm_main_bound(params(3, 5, 2, 2))
    for n in range(-10, 40):
        assert not thm_main_bound(params(3, 5, 1, n))


def test_parabola_and_alexander():
    assert parabola_alexander_trivial(params(3, 5, 2, 2))
    assert parabola_alexander_trivial(params(3, 5, 0, 0))
    assert not parabola_alexander_trivial(params(2, 3, 0, 1))
    assert alexander_coefficient(params(3, 5, 2, 2)) == 0
    assert alexander_coefficient(params(2, 3, 0, 1)) == 6
    assert alexander_coefficient(params(7, 5, 0, 0)) == 0


@pytest.mark.parametrize("point", [(2, 3, 0, 1), (3, 5, 2, 2), (3, 5, -1, 1), (5, 7, -3, 11)])
def test_alexander_polynomial(point):
    P = params(*point)
    t = sympy.Symbol("t")
    c = alexander_coefficient(P)
    assert alexander_polynomial(P) == sympy.Poly(c * t**2 + (1 - 2 * c) * t + c, t)


def test_q1_positive_definite():
    assert q1_positive_definite(params(2, 3, 0, 1))
    assert not q1_positive_definite(params(3, 5, 2, 2))


@pytest.mark.parametrize("v, u, expected", [(7, 30, 7), (26, 30, 4), (15, 30, 15), (-7, 30, 7),
                                            (0, 30, 0)])
def test_bracket_reduce(v, u, expected):
    assert bracket_reduce(v, u) == expected


def test_lemma_bounds():
    bounds = lemma_bounds(30, 7, 13)
    assert bounds.t0 == Fraction(196, 3)
    assert bounds.t1 == 11
    assert lemma_bounds(30, 13, 7) == bounds
    assert lemma_bounds(30, 0, 7).t1 <= 0


def test_lemma_bounds_congruent():
    with pytest.raises(CongruentInputs):
        lemma_bounds(30, 7, 23)
    with pytest.raises(CongruentInputs):
        lemma_bounds(30, 7, 37)


def test_lemma_data():
    P = params(3, 5, -1, 1)
    u, v0, v1, t = lemma_data(P)
    assert (u, v0, v1, t) == (30, 17, 7, 11)
    q0, q1 = seifert_forms(P)
    scale = 4 * P.p * P.q
    assert square_plus_form(u, v1, t) == BinaryQuadraticForm(*(scale * c for c in q1))
    assert square_plus_form(u, v0, t) == BinaryQuadraticForm(*(scale * c for c in q0))
    # t sits exactly on the threshold, where the forms are isomorphic
    assert not lemma_predicts_distinct(P)


def test_tau_rho():
    P = params(3, 5, 2, 2)
    assert tau(P).point == (7, 28)
    assert rho(P).point == (0, 0)
    assert rho(rho(P)) == P
    assert tau_inverse(tau(P)) == P
    assert tau(tau_inverse(P)) == P
    assert parabola_offset(tau(P)) == parabola_offset(P) == parabola_offset(rho(P))


def test_orbit_key():
    P = params(3, 5, 2, 2)
    key = orbit_key(P)
    assert key == ((0, 0), (2, 2))
    assert orbit_key(tau(P)) == key
    assert orbit_key(rho(P)) == key
    assert orbit_key(params(3, 5, 7, 28)) == key
    assert orbit_key(params(3, 5, 2, 3)) != key
    assert orbit_key_text(key) == "0,0;2,2"
    assert parse_orbit_key("0,0;2,2") == key
    with pytest.raises(InvalidParameter):
        parse_orbit_key("0,0")


def test_rational_equivalence():
    P = params(3, 5, 1, 4)
    q0, q1 = seifert_forms(P)
    (m11, m12), (m21, m22) = rational_equivalence(P)
    for x, y in [(1, 0), (0, 1), (2, -3), (5, 7)]:
        assert evaluate(q0, m11 * x + m12 * y, m21 * x + m22 * y) == q1(x, y)


def test_linear_factors():
    P = params(3, 5, 1, 0)
    q0, q1 = seifert_forms(P)
    for form, ((a, b), (c, d)) in zip((q0, q1), linear_factors(P)):
        assert form == BinaryQuadraticForm(a * c, a * d + b * c, b * d)
    with pytest.raises(InvalidParameter):
        linear_factors(params(3, 5, 1, 1))


def test_large_k_threshold():
    assert large_k_threshold(2, 3) == 4
    assert large_k_threshold(3, 5) == Fraction(51, 6)
    assert thm_large_k(params(2, 3, 6, 0))
    assert not thm_large_k(params(2, 3, 6, 1))
    assert not thm_large_k(params(2, 3, 4, 0))


def test_describe():
    text = describe(params(3, 5, -1, 1))
    assert "V0: [[15, 8], [9, 5]]" in text
    assert "isomorphic: yes" in text
    assert "types: WELL WELL" in text
    assert "distinguishable: False" in text


def test_topograph_types():
    assert topograph_types(params(3, 5, -1, 1)) == (TopographType.WELL, TopographType.WELL)
    assert topograph_types(params(2, -3, 0, -1)) == (TopographType.WELL, TopographType.WELL)
    assert topograph_types(params(3, 5, 0, -1)) == (TopographType.RIVER, TopographType.RIVER)
