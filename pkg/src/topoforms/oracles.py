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
Independent isomorphism oracles used to cross-check the topograph invariant.

* gauss_reduce_definite / gauss_class_key: classical reduction of definite forms.
* bounded_isomorphism_search: positive certificates by searching a box of matrices.
* representation_census: counting representations of a value inside a box.
"""
from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from topoforms.errors import InvalidParameter, NotDefinite
from topoforms.forms import (BinaryQuadraticForm, UnimodularMatrix, act, discriminant, evaluate,
                             negate)
from topoforms.utils import box

_log = logging.getLogger(__name__)


def _reduce_positive(a: int, h: int, b: int) -> Tuple[int, int, int]:
    while True:
        if not -a < h <= a:
            # x -> x + m y brings h into (-a, a]
            m = (a - h) // (2 * a)
            a, h, b = a, h + 2 * a * m, a * m * m + h * m + b
        if a > b:
            # (x, y) -> (-y, x)
            a, h, b = b, -h, a
            continue
        if a == b and h < 0:
            h = -h
        return a, h, b


def gauss_reduce_definite(form: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """
    The reduced representative of a definite form under proper equivalence.

    For positive definite forms the result satisfies |h| <= a <= b with h >= 0
    whenever |h| == a or a == b.  Negative definite forms are reduced through
    their negation and negated back.

    :raises NotDefinite: if the discriminant is not negative
    """
    if discriminant(form) >= 0:
        raise NotDefinite(f"{form!r} has discriminant {discriminant(form)} >= 0")
    if form.a > 0:
        return BinaryQuadraticForm(*_reduce_positive(form.a, form.h, form.b))
    return negate(BinaryQuadraticForm(*_reduce_positive(-form.a, -form.h, -form.b)))


def gauss_class_key(form: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """
    GL2(Z) class representative of a definite form.

    (x, y) -> (x, -y) maps a reduced (a, h, b) to the reduced (a, -h, b), so the
    improper class is told apart from the proper one only by the sign of h.
    """
    reduced = gauss_reduce_definite(form)
    return BinaryQuadraticForm(reduced.a, abs(reduced.h), reduced.b)


def bounded_isomorphism_search(f0: BinaryQuadraticForm, f1: BinaryQuadraticForm,
                               bound: int) -> Optional[UnimodularMatrix]:
    """
    Look for a unimodular P with entries in [-bound, bound] and act(f0, P) == f1.

    The columns of P must represent f1.a and f1.b under f0, so only those
    columns are paired up.  Returning None does not certify non-isomorphism.
    """
    if bound < 1:
        raise InvalidParameter("bound must be >= 1")
    if discriminant(f0) != discriminant(f1):
        return None
    if f0 == f1:
        return UnimodularMatrix.identity()

    first: List[Tuple[int, int]] = []
    second: List[Tuple[int, int]] = []
    for x, y in box(bound):
        value = evaluate(f0, x, y)
        if value == f1.a:
            first.append((x, y))
        if value == f1.b:
            second.append((x, y))

    _log.debug(f"search {f0!r} -> {f1!r}: {len(first)} x {len(second)} candidate columns")
    for p11, p21 in first:
        for p12, p22 in second:
            if p11 * p22 - p12 * p21 not in (1, -1):
                continue
            candidate = UnimodularMatrix(p11, p12, p21, p22)
            if act(f0, candidate) == f1:
                return candidate
    return None


def representation_census(form: BinaryQuadraticForm, target: int, coord_bound: int) -> int:
    """Number of (x, y) with |x|, |y| <= coord_bound and form(x, y) == target."""
    if coord_bound < 1:
        raise InvalidParameter("coord_bound must be >= 1")
    return sum(1 for x, y in box(coord_bound) if evaluate(form, x, y) == target)
