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
from itertools import product
from math import isqrt
from typing import Iterable, Iterator, Tuple, Union

Rational = Union[int, Fraction]


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def is_perfect_square(n: int) -> bool:
    """ True for 0, 1, 4, 9, ...; False for negative numbers. """
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def box(bound: int) -> Iterator[Tuple[int, int]]:
    """ All integer pairs (x, y) with |x|, |y| <= bound, x-major order. """
    span = range(-bound, bound + 1)
    return product(span, span)


def sorted_tuple(values: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(values))


def format_rational(value: Rational) -> str:
    """ Exact text for an integer or Fraction: ``7``, ``-3``, ``196/3``. """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
