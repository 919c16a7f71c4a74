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
A complete GL2(Z)-isomorphism invariant of integral binary quadratic forms,
read off the form's topograph.

Starting at the vertex of the marked superbase ((1,0), (0,1), (1,1)) the walk
either descends to a well (definite forms), follows the river until it repeats
(indefinite forms not representing 0), or reaches a lake and reads the values
adjacent to it (forms representing 0).  The values found there, put in a
canonical order, form the invariant: two forms have the same invariant exactly
when they are isomorphic over Z.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from topoforms.config import get_config
from topoforms.errors import (EqualValues, InvalidParameter, NotAllPositive, PeriodCapExceeded,
                              TopographError)
from topoforms.forms import BinaryQuadraticForm, VertexTriple, discriminant
from topoforms.utils import is_perfect_square, sorted_tuple

_log = logging.getLogger(__name__)

__all__ = [
    "TopographType",
    "TopographInvariant",
    "FormClass",
    "RiverState",
    "RiverOutcome",
    "descend",
    "is_well",
    "trace_river",
    "reduce_lake_adjacent",
    "invariant",
    "isomorphic",
    "negate_invariant",
    "classify_by_discriminant",
]


class TopographType(Enum):
    WELL = "WELL"
    RIVER = "RIVER"
    LAKE = "LAKE"
    WEIR = "WEIR"
    LAKEPAIR = "LAKEPAIR"
    ZERO = "ZERO"

    @property
    def represents_zero(self) -> bool:
        return self in (TopographType.LAKE, TopographType.WEIR, TopographType.LAKEPAIR,
                        TopographType.ZERO)


Pair = Tuple[int, int]


@dataclass(frozen=True)
class TopographInvariant:
    """
    Tagged invariant.  ``values`` holds

    * WELL, RIVER: an ascending triple,
    * LAKE, WEIR: a single value,
    * LAKEPAIR: two ascending pairs in lexicographic order,
    * ZERO: nothing.
    """
    kind: TopographType
    values: tuple = ()

    def __post_init__(self):
        kind, values = self.kind, self.values
        if kind in (TopographType.WELL, TopographType.RIVER):
            if len(values) != 3 or tuple(sorted(values)) != values:
                raise InvalidParameter(f"{kind.value} needs an ascending triple, got {values}")
            if kind is TopographType.WELL and not is_well(values):
                raise InvalidParameter(f"{values} violates the well condition")
            if kind is TopographType.RIVER and not (values[0] < 0 < values[2] and 0 not in values):
                raise InvalidParameter(f"river triple {values} needs both signs and no zero")
        elif kind is TopographType.LAKE:
            if len(values) != 1 or values[0] == 0:
                raise InvalidParameter(f"LAKE needs one nonzero value, got {values}")
        elif kind is TopographType.WEIR:
            if len(values) != 1 or values[0] <= 0:
                raise InvalidParameter(f"WEIR needs one positive value, got {values}")
        elif kind is TopographType.LAKEPAIR:
            if len(values) != 2 or any(len(p) != 2 or p[0] >= p[1] for p in values) \
                    or values[0] > values[1]:
                raise InvalidParameter(f"LAKEPAIR needs two sorted pairs, got {values}")
        elif values:
            raise InvalidParameter("ZERO carries no values")

    @classmethod
    def well(cls, triple: Sequence[int]) -> TopographInvariant:
        return cls(TopographType.WELL, sorted_tuple(triple))

    @classmethod
    def river(cls, triple: Sequence[int]) -> TopographInvariant:
        return cls(TopographType.RIVER, sorted_tuple(triple))

    @classmethod
    def lake(cls, value: int) -> TopographInvariant:
        return cls(TopographType.LAKE, (value, ))

    @classmethod
    def weir(cls, value: int) -> TopographInvariant:
        return cls(TopographType.WEIR, (value, ))

    @classmethod
    def lake_pair(cls, first: Sequence[int], second: Sequence[int]) -> TopographInvariant:
        pairs = sorted([sorted_tuple(first), sorted_tuple(second)])
        return cls(TopographType.LAKEPAIR, tuple(pairs))

    @classmethod
    def zero(cls) -> TopographInvariant:
        return cls(TopographType.ZERO)

    def serialize(self) -> str:
        """Stable text record, e.g. ``WELL[2,3,4]`` or ``LAKEPAIR[[-9,2],[-5,6]]``."""
        if self.kind is TopographType.ZERO:
            return "ZERO"
        if self.kind is TopographType.LAKEPAIR:
            body = ",".join(f"[{u},{v}]" for u, v in self.values)
        else:
            body = ",".join(str(v) for v in self.values)
        return f"{self.kind.value}[{body}]"

    __str__ = serialize

    @classmethod
    def parse(cls, text: str) -> TopographInvariant:
        text = text.strip()
        if text == "ZERO":
            return cls.zero()
        m = re.fullmatch(r"([A-Z]+)\[(.*)\]", text)
        if m is None:
            raise InvalidParameter(f"not an invariant record: {text!r}")
        try:
            kind = TopographType(m.group(1))
        except ValueError as e:
            raise InvalidParameter(f"unknown invariant tag in {text!r}") from e
        if kind is TopographType.LAKEPAIR:
            pairs = re.findall(r"\[(-?\d+),(-?\d+)\]", m.group(2))
            if len(pairs) != 2:
                raise InvalidParameter(f"malformed lake pair: {text!r}")
            return cls(kind, tuple((int(u), int(v)) for u, v in pairs))
        try:
            values = tuple(int(v) for v in m.group(2).split(","))
        except ValueError as e:
            raise InvalidParameter(f"malformed invariant values in {text!r}") from e
        return cls(kind, values)

    def to_listing(self) -> str:
        """The reference listing's output style; ZERO is written ``{"LAKE", {0}}``."""
        if self.kind is TopographType.ZERO:
            return '{"LAKE", {0}}'
        if self.kind is TopographType.LAKEPAIR:
            body = ", ".join(f"{{{u}, {v}}}" for u, v in self.values)
            return f'{{"LAKE-PAIR", {{{body}}}}}'
        values = self.values
        if self.kind is TopographType.WELL and values[0] < 0:
            # negate-descend-negate leaves negative wells in descending order
            values = tuple(reversed(values))
        body = ", ".join(str(v) for v in values)
        return f'{{"{self.kind.value}", {{{body}}}}}'


class FormClass(Enum):
    POSITIVE_DEFINITE = "positive definite"
    NEGATIVE_DEFINITE = "negative definite"
    ZERO = "zero"
    SEMIDEFINITE = "semidefinite"
    INDEFINITE_IRRATIONAL = "indefinite, non-square discriminant"
    INDEFINITE_RATIONAL = "indefinite, square discriminant"

    @property
    def expected_types(self) -> FrozenSet[TopographType]:
        return _EXPECTED_TYPES[self]


_EXPECTED_TYPES: Dict[FormClass, FrozenSet[TopographType]] = {
    FormClass.POSITIVE_DEFINITE: frozenset({TopographType.WELL}),
    FormClass.NEGATIVE_DEFINITE: frozenset({TopographType.WELL}),
    FormClass.ZERO: frozenset({TopographType.ZERO}),
    FormClass.SEMIDEFINITE: frozenset({TopographType.LAKE}),
    FormClass.INDEFINITE_IRRATIONAL: frozenset({TopographType.RIVER}),
    FormClass.INDEFINITE_RATIONAL: frozenset({TopographType.WEIR, TopographType.LAKEPAIR}),
}


@dataclass(frozen=True)
class RiverState:
    """
    Position on a river: the newest region value plus the most recent values
    on the positive and negative banks.  The three are the regions around the
    current vertex.
    """
    frontier: int
    positive: int
    negative: int
    step: int = 0

    @property
    def key(self) -> Tuple[int, int, int]:
        return self.frontier, self.positive, self.negative

    @property
    def triple(self) -> Tuple[int, int, int]:
        return sorted_tuple(self.key)

    def next(self) -> RiverState:
        """Cross the river edge next to the frontier region."""
        if self.frontier > 0:
            value = 2 * (self.negative + self.frontier) - self.positive
            return RiverState(value, self.frontier, self.negative, self.step + 1)
        value = 2 * (self.positive + self.frontier) - self.negative
        return RiverState(value, self.positive, self.frontier, self.step + 1)


@dataclass(frozen=True)
class RiverOutcome:
    periodic: bool
    # the canonical triple when periodic, otherwise the vertex triple at the lake
    triple: Tuple[int, int, int]
    steps: int
    period: int = 0

    @property
    def reaches_lake(self) -> bool:
        return not self.periodic


def is_well(triple: Sequence[int]) -> bool:
    m1, m2, m3 = sorted(triple)
    if m1 > 0:
        return m3 <= m1 + m2
    if m3 < 0:
        return m1 >= m2 + m3
    return False


def descend(triple: Sequence[int]) -> VertexTriple:
    """
    Walk downhill from an all-positive vertex.

    Each step replaces the largest value m3 by 2(m1+m2) - m3, which is smaller,
    so the walk ends: either at a well (m3 <= m1 + m2) or at the first vertex
    carrying a value <= 0, where a river or a lake has been reached.

    :return: the sorted triple where the descent stopped
    :raises NotAllPositive: if a value of the starting triple is <= 0
    """
    values = sorted(triple)
    if values[0] <= 0:
        raise NotAllPositive(f"descent needs positive values, got {tuple(triple)}")
    steps = 0
    while values[0] > 0 and values[2] > values[0] + values[1]:
        m1, m2, m3 = values
        values = sorted((m1, m2, 2 * (m1 + m2) - m3))
        steps += 1
    _log.debug(f"descent from {tuple(triple)} stopped at {tuple(values)} after {steps} steps")
    return VertexTriple.of(values)


def _step_cap(step_cap: Optional[int]) -> int:
    return step_cap if step_cap is not None else get_config().river_step_cap


def _walk(state: RiverState, cap: int) -> RiverOutcome:
    start = state.key
    seen: Dict[Tuple[int, int, int], int] = {}
    states: List[RiverState] = []
    while True:
        if state.frontier == 0:
            return RiverOutcome(False, state.triple, state.step)
        first = seen.get(state.key)
        if first is not None:
            period = states[first:]
            canonical = min(s.triple for s in period)
            _log.debug(f"river from {start} has period {len(period)}")
            return RiverOutcome(True, canonical, state.step, len(period))
        if len(states) >= cap:
            raise PeriodCapExceeded(cap, start)
        seen[state.key] = len(states)
        states.append(state)
        state = state.next()


def trace_river(triple: Sequence[int], step_cap: Optional[int] = None) -> RiverOutcome:
    """
    Follow the river through a vertex whose values have both signs.

    Periodicity is detected when a full RiverState recurs; the canonical
    representative is then the lexicographically smallest sorted vertex triple
    over one period.

    :raises PeriodCapExceeded: after ``step_cap`` steps without recurrence or lake
    """
    low, middle, high = sorted(triple)
    if not low < 0 < high:
        raise InvalidParameter(f"{tuple(triple)} is not on a river")
    return _walk(RiverState(middle, high, low), _step_cap(step_cap))


def reduce_lake_adjacent(a: int, b: int) -> Pair:
    """
    Canonical pair of consecutive values along the boundary of a lake.

    The values next to a lake form an arithmetic progression with step b - a, so
    they are all congruent to a modulo b - a; the canonical pair straddles zero:
    a' <= 0 < b' with b' - a' == b - a.  a' == 0 signals a weir.

    :raises EqualValues: when a == b (a lake whose neighbours are all equal)
    """
    if a == b:
        raise EqualValues(f"lake-adjacent values are equal ({a})")
    if a > b:
        a, b = b, a
    step = b - a
    low = (a - 1) % step + 1 - step
    return low, low + step


def _lake_invariant(triple: Sequence[int], cap: int) -> TopographInvariant:
    rest = sorted(triple)
    rest.remove(0)
    a, b = rest
    if a == b:
        return TopographInvariant.lake(a)
    a, b = reduce_lake_adjacent(a, b)
    if a == 0:
        return TopographInvariant.weir(b)
    outcome = _walk(RiverState(2 * (a + b), b, a), cap)
    if outcome.periodic:
        raise TopographError(f"river leaving the lake at ({a}, {b}) never reached a second lake")
    u, v = (x for x in outcome.triple if x != 0)
    return TopographInvariant.lake_pair((a, b), (u, v))


def invariant(form: BinaryQuadraticForm, step_cap: Optional[int] = None) -> TopographInvariant:
    """
    The complete invariant: invariant(F0) == invariant(F1) iff F0 and F1 are
    GL2(Z)-isomorphic.

    :raises PeriodCapExceeded: propagated from the river walk
    """
    if form.is_zero():
        return TopographInvariant.zero()
    cap = _step_cap(step_cap)
    current = sorted(VertexTriple.from_form(form).values)

    if current[0] > 0:
        current = list(descend(current))
        if is_well(current):
            return TopographInvariant.well(current)
    elif current[2] < 0:
        current = sorted(descend([-v for v in current]).negated())
        if is_well(current):
            return TopographInvariant.well(current)

    if 0 not in current:
        outcome = trace_river(current, cap)
        if outcome.periodic:
            return TopographInvariant.river(outcome.triple)
        current = list(outcome.triple)
    return _lake_invariant(current, cap)


def isomorphic(f0: BinaryQuadraticForm, f1: BinaryQuadraticForm,
               step_cap: Optional[int] = None) -> bool:
    return invariant(f0, step_cap) == invariant(f1, step_cap)


def negate_invariant(inv: TopographInvariant) -> TopographInvariant:
    """The invariant of -F given the invariant of F."""
    kind = inv.kind
    if kind is TopographType.WELL:
        return TopographInvariant.well([-v for v in inv.values])
    if kind is TopographType.LAKE:
        return TopographInvariant.lake(-inv.values[0])
    if kind is TopographType.LAKEPAIR:
        first, second = inv.values
        return TopographInvariant.lake_pair([-v for v in first], [-v for v in second])
    if kind is TopographType.RIVER:
        # the smallest triple of -F is not the negated smallest triple of F
        return invariant(VertexTriple.of(inv.values).negated().to_form())
    return inv


def classify_by_discriminant(form: BinaryQuadraticForm) -> FormClass:
    d = discriminant(form)
    if form.is_zero():
        return FormClass.ZERO
    if d < 0:
        # a == 0 forces d >= 0, so the sign of a decides
        return FormClass.POSITIVE_DEFINITE if form.a > 0 else FormClass.NEGATIVE_DEFINITE
    if d == 0:
        return FormClass.SEMIDEFINITE
    if is_perfect_square(d):
        return FormClass.INDEFINITE_RATIONAL
    return FormClass.INDEFINITE_IRRATIONAL
