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
Integral binary quadratic forms ``a*x^2 + h*x*y + b*y^2`` and the action of
GL2(Z) on them.

Everything here is exact: coefficients and values are Python integers, so no
value can overflow however far a descent or a river walk travels.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

from topoforms.errors import NonUnimodular
from topoforms.utils import is_perfect_square

__all__ = [
    "BinaryQuadraticForm",
    "UnimodularMatrix",
    "VertexTriple",
    "evaluate",
    "discriminant",
    "act",
    "negate",
    "neighbor_value",
    "is_factorizable",
    "square_plus_form",
]


def _require_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    h: int
    b: int

    def __post_init__(self):
        _require_int("a", self.a)
        _require_int("h", self.h)
        _require_int("b", self.b)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.h
        yield self.b

    def __repr__(self):
        return f"BinaryQuadraticForm({self.a}, {self.h}, {self.b})"

    def __str__(self):
        return f"{self.a}x^2 + {self.h}xy + {self.b}y^2"

    def __call__(self, x: int, y: int) -> int:
        return evaluate(self, x, y)

    def __neg__(self) -> BinaryQuadraticForm:
        return negate(self)

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return self.a, self.h, self.b

    def discriminant(self) -> int:
        return discriminant(self)

    def is_zero(self) -> bool:
        return self.a == 0 and self.h == 0 and self.b == 0

    def act(self, matrix: MatrixLike) -> BinaryQuadraticForm:
        return act(self, matrix)


@dataclass(frozen=True)
class UnimodularMatrix:
    """
    A 2x2 integer matrix of determinant +1 or -1.

    Construction raises NonUnimodular for any other determinant.
    """
    p11: int
    p12: int
    p21: int
    p22: int

    def __post_init__(self):
        for name in ("p11", "p12", "p21", "p22"):
            _require_int(name, getattr(self, name))
        if self.determinant() not in (1, -1):
            raise NonUnimodular(f"determinant of {self.rows} is {self.determinant()}, not +-1")

    @classmethod
    def identity(cls) -> UnimodularMatrix:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> UnimodularMatrix:
        (p11, p12), (p21, p22) = rows
        return cls(p11, p12, p21, p22)

    @property
    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.p11, self.p12), (self.p21, self.p22)

    def determinant(self) -> int:
        return self.p11 * self.p22 - self.p12 * self.p21

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        return self.p11 * x + self.p12 * y, self.p21 * x + self.p22 * y

    def transpose(self) -> UnimodularMatrix:
        return UnimodularMatrix(self.p11, self.p21, self.p12, self.p22)

    def inverse(self) -> UnimodularMatrix:
        d = self.determinant()
        # d is +-1, so dividing by it is multiplying by it
        return UnimodularMatrix(self.p22 * d, -self.p12 * d, -self.p21 * d, self.p11 * d)

    def __matmul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        return UnimodularMatrix(self.p11 * other.p11 + self.p12 * other.p21,
                                self.p11 * other.p12 + self.p12 * other.p22,
                                self.p21 * other.p11 + self.p22 * other.p21,
                                self.p21 * other.p12 + self.p22 * other.p22)

    def __repr__(self):
        return f"UnimodularMatrix({[list(r) for r in self.rows]})"


MatrixLike = Union[UnimodularMatrix, Sequence[Sequence[int]]]


def _as_unimodular(matrix: MatrixLike) -> UnimodularMatrix:
    if isinstance(matrix, UnimodularMatrix):
        return matrix
    return UnimodularMatrix.from_rows(matrix)


@dataclass(frozen=True)
class VertexTriple:
    """
    The three values of a form around a topograph vertex, i.e. on a superbase
    (v1, v2, -v1-v2).

    For the marked base v1=(1,0), v2=(0,1) the triple is (a, b, a+h+b), which
    determines the form.
    """
    qa: int
    qb: int
    qc: int

    @classmethod
    def from_form(cls, form: BinaryQuadraticForm) -> VertexTriple:
        return cls(form.a, form.b, form.a + form.h + form.b)

    @classmethod
    def of(cls, values: Sequence[int]) -> VertexTriple:
        qa, qb, qc = values
        return cls(qa, qb, qc)

    def to_form(self) -> BinaryQuadraticForm:
        return BinaryQuadraticForm(self.qa, self.qc - self.qa - self.qb, self.qb)

    def __iter__(self) -> Iterator[int]:
        yield self.qa
        yield self.qb
        yield self.qc

    @property
    def values(self) -> Tuple[int, int, int]:
        return self.qa, self.qb, self.qc

    def sorted(self) -> VertexTriple:
        return VertexTriple.of(sorted(self.values))

    def negated(self) -> VertexTriple:
        return VertexTriple(-self.qa, -self.qb, -self.qc)


def evaluate(form: BinaryQuadraticForm, x: int, y: int) -> int:
    return form.a * x * x + form.h * x * y + form.b * y * y


def discriminant(form: BinaryQuadraticForm) -> int:
    return form.h * form.h - 4 * form.a * form.b


def act(form: BinaryQuadraticForm, matrix: MatrixLike) -> BinaryQuadraticForm:
    """
    The form ``v -> form(P v)``.

    With this convention act(act(F, P1), P2) == act(F, P1 @ P2).

    :raises NonUnimodular: when ``matrix`` is given as rows with determinant other than +-1
    """
    p = _as_unimodular(matrix)
    a, h, b = form.a, form.h, form.b
    return BinaryQuadraticForm(
        evaluate(form, p.p11, p.p21),
        2 * a * p.p11 * p.p12 + h * (p.p11 * p.p22 + p.p12 * p.p21) + 2 * b * p.p21 * p.p22,
        evaluate(form, p.p12, p.p22))


def negate(form: BinaryQuadraticForm) -> BinaryQuadraticForm:
    return BinaryQuadraticForm(-form.a, -form.h, -form.b)


def neighbor_value(qa: int, qb: int, c_opposite: int) -> int:
    """
    The fourth value around an edge.

    Q(v1+v2) + Q(v1-v2) = 2(Q(v1) + Q(v2)), so the region across the edge
    between qa and qb, opposite c_opposite, carries 2(qa+qb) - c_opposite.
    """
    return 2 * (qa + qb) - c_opposite


def is_factorizable(form: BinaryQuadraticForm) -> bool:
    """True when the form splits into rational linear factors (square discriminant)."""
    return is_perfect_square(discriminant(form))


def square_plus_form(u: int, v: int, t: int) -> BinaryQuadraticForm:
    """The form (u x + v y)^2 + t y^2."""
    return BinaryQuadraticForm(u * u, 2 * u * v, v * v + t)
