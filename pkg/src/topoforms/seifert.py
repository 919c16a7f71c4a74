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
The four-parameter family of Seifert surfaces S_i(p, q, k, n).

Each parameter point gives two Seifert matrices V0, V1 whose symmetrizations
are twice the integral forms Q0, Q1 returned by ``seifert_forms``.  The surfaces
can only be isotopic when Q0 and Q1 are isomorphic over Z, so comparing their
topograph invariants decides the "distinguishable" colouring of a (k, n)
parameter grid.  The theorem predicates here give sufficient conditions for
that colouring, and tau/rho are the affine symmetries of the (k, n)-plane.

All divisions are carried out with ``fractions.Fraction``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Tuple

import sympy

from topoforms.errors import (CongruentInputs, InvalidParameter, NotCoprime, ZeroParameter)
from topoforms.forms import BinaryQuadraticForm, negate
from topoforms.topograph import TopographType, invariant
from topoforms.utils import format_rational, sign

_log = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]
OrbitKey = Tuple[Tuple[int, int], Tuple[int, int]]


def normalize_params(p: int, q: int) -> Tuple[int, int, bool]:
    """
    :return: (|p|, |q|, mirrored) where mirrored is True when exactly one of p, q
        is negative
    :raises ZeroParameter: if p or q is 0
    :raises NotCoprime: if gcd(p, q) != 1
    """
    if p == 0 or q == 0:
        raise ZeroParameter(f"p and q must be nonzero, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    return abs(p), abs(q), (p < 0) != (q < 0)


def compute_rs(p: int, q: int) -> Tuple[int, int]:
    """(r, s) with ps - qr = 1 and 1 <= s < q."""
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    if p < 2 or q < 2:
        raise InvalidParameter(f"p and q must both exceed 1, got ({p}, {q})")
    s = pow(p, -1, q)
    return (p * s - 1) // q, s


@dataclass(frozen=True)
class SeifertParams:
    p: int
    q: int
    k: int
    n: int
    r: int
    s: int
    mirrored: bool = False

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InvalidParameter(f"normalized p, q must be positive, got ({self.p}, {self.q})")
        if self.p * self.s - self.q * self.r != 1:
            raise InvalidParameter(f"ps - qr must be 1 for (p,q,r,s) = "
                                   f"({self.p},{self.q},{self.r},{self.s})")

    @classmethod
    def build(cls, p: int, q: int, k: int, n: int, r: Optional[int] = None,
              s: Optional[int] = None) -> SeifertParams:
        """
        Normalize raw parameters.

        (p, q, k, n) becomes (|p|, |q|, sign(p) k, sign(p) sign(q) n).  The forms
        of the raw point are isomorphic to those of the normalized point, negated
        when ``mirrored`` is set.
        """
        np_, nq, mirrored = normalize_params(p, q)
        k, n = sign(p) * k, sign(p) * sign(q) * n
        if r is None or s is None:
            # at p = 1, (0, 1) solves ps - qr = 1 for every q
            r, s = (0, 1) if np_ == 1 else compute_rs(np_, nq)
        return cls(np_, nq, k, n, r, s, mirrored)

    @property
    def point(self) -> Tuple[int, int]:
        return self.k, self.n

    def at(self, k: int, n: int) -> SeifertParams:
        return replace(self, k=k, n=n)


class SeifertMatrixPair(NamedTuple):
    V0: Matrix2
    V1: Matrix2


class LemmaBounds(NamedTuple):
    t0: Fraction
    t1: Fraction


class LemmaData(NamedTuple):
    u: int
    v0: int
    v1: int
    t: int


def seifert_matrices(params: SeifertParams) -> SeifertMatrixPair:
    p, q, k, n, r, s = params.p, params.q, params.k, params.n, params.r, params.s
    v0 = ((p * q, q * r - k * p), (p * s - k * p, r * s - 2 * k * r + n))
    v1 = ((p * q, -k * p), (1 - k * p, n))
    return SeifertMatrixPair(v0, v1)


def seifert_forms(params: SeifertParams) -> Tuple[BinaryQuadraticForm, BinaryQuadraticForm]:
    """Half of the symmetrized Seifert forms V0 + V0^T and V1 + V1^T."""
    p, q, k, n, r, s = params.p, params.q, params.k, params.n, params.r, params.s
    q0 = BinaryQuadraticForm(p * q, p * s + q * r - 2 * k * p, r * s - 2 * k * r + n)
    q1 = BinaryQuadraticForm(p * q, 1 - 2 * k * p, n)
    return q0, q1


def oriented_forms(params: SeifertParams) -> Tuple[BinaryQuadraticForm, BinaryQuadraticForm]:
    """The forms of the raw, possibly mirrored, parameter point."""
    q0, q1 = seifert_forms(params)
    if params.mirrored:
        return negate(q0), negate(q1)
    return q0, q1


def distinguishable(params: SeifertParams, step_cap: Optional[int] = None) -> bool:
    q0, q1 = oriented_forms(params)
    return invariant(q0, step_cap) != invariant(q1, step_cap)


def oriented_pair_distinct(params: SeifertParams, step_cap: Optional[int] = None) -> bool:
    """Q0 is isomorphic neither to Q1 nor to -Q1."""
    q0, q1 = oriented_forms(params)
    i0 = invariant(q0, step_cap)
    return i0 != invariant(q1, step_cap) and i0 != invariant(negate(q1), step_cap)


def criteria_differ(params: SeifertParams, step_cap: Optional[int] = None) -> bool:
    return distinguishable(params, step_cap) != oriented_pair_distinct(params, step_cap)


def topograph_types(params: SeifertParams,
                    step_cap: Optional[int] = None) -> Tuple[TopographType, TopographType]:
    q0, q1 = oriented_forms(params)
    return invariant(q0, step_cap).kind, invariant(q1, step_cap).kind


def _require_bound_range(params: SeifertParams):
    if params.p < 2 or params.q < 2:
        raise InvalidParameter(f"the bounds need p, q > 1, got ({params.p}, {params.q})")


def _on_vertical_line(params: SeifertParams) -> bool:
    return (2 * params.k * params.p - 1) % params.q == 0


def parabola_offset(params: SeifertParams) -> Fraction:
    """n - k(pk-1)/q, constant along tau- and rho-orbits."""
    p, q, k = params.p, params.q, params.k
    return params.n - Fraction(k * (p * k - 1), q)


def thm_main_bound(params: SeifertParams) -> bool:
    """
    True when 2kp is not 1 mod q and n >= k(pk-1)/q + pq/12 - 1/6 + 1/(2pq), which
    guarantees that Q0 is isomorphic neither to Q1 nor to -Q1.
    """
    p, q = params.p, params.q
    _require_bound_range(params)
    if _on_vertical_line(params):
        return False
    bound = Fraction(p * q, 12) - Fraction(1, 6) + Fraction(1, 2 * p * q)
    return parabola_offset(params) >= bound


def thm_weakened_bound(params: SeifertParams) -> bool:
    """For k == 0 or q <= 3 positive definiteness of Q1 suffices."""
    _require_bound_range(params)
    if params.k != 0 and params.q > 3:
        return False
    return not _on_vertical_line(params) and q1_positive_definite(params)


def q1_positive_definite(params: SeifertParams) -> bool:
    p, q, k, n = params.p, params.q, params.k, params.n
    return q * n > k * (p * k - 1)


def parabola_alexander_trivial(params: SeifertParams) -> bool:
    """On the parabola qn = k(pk-1) the Alexander polynomial is trivial."""
    p, q, k, n = params.p, params.q, params.k, params.n
    return q * n == k * (p * k - 1)


def alexander_coefficient(params: SeifertParams) -> int:
    """C with Alexander polynomial C t^2 + (1-2C) t + C."""
    p, q, k, n = params.p, params.q, params.k, params.n
    return p * (n * q - k * (p * k - 1))


def alexander_polynomial(params: SeifertParams) -> sympy.Poly:
    """det(t V1 - V1^T) expanded symbolically."""
    t = sympy.Symbol("t")
    v1 = sympy.Matrix(seifert_matrices(params).V1)
    return sympy.Poly(sympy.expand((t * v1 - v1.T).det()), t)


def large_k_threshold(p: int, q: int) -> Fraction:
    """k0 = max((q(1+p^2)+1)/(2p), (q^2+2)/(2p)); beyond it the n = 0 forms differ."""
    return max(Fraction(q * (1 + p * p) + 1, 2 * p), Fraction(q * q + 2, 2 * p))


def thm_large_k(params: SeifertParams) -> bool:
    _require_bound_range(params)
    if params.n != 0 or _on_vertical_line(params):
        return False
    return abs(params.k) > large_k_threshold(params.p, params.q)


def bracket_reduce(v: int, u: int) -> int:
    """The w with 0 <= w <= u/2 and w = +-v (mod u)."""
    if u < 1:
        raise InvalidParameter(f"modulus must be positive, got {u}")
    w = v % u
    return min(w, u - w)


def lemma_bounds(u: int, v0: int, v1: int) -> LemmaBounds:
    """
    Thresholds above which (ux + v0 y)^2 + t y^2 and (ux + v1 y)^2 + t y^2 are not
    isomorphic.

    t0 = (u/2 - 1)^2 / 3 is the uniform bound; t1 = max over c >= 2 of
    ([v0]^2 - [c v1]^2) / (c^2 - 1), with the inputs ordered so that [v0] < [v1].
    [c v1] only depends on c mod u while c^2 - 1 grows, so c in [2, u + 1] covers
    every competitive term.

    :raises CongruentInputs: if v0 = +-v1 (mod u)
    """
    if u < 1:
        raise InvalidParameter(f"u must be positive, got {u}")
    b0, b1 = bracket_reduce(v0, u), bracket_reduce(v1, u)
    if b0 == b1:
        raise CongruentInputs(f"{v0} = +-{v1} (mod {u})")
    if b0 > b1:
        v0, v1, b0, b1 = v1, v0, b1, b0
    t0 = Fraction(u - 2, 2)**2 / 3
    t1 = max(Fraction(b0 * b0 - bracket_reduce(c * v1, u)**2, c * c - 1)
             for c in range(2, u + 2))
    return LemmaBounds(t0, t1)


def lemma_data(params: SeifertParams) -> LemmaData:
    """
    (u, v0, v1, t) with 4pq Q_i isomorphic to (u x + v_i y)^2 + t y^2.
    """
    p, q, k, n, r = params.p, params.q, params.k, params.n, params.r
    return LemmaData(2 * p * q, 1 - 2 * k * p + 2 * q * r, 1 - 2 * k * p,
                     4 * p * q * n - (2 * k * p - 1)**2)


def lemma_predicts_distinct(params: SeifertParams) -> bool:
    u, v0, v1, t = lemma_data(params)
    try:
        bounds = lemma_bounds(u, v0, v1)
    except CongruentInputs:
        return False
    return t > max(bounds.t1, 0)


def tau(params: SeifertParams) -> SeifertParams:
    p, q, k, n = params.p, params.q, params.k, params.n
    return params.at(k + q, n + 2 * k * p + p * q - 1)


def tau_inverse(params: SeifertParams) -> SeifertParams:
    p, q, k, n = params.p, params.q, params.k, params.n
    return params.at(k - q, n - 2 * (k - q) * p - p * q + 1)


def rho(params: SeifertParams) -> SeifertParams:
    """Swaps the isomorphism classes of Q0 and Q1; an involution."""
    k, n, r, s = params.k, params.n, params.r, params.s
    return params.at(s - k, n - 2 * k * r + r * s)


def orbit_key(params: SeifertParams) -> OrbitKey:
    """
    Canonical key of the <tau, rho>-orbit of (k, n).

    tau moves k by q and keeps the parabola offset, so (k mod q, offset) pins the
    tau-orbit; it is stored as the n of the orbit point with k in [0, q).  rho
    maps k to s - k, and the key is the sorted pair for k and s - k.
    """
    p, q = params.p, params.q
    offset = parabola_offset(params)
    entries = []
    for k in (params.k, params.s - params.k):
        residue = k % q
        n = offset + Fraction(residue * (p * residue - 1), q)
        entries.append((residue, int(n)))
    first, second = sorted(entries)
    return first, second


def orbit_key_text(key: OrbitKey) -> str:
    """``0,5;2,3`` style serialization of an orbit key."""
    return ";".join(f"{k},{n}" for k, n in key)


def parse_orbit_key(text: str) -> OrbitKey:
    try:
        first, second = (tuple(int(v) for v in part.split(",")) for part in text.split(";"))
    except ValueError as e:
        raise InvalidParameter(f"malformed orbit key {text!r}") from e
    if len(first) != 2 or len(second) != 2:
        raise InvalidParameter(f"malformed orbit key {text!r}")
    return (first[0], first[1]), (second[0], second[1])


def rational_equivalence(params: SeifertParams) -> Tuple[Tuple[Fraction, Fraction], ...]:
    """
    The rational matrix M = [[1, -r/p], [0, 1]] with Q0(M v) = Q1(v).

    Q0 and Q1 are therefore equivalent over Q, so they share definiteness and
    whether they represent zero: their topograph types agree.
    """
    return (Fraction(1), Fraction(-params.r, params.p)), (Fraction(0), Fraction(1))


def linear_factors(params: SeifertParams) -> Tuple[Matrix2, Matrix2]:
    """
    For n == 0 the rows (a, b), (c, d) with Q = (ax + by)(cx + dy):
    Q0 = (px + ry)(qx + (s-2k)y) and Q1 = x (pq x + (1-2kp) y).
    """
    if params.n != 0:
        raise InvalidParameter(f"forms factor over Z along n = 0, got n = {params.n}")
    p, q, k, r, s = params.p, params.q, params.k, params.r, params.s
    return ((p, r), (q, s - 2 * k)), ((1, 0), (p * q, 1 - 2 * k * p))


def describe(params: SeifertParams, step_cap: Optional[int] = None) -> str:
    """Multi-line report used by the ``seifert`` command."""
    pair = seifert_matrices(params)
    q0, q1 = oriented_forms(params)
    i0, i1 = invariant(q0, step_cap), invariant(q1, step_cap)
    lines = [
        f"params: p={params.p} q={params.q} k={params.k} n={params.n} "
        f"r={params.r} s={params.s}" + (" (mirrored)" if params.mirrored else ""),
        f"V0: {[list(row) for row in pair.V0]}",
        f"V1: {[list(row) for row in pair.V1]}",
        f"Q0: {tuple(q0)} {i0}",
        f"Q1: {tuple(q1)} {i1}",
        f"types: {' '.join(kind.value for kind in topograph_types(params, step_cap))}",
        f"isomorphic: {'no' if i0 != i1 else 'yes'}",
        f"distinguishable: {distinguishable(params, step_cap)}",
        f"oriented_pair_distinct: {oriented_pair_distinct(params, step_cap)}",
        f"parabola offset: {format_rational(parabola_offset(params))}",
        f"alexander coefficient: {alexander_coefficient(params)}",
        f"parabola_alexander_trivial: {parabola_alexander_trivial(params)}",
    ]
    if params.p > 1 and params.q > 1:
        lines.append(f"thm_main_bound: {thm_main_bound(params)}")
        lines.append(f"thm_weakened_bound: {thm_weakened_bound(params)}")
        lines.append(f"thm_large_k: {thm_large_k(params)}")
        lines.append(f"lemma_predicts_distinct: {lemma_predicts_distinct(params)}")
    return "\n".join(lines)
