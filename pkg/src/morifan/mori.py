"""Divisor classes on a toric Mori dream space presented by a weight system.

Section counts, Zariski decompositions, the chamber containing a class and
strong Mori equivalence. Classes are rational vectors in the weight system's
basis; Q-linear equivalence is equality of vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .exact_geom import Cone, Fan, cone_from_generators, intersect_cones
from .git_fan import WeightSystem, effective_cone, git_fan, signature
from .linalg import as_fractions
from .lp import OPTIMAL, linprog

DivisorClass = tuple[Fraction, ...]

DEFAULT_H0_LIMIT = 10**6


class NotEffective(ValueError):
    pass


class ZeroClass(ValueError):
    pass


class NonIntegral(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


class RouteDisagreement(AssertionError):
    """The chamber route and the GIT route of strong Mori equivalence differ."""


def _divisor(ws: WeightSystem, d: Sequence) -> DivisorClass:
    d = as_fractions(d)
    if len(d) != ws.rank:
        raise ValueError(f"divisor class has length {len(d)}, expected {ws.rank}")
    return d


@lru_cache(maxsize=None)
def moving_cone(ws: WeightSystem) -> Cone:
    """Intersection over i of the cones spanned by all classes except the i-th."""
    mov = effective_cone(ws)
    for i in range(ws.n):
        rest = [c for j, c in enumerate(ws.classes) if j != i]
        mov = intersect_cones(mov, cone_from_generators(rest, ws.rank))
    return mov


@lru_cache(maxsize=None)
def _suffix_cones(ws: WeightSystem) -> tuple[Cone, ...]:
    return tuple(cone_from_generators(ws.classes[k:], ws.rank) for k in range(ws.n + 1))


def h0(ws: WeightSystem, d: Sequence, limit: int = DEFAULT_H0_LIMIT) -> int:
    """Number of monomials of degree d in the Cox ring.

    Depth-first over the generators; a residual degree is pruned as soon as
    it leaves the cone of the remaining generators, and counts are memoized
    on (generator index, residual).
    """
    d = _divisor(ws, d)
    if any(x.denominator != 1 for x in d):
        raise NonIntegral(f"class {[str(x) for x in d]} is not integral")
    d = tuple(int(x) for x in d)
    cones = _suffix_cones(ws)
    classes = ws.classes
    n = ws.n
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def count(k: int, residual: tuple[int, ...]) -> int:
        if k == n:
            return int(not any(residual))
        key = (k, residual)
        if key in memo:
            return memo[key]
        if len(memo) > limit:
            raise ResourceLimit(f"h0 search exceeded {limit} states")
        w = classes[k]
        total = 0
        r = residual
        while cones[k].contains(r):
            total += count(k + 1, r)
            if total > limit:
                raise ResourceLimit(f"h0 exceeds the ceiling of {limit}")
            r = tuple(a - b for a, b in zip(r, w))
        memo[key] = total
        return total

    return count(0, d)


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: DivisorClass
    negative: DivisorClass
    coefficients: tuple[Fraction, ...]
    cone: Cone

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.coefficients) if a > 0)


def negative_coefficients(ws: WeightSystem, d: Sequence) -> tuple[Fraction, ...]:
    """a_i = min u_i over {u >= 0 : sum_j u_j w_j = d}, one exact LP per generator."""
    d = _divisor(ws, d)
    cols = list(zip(*ws.classes))  # rows of the weight matrix
    coeffs = []
    for i in range(ws.n):
        cost = [0] * ws.n
        cost[i] = 1
        res = linprog(cost, A_eq=cols, b_eq=d)
        if res.status != OPTIMAL:
            raise NotEffective(f"class {[str(x) for x in d]} is not effective")
        coeffs.append(res.value)
    return tuple(coeffs)


def zariski(ws: WeightSystem, d: Sequence, check: bool = True) -> ZariskiDecomposition:
    d = _divisor(ws, d)
    fan = git_fan(ws)
    if not any(d):
        zero = tuple(Fraction(0) for _ in d)
        return ZariskiDecomposition(zero, zero, (Fraction(0),) * ws.n, fan.cones[0])
    if not effective_cone(ws).contains(d):
        raise NotEffective(f"class {[str(x) for x in d]} is not effective")
    a = negative_coefficients(ws, d)
    neg = tuple(sum(ai * w[j] for ai, w in zip(a, ws.classes)) for j in range(ws.rank))
    pos = tuple(x - y for x, y in zip(d, neg))
    if check and not moving_cone(ws).contains(pos):
        raise AssertionError(f"positive part {pos} is not movable")
    return ZariskiDecomposition(pos, neg, a, fan.cone_containing(d))


def certificate_multiple(z: ZariskiDecomposition) -> int:
    """Least m > 0 with m * a_i integral for every generator coefficient."""
    return lcm(1, *(a.denominator for a in z.coefficients))


def section_certificate(ws: WeightSystem, d: Sequence, multiples=(1, 2)) -> bool:
    """h0(mD) == h0(mP) and h0(mN) == 1 for m = least valid multiple times each factor."""
    d = _divisor(ws, d)
    z = zariski(ws, d)
    m0 = certificate_multiple(z)
    for k in multiples:
        m = m0 * k
        scaled = lambda v: tuple(m * x for x in v)  # noqa: E731
        if h0(ws, scaled(d)) != h0(ws, scaled(z.positive)):
            return False
        if h0(ws, scaled(z.negative)) != 1:
            return False
    return True


@dataclass(frozen=True)
class ChamberInfo:
    cone: Cone
    dim: int
    kind: str
    positive_face: Cone
    exceptional_indices: frozenset[int]


def chamber_info(ws: WeightSystem, d: Sequence) -> ChamberInfo:
    d = _divisor(ws, d)
    if not any(d):
        raise ZeroClass("the zero class has no chamber")
    if not effective_cone(ws).contains(d):
        raise NotEffective(f"class {[str(x) for x in d]} is not effective")
    fan: Fan = git_fan(ws)
    cone = fan.cone_containing(d)
    sample = zariski(ws, cone.interior_point())
    positive_face = cone_from_generators(
        [zariski(ws, r).positive for r in cone.rays], ws.rank
    )
    return ChamberInfo(cone, cone.dim, fan.kind_of(cone), positive_face, sample.support)


def strong_mori_equivalent(ws: WeightSystem, d1: Sequence, d2: Sequence) -> bool:
    """Same relative-interior fan cone; cross-checked against GIT equivalence."""
    by_chamber = chamber_info(ws, d1).cone == chamber_info(ws, d2).cone
    by_git = signature(ws, d1).semistable_supports == signature(ws, d2).semistable_supports
    if by_chamber != by_git:
        raise RouteDisagreement(f"chamber route says {by_chamber}, GIT route says {by_git}")
    return by_chamber
