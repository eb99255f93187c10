"""Torus actions on affine space given by a weight matrix.

The Cox ring is a polynomial ring, so a point of affine space is represented
by its support (the set of nonzero coordinates). Semistability of a point at a
character depends only on the cone spanned by the weights on its support.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .exact_geom import (
    Cone,
    Fan,
    GeometryError,
    arrangement_hyperplanes,
    arrangement_regions,
    common_refinement,
    cone_from_generators,
    intersect_cones,
)
from .linalg import Vector, as_fractions, dot, nullspace, primitive, rank
from .lp import is_feasible


class InvalidWeightSystem(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    """Divisor classes of the Cox ring generators, in a fixed basis of Pic."""

    names: tuple[str, ...]
    classes: tuple[Vector, ...]
    basis: tuple[str, ...] = ()
    ample: Vector | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "classes", tuple(tuple(int(x) for x in c) for c in self.classes))
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.ample is not None:
            object.__setattr__(self, "ample", tuple(int(x) for x in self.ample))
        if not self.classes:
            raise InvalidWeightSystem("no generators")
        if len(self.names) != len(self.classes):
            raise InvalidWeightSystem("names and classes differ in length")
        if len(set(self.names)) != len(self.names):
            raise InvalidWeightSystem("generator names are not unique")
        rho = len(self.classes[0])
        if rho < 1 or any(len(c) != rho for c in self.classes):
            raise InvalidWeightSystem("classes must all have the same positive length")
        if self.basis and len(self.basis) != rho:
            raise InvalidWeightSystem("basis labels do not match the rank")
        if self.ample is not None and len(self.ample) != rho:
            raise InvalidWeightSystem("ample class has the wrong length")
        if any(not any(c) for c in self.classes):
            raise InvalidWeightSystem("a generator has the zero class")
        if rank(self.classes) != rho:
            raise InvalidWeightSystem("generator classes do not span the class space")
        try:
            cone_from_generators(self.classes)
        except GeometryError as exc:
            raise InvalidWeightSystem(f"effective cone is not pointed: {exc}") from exc

    @property
    def rank(self) -> int:
        return len(self.classes[0])

    @property
    def n(self) -> int:
        return len(self.classes)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def support(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(x) for x in names)

    def all_supports(self, max_size: int | None = None) -> list[frozenset[int]]:
        top = self.n if max_size is None else min(max_size, self.n)
        return [frozenset(s) for k in range(top + 1) for s in combinations(range(self.n), k)]

    def check_ample(self) -> None:
        """The ample class, if any, must lie inside a chamber of the GIT fan."""
        if self.ample is None:
            return
        c = git_fan(self).cone_containing(self.ample)
        if c is None or c.dim != self.rank:
            raise InvalidWeightSystem(f"ample class {list(self.ample)} is not inside a GIT chamber")


class Status(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class OneParamSubgroup:
    covector: Vector

    def pair(self, chi: Sequence) -> Fraction:
        return Fraction(dot(chi, self.covector))


@dataclass(frozen=True)
class Signature:
    semistable_supports: frozenset[frozenset[int]]
    stable_supports: frozenset[frozenset[int]]


@lru_cache(maxsize=None)
def _state_cone(classes: tuple[Vector, ...], rho: int, support: frozenset[int]) -> Cone:
    return cone_from_generators([classes[i] for i in sorted(support)], rho)


def _check_support(ws: WeightSystem, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    if any(not 0 <= i < ws.n for i in s):
        raise ValueError(f"support {sorted(s)} has indices outside 0..{ws.n - 1}")
    return s


def _check_char(ws: WeightSystem, chi: Sequence) -> tuple[Fraction, ...]:
    chi = as_fractions(chi)
    if len(chi) != ws.rank:
        raise ValueError(f"character has length {len(chi)}, expected {ws.rank}")
    return chi


def state_cone(ws: WeightSystem, s: Iterable[int]) -> Cone:
    return _state_cone(ws.classes, ws.rank, _check_support(ws, s))


def semistability(ws: WeightSystem, s: Iterable[int], chi: Sequence) -> Status:
    """Cone criterion: semistable iff chi is in the state cone, stable iff in its interior."""
    chi = _check_char(ws, chi)
    c = state_cone(ws, s)
    if not c.contains(chi):
        return Status.UNSTABLE
    if c.is_full_dimensional and all(dot(f, chi) > 0 for f in c.facets):
        return Status.STABLE
    return Status.STRICTLY_SEMISTABLE


def destabilizing_1ps(ws: WeightSystem, s: Iterable[int], chi: Sequence) -> OneParamSubgroup | None:
    """A 1-PS with a limit at points of support s and negative pairing with chi."""
    s = sorted(_check_support(ws, s))
    chi = _check_char(ws, chi)
    res = is_feasible(
        A_eq=[chi], b_eq=[-1],
        A_ub=[[-x for x in ws.classes[i]] for i in s], b_ub=[0] * len(s),
        nvars=ws.rank, free=range(ws.rank),
    )
    if not res.feasible:
        return None
    return OneParamSubgroup(primitive(res.x))


def semistability_via_1ps(ws: WeightSystem, s: Iterable[int], chi: Sequence) -> Status:
    """Numerical criterion, decided by exact LP feasibility.

    lambda has a limit at a point with support s iff <w_i, lambda> >= 0 for all
    i in s. Unstable iff some such lambda pairs negatively with chi; stable iff
    no nonzero such lambda pairs to zero with chi.
    """
    s = sorted(_check_support(ws, s))
    chi = _check_char(ws, chi)
    if destabilizing_1ps(ws, s, chi) is not None:
        return Status.UNSTABLE
    weights = [ws.classes[i] for i in s]
    # a nonzero lambda with every pairing zero: both lambda and -lambda have limits
    if not weights or nullspace(weights, ws.rank):
        return Status.STRICTLY_SEMISTABLE
    # otherwise any nonzero feasible lambda has sum_i <w_i, lambda> > 0, so normalize
    total = [sum(w[j] for w in weights) for j in range(ws.rank)]
    res = is_feasible(
        A_eq=[chi, total], b_eq=[0, 1],
        A_ub=[[-x for x in w] for w in weights], b_ub=[0] * len(weights),
        nvars=ws.rank, free=range(ws.rank),
    )
    return Status.STRICTLY_SEMISTABLE if res.feasible else Status.STABLE


def effective_cone(ws: WeightSystem) -> Cone:
    return state_cone(ws, range(ws.n))


@lru_cache(maxsize=None)
def git_fan(ws: WeightSystem) -> Fan:
    """GIT fan on the effective cone.

    Common refinement of the state cones of supports of size <= rank (these
    already carry every wall, by Caratheodory) within Eff.
    """
    cones = {state_cone(ws, s) for s in ws.all_supports(ws.rank)}
    return common_refinement(sorted(cones, key=lambda c: (c.dim, c.rays)), effective_cone(ws))


def brute_force_chambers(ws: WeightSystem) -> list[Cone]:
    """Oracle: GIT chambers as intersections of every containing state cone.

    Every one of the 2^n supports is used. Sample characters come from the
    regions of the full wall arrangement; the chamber of a generic character
    is the intersection of all state cones containing it.
    """
    if ws.n > 16:
        raise ValueError("brute-force sweep is limited to n <= 16 generators")
    eff = effective_cone(ws)
    cones = {state_cone(ws, s) for s in ws.all_supports()}
    regions = arrangement_regions(arrangement_hyperplanes(cones, eff), eff)
    chambers = set()
    for r in regions:
        p = r.interior_point()
        chamber = eff
        for c in cones:
            if c.contains(p):
                chamber = intersect_cones(chamber, c)
        chambers.add(chamber)
    return sorted(chambers, key=lambda c: c.rays)


@lru_cache(maxsize=64)
def _signature_table(ws: WeightSystem) -> tuple:
    return tuple((s, state_cone(ws, s)) for s in ws.all_supports())


def signature(ws: WeightSystem, chi: Sequence) -> Signature:
    """Semistable and stable supports at chi, over all 2^n supports."""
    chi = _check_char(ws, chi)
    semi, stable = [], []
    for s, c in _signature_table(ws):
        if c.contains(chi):
            semi.append(s)
            if c.is_full_dimensional and all(dot(f, chi) > 0 for f in c.facets):
                stable.append(s)
    return Signature(frozenset(semi), frozenset(stable))


def git_equivalent(ws: WeightSystem, chi1: Sequence, chi2: Sequence) -> bool:
    return signature(ws, chi1).semistable_supports == signature(ws, chi2).semistable_supports

