"""Pointed rational polyhedral cones and fans, in exact arithmetic.

A :class:`Cone` is stored in canonical dual-pair form: primitive integer
extremal rays, primitive integer facet covectors chosen inside the cone's
linear span, and a canonical integer basis of the orthogonal complement of
the span. Two cones are equal iff their sorted ray lists are equal.

Conversions are brute force over subsets (rays from inequalities and facets
from rays), which is plenty for ambient rank <= 4 and a few dozen generators.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import (
    Vector,
    as_fractions,
    canonical_subspace,
    dot,
    nullspace,
    primitive,
    rank,
)


class GeometryError(ValueError):
    pass


class NonPointedError(GeometryError):
    """The nonnegative span contains a line; ``lineality`` spans part of it."""

    def __init__(self, lineality: Vector):
        super().__init__(f"cone is not pointed; contains the line through {list(lineality)}")
        self.lineality = lineality


class NonInjectiveBasis(GeometryError):
    pass


def _sign_normalized(v: Vector) -> Vector:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


@dataclass(frozen=True, eq=False)
class Cone:
    ambient_rank: int
    rays: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    equations: tuple[Vector, ...] = field(repr=False)
    dim: int

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.rays == other.rays

    def __hash__(self):
        return hash((self.ambient_rank, self.rays))

    def __repr__(self):
        return f"Cone({[list(r) for r in self.rays]})" if self.rays else f"Cone(0^{self.ambient_rank})"

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    def in_span(self, x: Sequence) -> bool:
        return all(dot(e, x) == 0 for e in self.equations)

    def contains(self, x: Sequence) -> bool:
        return self.in_span(x) and all(dot(f, x) >= 0 for f in self.facets)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(r) for r in other.rays)

    def interior_point(self) -> Vector:
        """Sum of the extremal rays; lies in the relative interior."""
        return tuple(sum(col) for col in zip(*self.rays)) if self.rays else (0,) * self.ambient_rank

    @classmethod
    def zero(cls, ambient_rank: int) -> "Cone":
        eqs = canonical_subspace([[int(i == j) for j in range(ambient_rank)] for i in range(ambient_rank)])
        return cls(ambient_rank, (), (), eqs, 0)


def cone_from_generators(vectors: Iterable[Sequence], ambient_rank: int | None = None) -> Cone:
    """Canonical cone equal to the nonnegative span of ``vectors``.

    Raises NonPointedError if the span contains a line.
    """
    vectors = [as_fractions(v) for v in vectors]
    if ambient_rank is None:
        if not vectors:
            raise GeometryError("ambient rank needed for an empty generator list")
        ambient_rank = len(vectors[0])
    if any(len(v) != ambient_rank for v in vectors):
        raise GeometryError("generators have inconsistent lengths")
    gens = sorted({primitive(v) for v in vectors if any(v)})
    if not gens:
        return Cone.zero(ambient_rank)

    equations = canonical_subspace(nullspace(gens, ambient_rank))
    r = ambient_rank - len(equations)

    facets = set()
    for subset in combinations(gens, r - 1):
        rows = list(subset) + list(equations)
        if rank(rows) != ambient_rank - 1:
            continue
        normal = primitive(nullspace(rows, ambient_rank)[0])
        values = [dot(normal, g) for g in gens]
        if all(v >= 0 for v in values):
            facets.add(normal)
        elif all(v <= 0 for v in values):
            facets.add(tuple(-x for x in normal))
    facets = sorted(facets)

    facet_rank = rank(facets) if facets else 0
    if facet_rank < r:
        line = nullspace(list(facets) + list(equations), ambient_rank)[0]
        raise NonPointedError(_sign_normalized(primitive(line)))

    rays = []
    for g in gens:
        tight = [f for f in facets if dot(f, g) == 0]
        if (rank(tight) if tight else 0) == r - 1:
            rays.append(g)
    return Cone(ambient_rank, tuple(rays), tuple(facets), equations, r)


def cone_from_inequalities(
    ambient_rank: int, inequalities: Iterable[Sequence], equations: Iterable[Sequence] = ()
) -> Cone:
    """Canonical cone {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}."""
    eqs = list(canonical_subspace([as_fractions(e) for e in equations])) if equations else []
    ineqs = sorted({primitive(a) for a in inequalities if any(as_fractions(a))})
    k = ambient_rank - 1 - (rank(eqs) if eqs else 0)
    if k < 0:
        return Cone.zero(ambient_rank)
    rays = set()
    for subset in combinations(ineqs, k):
        rows = eqs + list(subset)
        if (rank(rows) if rows else 0) != ambient_rank - 1:
            continue
        v = primitive(nullspace(rows, ambient_rank)[0])
        for cand in (v, tuple(-x for x in v)):
            if all(dot(a, cand) >= 0 for a in ineqs):
                rays.add(cand)
    return cone_from_generators(sorted(rays), ambient_rank)


def dual_cone(c: Cone) -> Cone:
    """{y : <y, x> >= 0 for x in c}; only defined for full-dimensional c."""
    if not c.is_full_dimensional:
        line = c.equations[0]
        raise NonPointedError(_sign_normalized(line))
    return cone_from_generators(c.facets, c.ambient_rank)


def intersect_cones(a: Cone, b: Cone) -> Cone:
    if a.ambient_rank != b.ambient_rank:
        raise GeometryError("ambient ranks differ")
    if a == b:
        return a
    return cone_from_inequalities(a.ambient_rank, a.facets + b.facets, a.equations + b.equations)


def _face_ray_sets(c: Cone) -> set[frozenset[int]]:
    tight = [frozenset(i for i, r in enumerate(c.rays) if dot(f, r) == 0) for f in c.facets]
    seen = {frozenset(range(len(c.rays)))}
    todo = list(seen)
    while todo:
        s = todo.pop()
        for t in tight:
            u = s & t
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen


def _subcone(c: Cone, ray_ids: Iterable[int]) -> Cone:
    return cone_from_generators([c.rays[i] for i in sorted(ray_ids)], c.ambient_rank)


def faces(c: Cone) -> list[Cone]:
    """All faces of c, from {0} up to c itself, sorted by (dim, rays)."""
    out = {_subcone(c, s) for s in _face_ray_sets(c)}
    return sorted(out, key=_cone_key)


class Where(enum.Enum):
    RELATIVE_INTERIOR = "relative_interior"
    ON_FACE = "on_face"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Location:
    where: Where
    face: Cone | None = None


def locate(c: Cone, x: Sequence) -> Location:
    x = as_fractions(x)
    if len(x) != c.ambient_rank:
        raise GeometryError("dimension mismatch")
    if not c.in_span(x):
        return Location(Where.OUTSIDE)
    values = [dot(f, x) for f in c.facets]
    if any(v < 0 for v in values):
        return Location(Where.OUTSIDE)
    if all(v > 0 for v in values):
        return Location(Where.RELATIVE_INTERIOR, c)
    tight = [f for f, v in zip(c.facets, values) if v == 0]
    on = [r for r in c.rays if all(dot(f, r) == 0 for f in tight)]
    return Location(Where.ON_FACE, cone_from_generators(on, c.ambient_rank))


def restrict_cone(c: Cone, subspace_basis: Sequence[Sequence]) -> Cone:
    """The cone {y : sum_i y_i b_i in c}, in the coordinates of the basis b."""
    basis = [as_fractions(b) for b in subspace_basis]
    if any(len(b) != c.ambient_rank for b in basis):
        raise GeometryError("basis vectors do not live in the cone's ambient space")
    if not basis or rank(basis) != len(basis):
        raise NonInjectiveBasis("subspace basis vectors are linearly dependent")
    pull = lambda cov: [dot(cov, b) for b in basis]  # noqa: E731
    return cone_from_inequalities(
        len(basis), [pull(f) for f in c.facets], [pull(e) for e in c.equations]
    )


def _cone_key(c: Cone):
    return (c.dim, c.rays)


CHAMBER, CELL, ORIGIN = "chamber", "cell", "origin"


@dataclass(frozen=True, eq=False)
class Fan:
    """Face-closed set of cones, sorted by (dim, rays)."""

    ambient_rank: int
    cones: tuple[Cone, ...]
    maximal: tuple[int, ...]

    @classmethod
    def from_cones(cls, ambient_rank: int, cones: Iterable[Cone]) -> "Fan":
        closed: set[Cone] = set()
        for c in cones:
            if c.ambient_rank != ambient_rank:
                raise GeometryError("cone ambient rank differs from fan's")
            if c not in closed:
                closed.update(faces(c))
        if not closed:
            closed.add(Cone.zero(ambient_rank))
        ordered = tuple(sorted(closed, key=_cone_key))
        maximal = tuple(
            i for i, c in enumerate(ordered)
            if not any(d.dim > c.dim and d.contains_cone(c) for d in ordered)
        )
        return cls(ambient_rank, ordered, maximal)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.cones == other.cones

    def __hash__(self):
        return hash((self.ambient_rank, self.cones))

    def kind(self, i: int) -> str:
        c = self.cones[i]
        if c.dim == 0:
            return ORIGIN
        if i in self.maximal and c.dim == self.ambient_rank:
            return CHAMBER
        return CELL

    def kind_of(self, c: Cone) -> str:
        return self.kind(self.cones.index(c))

    @property
    def maximal_cones(self) -> list[Cone]:
        return [self.cones[i] for i in self.maximal]

    @property
    def chambers(self) -> list[Cone]:
        return [c for i, c in enumerate(self.cones) if self.kind(i) == CHAMBER]

    @property
    def rays(self) -> list[Vector]:
        return sorted({r for c in self.cones for r in c.rays})

    def cone_containing(self, x: Sequence) -> Cone | None:
        """The cone whose relative interior contains x."""
        for c in self.cones:
            if locate(c, x).where is Where.RELATIVE_INTERIOR:
                return c
        return None

    def support_contains(self, x: Sequence) -> bool:
        return any(c.contains(x) for c in self.maximal_cones)


def fan_axiom_violations(fan: Fan) -> list[tuple[Cone, Cone]]:
    """Pairs whose intersection is not a face of both members."""
    face_sets = {c: set(faces(c)) for c in fan.cones}
    bad = []
    for a, b in combinations(fan.cones, 2):
        m = intersect_cones(a, b)
        if m not in face_sets[a] or m not in face_sets[b]:
            bad.append((a, b))
    return bad


def _split(region: Cone, h: Vector, target_dim: int) -> list[Cone]:
    values = [dot(h, r) for r in region.rays]
    if all(v >= 0 for v in values) or all(v <= 0 for v in values):
        return [region]
    out = []
    for cov in (h, tuple(-x for x in h)):
        piece = cone_from_inequalities(
            region.ambient_rank, region.facets + (cov,), region.equations
        )
        if piece.dim == target_dim:
            out.append(piece)
    return out


def arrangement_hyperplanes(cones: Iterable[Cone], within: Cone) -> list[Vector]:
    """Hyperplanes spanned by (rank-1)-subsets of rays of the input cones."""
    d = within.ambient_rank
    hyper = {_sign_normalized(f) for f in within.facets}
    for c in cones:
        for subset in combinations(c.rays, d - 1):
            if rank(subset) == d - 1:
                hyper.add(_sign_normalized(primitive(nullspace(subset, d)[0])))
    return sorted(hyper)


def arrangement_regions(hyperplanes: Iterable[Vector], within: Cone) -> list[Cone]:
    regions = [within]
    for h in hyperplanes:
        regions = [p for r in regions for p in _split(r, h, within.dim)]
    return sorted(set(regions), key=_cone_key)


def common_refinement(cones: Sequence[Cone], within: Cone) -> Fan:
    """Fan on ``within`` whose maximal cones are the closures of the connected
    regions of constant membership pattern in the input cones.

    Regions of the hyperplane arrangement from :func:`arrangement_hyperplanes`
    are grouped by (pattern, adjacency) and each group is merged into one cone
    when its union is convex. Groups with a non-convex union stay split; if the
    merged result violates the fan axiom the plain arrangement fan is returned.
    """
    cones = list(cones)
    regions = arrangement_regions(arrangement_hyperplanes(cones, within), within)
    d = within.dim
    patterns = []
    for r in regions:
        p = r.interior_point()
        patterns.append(tuple(c.contains(p) for c in cones))

    parent = list(range(len(regions)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(regions)), 2):
        if patterns[i] == patterns[j] and find(i) != find(j):
            if intersect_cones(regions[i], regions[j]).dim == d - 1:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(len(regions)):
        groups.setdefault(find(i), []).append(i)

    maximal = []
    for members in groups.values():
        if len(members) == 1:
            maximal.append(regions[members[0]])
            continue
        merged = cone_from_generators(
            [ray for i in members for ray in regions[i].rays], within.ambient_rank
        )
        inside = set(members)
        convex = all(
            intersect_cones(regions[j], merged).dim < d
            for j in range(len(regions)) if j not in inside
        )
        if convex:
            maximal.append(merged)
        else:
            maximal.extend(regions[i] for i in members)

    fan = Fan.from_cones(within.ambient_rank, maximal)
    if len(maximal) != len(regions) and fan_axiom_violations(fan):
        fan = Fan.from_cones(within.ambient_rank, regions)
    return fan
