"""Pullback maps between class spaces and restriction of fans along them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact_geom import Cone, Fan, cone_from_generators, intersect_cones, restrict_cone
from .git_fan import WeightSystem, effective_cone, git_fan
from .linalg import Vector, as_fractions, mat_mul, mat_vec, rank, transpose
from .mori import DivisorClass, NotEffective, moving_cone, zariski

PASS, FAIL = "PASS", "FAIL"


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PullbackMap:
    """f^*: Pic(Y) -> Pic(X); matrix rows are X-coordinates, columns images of Y's basis."""

    source_rank: int
    matrix: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        if not self.matrix or any(len(row) != self.source_rank for row in self.matrix):
            raise DimensionMismatch(f"matrix rows must have length source_rank={self.source_rank}")
        if rank(self.matrix) != self.source_rank:
            raise DimensionMismatch("pullback matrix is not injective")

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    @property
    def columns(self) -> list[Vector]:
        return [tuple(c) for c in transpose(self.matrix)]

    def compose(self, other: "PullbackMap") -> "PullbackMap":
        """self after other: Pic(Z) --other--> Pic(Y) --self--> Pic(X)."""
        if other.target_rank != self.source_rank:
            raise DimensionMismatch("maps are not composable")
        return PullbackMap(other.source_rank, tuple(map(tuple, mat_mul(self.matrix, other.matrix))))

    @classmethod
    def identity(cls, n: int) -> "PullbackMap":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def pullback_class(f: PullbackMap, d: Sequence) -> DivisorClass:
    if len(d) != f.source_rank:
        raise DimensionMismatch(f"class has length {len(d)}, map expects {f.source_rank}")
    return mat_vec(f.matrix, as_fractions(d))


def restrict_fan(fan: Fan, f: PullbackMap) -> Fan:
    if fan.ambient_rank != f.target_rank:
        raise DimensionMismatch(f"fan lives in rank {fan.ambient_rank}, map targets rank {f.target_rank}")
    cols = f.columns
    return Fan.from_cones(f.source_rank, {restrict_cone(c, cols) for c in fan.cones})


@dataclass(frozen=True)
class RestrictionReport:
    verdict: str
    expected: Fan
    actual: Fan
    mismatches: tuple[tuple[Cone, str], ...]
    cone_checks: dict = field(default_factory=dict)
    note: str = ""


def compare_fans(expected: Fan, actual: Fan) -> list[tuple[Cone, str]]:
    exp, act = set(expected.cones), set(actual.cones)
    out = [(c, "expected") for c in expected.cones if c not in act]
    out += [(c, "actual") for c in actual.cones if c not in exp]
    return out


def nef_cone(ws: WeightSystem) -> Cone | None:
    if ws.ample is None:
        return None
    return git_fan(ws).cone_containing(ws.ample)


_FAIL_NOTE = (
    "no theorem violation provable: either the map is wrong or no surjective "
    "morphism realizes it"
)


def _report(expected: Fan, actual: Fan, checks: dict) -> RestrictionReport:
    mismatches = tuple(compare_fans(expected, actual))
    ok = not mismatches and all(checks.values())
    return RestrictionReport(PASS if ok else FAIL, expected, actual, mismatches, checks,
                             "" if ok else _FAIL_NOTE)


def verify_restriction(ws_x: WeightSystem, ws_y: WeightSystem, f: PullbackMap) -> RestrictionReport:
    """Compare Fan(Y) with Fan(X) restricted along f, plus Eff/Mov/Nef restrictions.

    Whether a surjection X -> Y inducing f exists cannot be checked here; the
    caller vouches for it.
    """
    if f.target_rank != ws_x.rank or f.source_rank != ws_y.rank:
        raise DimensionMismatch(
            f"map is rank {f.source_rank} -> {f.target_rank}, spaces are {ws_y.rank} and {ws_x.rank}"
        )
    cols = f.columns
    checks = {
        "eff": effective_cone(ws_y) == restrict_cone(effective_cone(ws_x), cols),
        "mov": moving_cone(ws_y) == restrict_cone(moving_cone(ws_x), cols),
    }
    if ws_x.ample is not None and ws_y.ample is not None:
        checks["nef"] = nef_cone(ws_y) == restrict_cone(nef_cone(ws_x), cols)
    return _report(git_fan(ws_y), restrict_fan(git_fan(ws_x), f), checks)


def verify_against_fan(ws_x: WeightSystem, expected: Fan, f: PullbackMap) -> RestrictionReport:
    """Variant for targets known only through a stored fan (no weight system)."""
    if f.target_rank != ws_x.rank or f.source_rank != expected.ambient_rank:
        raise DimensionMismatch("map does not match the fixture ranks")
    support = cone_from_generators(expected.rays, expected.ambient_rank)
    checks = {"eff": support == restrict_cone(effective_cone(ws_x), f.columns)}
    return _report(expected, restrict_fan(git_fan(ws_x), f), checks)


def restrict_region_fan(ws: WeightSystem, region: Cone, f: PullbackMap | None = None) -> Fan:
    """Fan(X; C): the GIT fan cut down to region ∩ Eff, optionally restricted along f."""
    if region.ambient_rank != ws.rank:
        raise DimensionMismatch(f"region lives in rank {region.ambient_rank}, weight system has {ws.rank}")
    region = intersect_cones(region, effective_cone(ws))
    fan = Fan.from_cones(ws.rank, {intersect_cones(c, region) for c in git_fan(ws).cones})
    if f is not None:
        fan = restrict_fan(fan, f)
    return fan


def pullback_zariski_check(ws_x: WeightSystem, ws_y: WeightSystem, f: PullbackMap, d: Sequence) -> bool:
    """Zariski decomposition of f^*D equals the pullback of that of D."""
    d = as_fractions(d)
    if len(d) != ws_y.rank:
        raise DimensionMismatch("class length does not match the source rank")
    if not effective_cone(ws_y).contains(d):
        raise NotEffective(f"class {[str(x) for x in d]} is not effective on the source")
    zy = zariski(ws_y, d)
    zx = zariski(ws_x, pullback_class(f, d))
    return zx.positive == pullback_class(f, zy.positive) and zx.negative == pullback_class(f, zy.negative)
