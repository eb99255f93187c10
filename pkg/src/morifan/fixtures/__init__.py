"""Shipped weight systems, pullback maps and golden fans.

Bl2P3 is the blow-up of P^3 at p1 = (0:0:0:1) and p2 = (0:0:1:0), in the
basis (H, E1, E2). Its Cox generators: x0, x1 (planes through both points,
H - E1 - E2), x2 (through p1 only, H - E1), x3 (through p2 only, H - E2) and
the exceptional e1, e2.
"""

from __future__ import annotations

from importlib import resources

from ..exact_geom import Fan
from ..git_fan import WeightSystem
from ..io import fan_from_json, map_from_json, weight_system_from_json
from ..morphism import PullbackMap

WEIGHT_SYSTEMS = ("p2", "p1xp1", "f1", "p3", "bl1p3", "bl2p3")


class UnknownFixture(KeyError):
    pass


# name -> (source X, target Y or None for subspace-only, map file stem, golden fan or None)
MAPS = {
    "bl2p3→bl1p3": ("bl2p3", "bl1p3", "bl2p3-bl1p3", None),
    "bl2p3→p3": ("bl2p3", "p3", "bl2p3-p3", None),
    "bl1p3→p3": ("bl1p3", "p3", "bl1p3-p3", None),
    "bl2p3→z2quot": ("bl2p3", None, "bl2p3-z2quot", "z2quot.fan"),
    # negative fixture: no morphism realizes this map
    "bl2p3→p1xp1": ("bl2p3", "p1xp1", "bl2p3-bl1p3", None),
}


def _file(stem: str):
    return resources.files(__name__).joinpath(f"{stem}.json")


def fixture_path(stem: str):
    return _file(stem)


def canonical_map_name(name: str) -> str:
    key = name.replace("->", "→")
    if key not in MAPS:
        key = key.replace("-", "→", 1) if "→" not in key else key
    if key not in MAPS:
        raise UnknownFixture(f"unknown map fixture {name!r}; known: {', '.join(MAPS)}")
    return key


def weight_system(name: str) -> WeightSystem:
    if name not in WEIGHT_SYSTEMS:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(WEIGHT_SYSTEMS)}")
    return weight_system_from_json(str(_file(name)))


def pullback_map(name: str) -> PullbackMap:
    return map_from_json(str(_file(MAPS[canonical_map_name(name)][2])))


def golden_fan(stem: str, ambient_rank: int) -> Fan:
    return fan_from_json(str(_file(stem)), ambient_rank)


def map_fixture(name: str):
    """(ws_x, ws_y or None, map, golden fan or None)."""
    x, y, m, golden = MAPS[canonical_map_name(name)]
    f = pullback_map(name)
    return (
        weight_system(x),
        weight_system(y) if y else None,
        f,
        golden_fan(golden, f.source_rank) if golden else None,
    )
