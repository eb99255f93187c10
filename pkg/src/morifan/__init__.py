"""Mori chamber fans, Zariski decompositions and GIT data for toric Mori dream spaces."""

from .exact_geom import (
    Cone,
    Fan,
    Location,
    NonInjectiveBasis,
    NonPointedError,
    Where,
    common_refinement,
    cone_from_generators,
    dual_cone,
    faces,
    intersect_cones,
    locate,
    restrict_cone,
)
from .git_fan import (
    OneParamSubgroup,
    Signature,
    Status,
    WeightSystem,
    git_fan,
    semistability,
    semistability_via_1ps,
    signature,
    state_cone,
)
from .mori import (
    ChamberInfo,
    ZariskiDecomposition,
    chamber_info,
    effective_cone,
    h0,
    moving_cone,
    strong_mori_equivalent,
    zariski,
)
from .morphism import (
    PullbackMap,
    RestrictionReport,
    pullback_class,
    pullback_zariski_check,
    restrict_fan,
    restrict_region_fan,
    verify_restriction,
)

__all__ = [
    "Cone",
    "Fan",
    "Location",
    "NonInjectiveBasis",
    "NonPointedError",
    "Where",
    "common_refinement",
    "cone_from_generators",
    "dual_cone",
    "faces",
    "intersect_cones",
    "locate",
    "restrict_cone",
    "OneParamSubgroup",
    "Signature",
    "Status",
    "WeightSystem",
    "git_fan",
    "semistability",
    "semistability_via_1ps",
    "signature",
    "state_cone",
    "ChamberInfo",
    "ZariskiDecomposition",
    "chamber_info",
    "effective_cone",
    "h0",
    "moving_cone",
    "strong_mori_equivalent",
    "zariski",
    "PullbackMap",
    "RestrictionReport",
    "pullback_class",
    "pullback_zariski_check",
    "restrict_fan",
    "restrict_region_fan",
    "verify_restriction",
]

__version__ = "0.1.0"
