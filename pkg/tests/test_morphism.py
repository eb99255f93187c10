import itertools
import random

import pytest
from hypothesis import given, strategies as st

from morifan import fixtures
from morifan.exact_geom import cone_from_generators, fan_axiom_violations, faces
from morifan.git_fan import effective_cone, git_fan
from morifan.mori import NotEffective
from morifan.morphism import (
    FAIL,
    PASS,
    DimensionMismatch,
    PullbackMap,
    pullback_class,
    pullback_zariski_check,
    restrict_fan,
    restrict_region_fan,
    verify_against_fan,
    verify_restriction,
)

from conftest import E1, E2, H, sub

Y_MAP = PullbackMap(2, ((1, 0), (0, 1), (0, 0)))
Z_MAP = PullbackMap(2, ((1, 0), (0, 1), (0, 1)))


def maximal(fan):
    return {c.rays for c in fan.maximal_cones}


def test_pullback_class_examples():
    assert pullback_class(PullbackMap.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert pullback_class(Y_MAP, (1, 1)) == (1, 1, 0)
    assert pullback_class(Z_MAP, (0, 1)) == (0, 1, 1)
    with pytest.raises(DimensionMismatch):
        pullback_class(Y_MAP, (1, 1, 1))


def test_map_must_be_injective():
    with pytest.raises(DimensionMismatch):
        PullbackMap(2, ((1, 2), (2, 4), (0, 0)))


def test_restrict_fan_examples(bl2p3):
    fan = git_fan(bl2p3)
    assert restrict_fan(fan, PullbackMap.identity(3)).cones == fan.cones
    assert maximal(restrict_fan(fan, Y_MAP)) == {((1, -1), (1, 0)), ((0, 1), (1, 0))}
    z = restrict_fan(fan, Z_MAP)
    assert maximal(z) == {((0, 1), (1, 0)), ((1, 0), (2, -1)), ((1, -1), (2, -1))}


@pytest.mark.parametrize("name", ["bl2p3→bl1p3", "bl2p3→p3", "bl1p3→p3"])
def test_morphism_fixtures_pass(name):
    ws_x, ws_y, f, _ = fixtures.map_fixture(name)
    report = verify_restriction(ws_x, ws_y, f)
    assert report.verdict == PASS
    assert not report.mismatches
    assert all(report.cone_checks.values())
    assert set(report.cone_checks) == {"eff", "mov", "nef"}


def test_single_ray_on_both_sides():
    ws_x, ws_y, f, _ = fixtures.map_fixture("bl2p3→p3")
    report = verify_restriction(ws_x, ws_y, f)
    assert maximal(report.expected) == maximal(report.actual) == {((1,),)}


def test_f1_target_also_passes():
    # F1 has the same fan as Bl1P3, so this map cannot serve as a negative example
    ws_x = fixtures.weight_system("bl2p3")
    assert verify_restriction(ws_x, fixtures.weight_system("f1"), Y_MAP).verdict == PASS


def test_negative_fixture_fails():
    ws_x, ws_y, f, _ = fixtures.map_fixture("bl2p3→p1xp1")
    report = verify_restriction(ws_x, ws_y, f)
    assert report.verdict == FAIL
    assert report.mismatches
    assert report.note


def test_z_quotient_golden_fan(bl2p3):
    ws_x, _, f, golden = fixtures.map_fixture("bl2p3→z2quot")
    restricted = restrict_fan(git_fan(ws_x), f)
    assert restricted.cones == golden.cones
    assert verify_against_fan(ws_x, golden, f).verdict == PASS
    # the middle cone is the slice of the semi-ample cone
    sa_slice = cone_from_generators([(1, 0), (2, -1)])
    assert sa_slice.rays in maximal(restricted)


def test_non_face_phenomenon(bl2p3):
    fan_x = git_fan(bl2p3)
    all_faces = {f.rays for c in fan_x.cones for f in faces(c)}
    pushed = [cone_from_generators([pullback_class(Z_MAP, r) for r in c.rays], 3)
              for c in restrict_fan(fan_x, Z_MAP).maximal_cones]
    assert any(c.rays not in all_faces for c in pushed)


def test_region_fan_examples(bl2p3):
    fan = git_fan(bl2p3)
    assert restrict_region_fan(bl2p3, effective_cone(bl2p3)).cones == fan.cones
    sa = cone_from_generators([H, sub(H, E1), sub(H, E2)])
    assert len(restrict_region_fan(bl2p3, sa).maximal_cones) == 1
    # ends of this segment sit on the walls cone{H,E1} and cone{H,E2}
    assert len(restrict_region_fan(bl2p3, cone_from_generators([(1, 1, 0), (1, 0, 1)])).maximal_cones) == 1
    crossing = restrict_region_fan(bl2p3, cone_from_generators([(3, 2, -1), (3, -1, 2)]))
    assert maximal(crossing) == {((3, -1, 2), (3, 0, 1)), ((3, 0, 1), (3, 1, 0)), ((3, 1, 0), (3, 2, -1))}


def test_region_fan_clips_to_effective_cone(bl2p3):
    region = cone_from_generators([(1, 0, 0), (-1, 2, 2)])
    fan = restrict_region_fan(bl2p3, region)
    eff = effective_cone(bl2p3)
    assert all(eff.contains_cone(c) for c in fan.cones)


def test_region_fan_then_map(bl2p3):
    fan = restrict_region_fan(bl2p3, effective_cone(bl2p3), Y_MAP)
    assert maximal(fan) == maximal(restrict_fan(git_fan(bl2p3), Y_MAP))


def test_pullback_zariski_examples(bl2p3, bl1p3):
    assert pullback_zariski_check(bl2p3, bl1p3, Y_MAP, (1, 1))
    assert pullback_zariski_check(bl2p3, bl1p3, Y_MAP, (1, 0))
    with pytest.raises(NotEffective):
        pullback_zariski_check(bl2p3, bl1p3, Y_MAP, (-1, 0))


@pytest.mark.parametrize("name", ["bl2p3→bl1p3", "bl2p3→p3", "bl1p3→p3"])
def test_pullback_zariski_grid(name):
    ws_x, ws_y, f, _ = fixtures.map_fixture(name)
    eff = effective_cone(ws_y)
    grid = itertools.product(range(-4, 5), repeat=ws_y.rank)
    for d in grid:
        if eff.contains(d) and max(abs(x) for x in d) <= 4:
            assert pullback_zariski_check(ws_x, ws_y, f, d), d


# properties

maps_2_to_3 = st.lists(st.tuples(*[st.integers(-2, 2)] * 2), min_size=3, max_size=3)


@given(maps_2_to_3)
def test_restriction_is_a_fan(rows):
    try:
        f = PullbackMap(2, tuple(rows))
    except DimensionMismatch:
        return
    fan = restrict_fan(git_fan(fixtures.weight_system("bl2p3")), f)
    assert not fan_axiom_violations(fan)


@given(maps_2_to_3, st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_composition(rows, g_col):
    try:
        f = PullbackMap(2, tuple(rows))
        g = PullbackMap(1, tuple((x,) for x in g_col))
    except DimensionMismatch:
        return
    fan = git_fan(fixtures.weight_system("bl2p3"))
    assert restrict_fan(restrict_fan(fan, f), g).cones == restrict_fan(fan, f.compose(g)).cones


@pytest.mark.parametrize("name", fixtures.WEIGHT_SYSTEMS)
def test_identity_restriction_is_idempotent(name):
    ws = fixtures.weight_system(name)
    fan = git_fan(ws)
    assert restrict_fan(fan, PullbackMap.identity(ws.rank)).cones == fan.cones


def test_random_subspaces_give_fans(bl2p3):
    rng = random.Random(2)
    fan = git_fan(bl2p3)
    for _ in range(10):
        cols = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(2)]
        try:
            f = PullbackMap(2, tuple(zip(*cols)))
        except DimensionMismatch:
            continue
        assert not fan_axiom_violations(restrict_fan(fan, f))
