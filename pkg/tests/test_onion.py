"""Nested cage families grown by iterating one translation."""

import math

import pytest

from icofold.cages import FaceCensus
from icofold.configs import C80_EQUAL_RADIUS_SEED, StartConfig, builtin
from icofold.engine import make_translation
from icofold.golden import GoldenNumber, parse_field_expr
from icofold.onion import (
    FAMILY_FORMULAS,
    OnionReport,
    OnionShell,
    build_onion,
    family_formula,
)

TAU_FLOAT = (1 + 5 ** 0.5) / 2


def grow(name, expr, iterations=2, **kwargs):
    start = builtin(name)
    t = make_translation(start.symmetry, 5, parse_field_expr(expr))
    return build_onion(start, t, iterations, **kwargs)


@pytest.fixture(scope="module")
def c60_family():
    return grow("c60", "3")


@pytest.fixture(scope="module")
def c80_family():
    return grow("c80", "2")


# --- the two catalogued families -------------------------------------------

def test_c60_family_counts_and_faces(c60_family):
    report = c60_family
    assert report.complete and report.failure is None
    assert report.counts == (60, 240, 540)
    assert report.formula == "60z^2"
    assert report.z_values == (1, 2, 3)
    assert report.pentagon_contact == "vertex"
    expected_faces = [{5: 12, 6: 20}, {5: 12, 6: 110}, {5: 12, 6: 260}]
    for shell, faces in zip(report.family, expected_faces):
        assert shell.census.counts == faces
        assert shell.trivalent
        assert shell.edge_ratio < 1.5


def test_c80_family_counts_and_faces(c80_family):
    report = c80_family
    assert report.complete
    assert report.counts == (80, 180, 320)
    assert report.formula == "20(z+1)^2"
    assert report.z_values == (1, 2, 3)
    assert report.pentagon_contact == "edge"
    expected_faces = [{5: 12, 6: 30}, {5: 12, 6: 80}, {5: 12, 6: 150}]
    for shell, faces in zip(report.family, expected_faces):
        assert shell.census.counts == faces


@pytest.mark.parametrize("family_name,expr", [("c60", "3"), ("c80", "2")])
def test_radii_grow_by_almost_the_translation_length(
        family_name, expr, c60_family, c80_family):
    report = c60_family if family_name == "c60" else c80_family
    radii = [shell.outer_radius for shell in report.family]
    assert radii == sorted(radii)
    # each layer sits one translation below the straight-line bound
    step_bound = float(parse_field_expr(expr)) * math.sqrt(2 + TAU_FLOAT)
    for inner, outer in zip(radii, radii[1:]):
        assert 0.9 * step_bound <= outer - inner <= step_bound


def test_pruned_iteration_matches_full_expansion():
    pruned = grow("c80", "2", pruned=True)
    full = grow("c80", "2", pruned=False)
    assert pruned.counts == full.counts
    for a, b in zip(pruned.family, full.family):
        assert {p.key() for p in a.points} == {p.key() for p in b.points}


# --- partial and failed families ---------------------------------------------

def test_partial_family_keeps_completed_members():
    start = builtin("dodecahedron")
    t = make_translation(start.symmetry, 2, parse_field_expr("tau"))
    report = build_onion(start, t, 2)
    assert not report.complete
    assert report.failure == "no trivalent outer cage at iteration 1"
    assert report.counts == (20,)
    assert report.formula is None  # 20 = 20*(0+1)^2 needs z = 0


def test_non_cage_start_fails_cleanly():
    start = builtin("icosahedron")
    t = make_translation(start.symmetry, 5, parse_field_expr("tau"))
    report = build_onion(start, t, 1)
    assert report.family == ()
    assert report.counts == ()
    assert report.failure == "start configuration is not a trivalent cage"
    assert not report.complete


def test_rejected_equal_radius_seed_is_not_a_cage():
    """The 80 points of the single-sphere parametrisation (20 corners plus
    the equal-radius 60-orbit) admit no trivalent cutoff, which is why the
    catalog uses the two-radius c80 instead."""
    from icofold.geometry import Vec3E
    from icofold.groups import K_TWOFOLD

    group = builtin("c80").symmetry
    two_tau = GoldenNumber(0, 2)
    corner = Vec3E.from_golden(two_tau, two_tau, two_tau, K_TWOFOLD)
    corners = list(group.orbit(corner))
    assert len(corners) == 20
    equal = list(group.orbit(C80_EQUAL_RADIUS_SEED))
    assert len(equal) == 60
    config = StartConfig("c80-equal-radius", corners + equal, group)
    assert len(config.vertices) == 80
    t = make_translation(group, 5, parse_field_expr("2"))
    report = build_onion(config, t, 1)
    assert report.failure == "start configuration is not a trivalent cage"


def test_perturbed_seed_breaks_the_family():
    """Moving the 60-orbit seed by one unit in its last coordinate loses
    the mirror stabilizer (orbit 120, not 60) and the family with it."""
    from icofold.geometry import Vec3E
    from icofold.groups import K_TWOFOLD

    group = builtin("c80").symmetry
    two_tau = GoldenNumber(0, 2)
    corner = Vec3E.from_golden(two_tau, two_tau, two_tau, K_TWOFOLD)
    bad = Vec3E.from_golden(GoldenNumber(2, 0), GoldenNumber(4, 0),
                            GoldenNumber(2, 1), K_TWOFOLD)
    points = list(group.orbit(corner)) + list(group.orbit(bad))
    assert len(points) == 140
    config = StartConfig("c80-perturbed", points, group)
    t = make_translation(group, 5, parse_field_expr("2"))
    report = build_onion(config, t, 1)
    assert not report.complete
    assert report.counts == ()


# --- formulas and report structure ---------------------------------------------

@pytest.mark.parametrize(
    "tag,z,expected",
    [
        ("60z^2", 1, 60), ("60z^2", 2, 240), ("60z^2", 3, 540),
        ("60z^2", 4, 960),
        ("20(z+1)^2", 1, 80), ("20(z+1)^2", 2, 180), ("20(z+1)^2", 3, 320),
        ("20(z+1)^2", 4, 500),
    ],
)
def test_family_formula_values(tag, z, expected):
    assert family_formula(tag, z) == expected


def test_family_formula_rejects_bad_arguments():
    with pytest.raises(ValueError, match="z = 1"):
        family_formula("60z^2", 0)
    with pytest.raises(ValueError, match="60z\\^2"):
        family_formula("30z^3", 2)
    assert FAMILY_FORMULAS == ("60z^2", "20(z+1)^2")


def test_report_requires_increasing_counts():
    start = builtin("c60")
    t = make_translation(start.symmetry, 5, parse_field_expr("3"))
    census = FaceCensus(())
    shells = tuple(
        OnionShell(i, 60, 5.0, census, 1.0, None, ())
        for i in range(2)
    )
    with pytest.raises(ValueError, match="strictly increase"):
        OnionReport(start, t, shells, None)


def test_report_as_dict(c60_family):
    payload = c60_family.as_dict()
    assert payload["start"] == "c60"
    assert payload["fold"] == 5
    assert payload["length"] == "3"
    assert payload["formula"] == "60z^2"
    assert payload["complete"] is True
    assert payload["failure"] is None
    rows = payload["family"]
    assert [row["iteration"] for row in rows] == [0, 1, 2]
    assert [row["z"] for row in rows] == [1, 2, 3]
    assert [row["count"] for row in rows] == [60, 240, 540]
    assert [row["edges"] for row in rows] == [90, 360, 810]
    for row in rows:
        assert row["trivalent"] is True
        assert set(row["faces"]) == {"5", "6", "other"}
        assert row["faces"]["5"] == 12
        assert row["faces"]["other"] == 0


def test_iterations_must_be_positive():
    start = builtin("c60")
    t = make_translation(start.symmetry, 5, parse_field_expr("3"))
    with pytest.raises(ValueError, match="iteration"):
        build_onion(start, t, 0)
