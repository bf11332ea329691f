"""Tests for the start-configuration catalog and seed files."""

import pytest

from icofold.configs import BUILTIN_NAMES, ConfigError, StartConfig, builtin, load_custom
from icofold.geometry import Vec3E, dist2, mat_apply, norm2
from icofold.golden import ExtNumber, GoldenNumber, K_TWOFOLD, TAU
from icofold.groups import full_group


def golden_ext(a, b=0) -> ExtNumber:
    return ExtNumber.from_golden(GoldenNumber(a, b), K_TWOFOLD)


def norm2_is(v: Vec3E, value: GoldenNumber) -> bool:
    return norm2(v) == ExtNumber.from_golden(value, v.radicand)


CATALOG = {
    "icosahedron": (12, (golden_ext(2, 1),)),
    "dodecahedron": (20, (golden_ext(3),)),
    "icosidodecahedron": (30, (golden_ext(1, 1),)),  # tau^2 = 1 + tau
    "c60": (60, (golden_ext(10, 9),)),
    "c80": (80, (golden_ext(12, 12), golden_ext(28, 12))),
}


class TestBuiltins:
    def test_catalog_cardinalities_and_radii(self):
        for name, (count, spectrum) in CATALOG.items():
            config = builtin(name)
            assert len(config) == count
            assert config.radius2_spectrum == spectrum

    def test_builtin_names_constant_matches(self):
        assert set(BUILTIN_NAMES) == set(CATALOG)

    def test_unknown_name_raises(self):
        with pytest.raises(ConfigError):
            builtin("buckyball")

    def test_invariance_under_every_group_element(self):
        group = full_group()
        for name in ("icosahedron", "dodecahedron", "c80"):
            config = builtin(name)
            keys = {v.key() for v in config.vertices}
            for g in group:
                assert all(mat_apply(g, v).key() in keys for v in config.vertices)

    def test_c60_is_equilateral_and_trivalent_by_exact_distance(self):
        config = builtin("c60")
        vertices = config.vertices
        four = golden_ext(4)
        for v in vertices:
            gaps = [dist2(v, w) for w in vertices if w is not v]
            at_edge = sum(1 for d in gaps if d == four)
            assert at_edge == 3
            assert all((d - four).sign() >= 0 for d in gaps)

    def test_c80_contains_scaled_cube_corner(self):
        config = builtin("c80")
        corner = Vec3E.from_golden(2 * TAU, 2 * TAU, 2 * TAU, K_TWOFOLD)
        assert corner.key() in {v.key() for v in config.vertices}

    def test_c80_orbit_split_is_20_plus_60(self):
        config = builtin("c80")
        inner = [v for v in config.vertices if norm2_is(v, GoldenNumber(12, 12))]
        outer = [v for v in config.vertices if norm2_is(v, GoldenNumber(28, 12))]
        assert len(inner) == 20 and len(outer) == 60

    def test_c80_seed_lies_on_mirror_plane(self):
        # the 60-orbit seed (2,4,2+2tau) satisfies x - tau^2*y + tau*z = 0
        # exactly, and is one fold-5 base step from the corner 2*(1,1,1)
        seed = Vec3E.from_golden(
            GoldenNumber(2, 0), GoldenNumber(4, 0), GoldenNumber(2, 2),
            K_TWOFOLD,
        )
        value = seed.x - seed.y.mul_golden(TAU * TAU) + seed.z.mul_golden(TAU)
        assert value.is_zero()
        assert seed.key() in {v.key() for v in builtin("c80").vertices}
        step = seed + (-Vec3E.from_golden(2, 2, 2, K_TWOFOLD))
        assert step == Vec3E.from_golden(
            GoldenNumber(0, 0), GoldenNumber(2, 0), GoldenNumber(0, 2),
            K_TWOFOLD,
        )

    def test_c80_is_a_trivalent_cage_with_small_edge_spread(self):
        from icofold.cages import face_census, trivalence_threshold_search

        cage = trivalence_threshold_search(builtin("c80").vertices)
        assert cage is not None and cage.trivalent
        assert cage.edge_ratio < 1.25
        assert face_census(cage).counts == {5: 12, 6: 30}

    def test_c80_equal_radius_seed_is_recorded_but_not_catalogued(self):
        from icofold.configs import C80_EQUAL_RADIUS_SEED

        config = builtin("c80")
        keys = {v.key() for v in config.vertices}
        assert C80_EQUAL_RADIUS_SEED.key() not in keys
        # it does share the corner sphere...
        assert norm2_is(C80_EQUAL_RADIUS_SEED, GoldenNumber(12, 12))
        # ...but 20 corners + its 60-orbit admit no trivalent cutoff
        from icofold.cages import trivalence_threshold_search
        from icofold.groups import full_group

        group = full_group()
        corners = group.orbit(
            Vec3E.from_golden(2 * TAU, 2 * TAU, 2 * TAU, K_TWOFOLD)
        )
        orbit = group.orbit(C80_EQUAL_RADIUS_SEED)
        assert len(orbit) == 60
        assert trivalence_threshold_search(corners + orbit) is None

    def test_constructor_deduplicates(self):
        config = builtin("icosahedron")
        doubled = StartConfig(
            "doubled", config.vertices + config.vertices, config.symmetry
        )
        assert len(doubled) == 12


class TestCustomSeeds:
    def test_single_seed_with_closure(self, tmp_path):
        path = tmp_path / "ico.txt"
        path.write_text("@closure on\n0,1,tau\n")
        config = load_custom(str(path))
        assert len(config) == 12
        assert config.radius2_spectrum == (golden_ext(2, 1),)
        assert config.name == "ico"

    def test_cube_corner_seed_closes_to_dodecahedron(self, tmp_path):
        path = tmp_path / "dodec.txt"
        path.write_text("# one seed is enough\n@closure on\n1,1,1\n")
        assert len(load_custom(str(path))) == 20

    def test_malformed_token_raises(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("@closure on\n0,1,taau\n")
        with pytest.raises(ConfigError) as info:
            load_custom(str(path))
        assert "bad.txt:2" in str(info.value)

    def test_full_list_without_closure(self, tmp_path):
        lines = [
            ",".join(str(c) for c in v) for v in builtin("icosahedron").vertices
        ]
        path = tmp_path / "explicit.txt"
        path.write_text("@closure off\n" + "\n".join(lines) + "\n")
        assert len(load_custom(str(path))) == 12

    def test_incomplete_list_without_closure_raises(self, tmp_path):
        path = tmp_path / "partial.txt"
        path.write_text("0,1,tau\n")
        with pytest.raises(ConfigError):
            load_custom(str(path))

    def test_wrong_arity_raises(self, tmp_path):
        path = tmp_path / "arity.txt"
        path.write_text("1,2\n")
        with pytest.raises(ConfigError):
            load_custom(str(path))

    def test_empty_file_raises(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n")
        with pytest.raises(ConfigError):
            load_custom(str(path))

    def test_missing_file_raises(self):
        with pytest.raises(ConfigError):
            load_custom("/nonexistent/seeds.txt")

    def test_unknown_directive_raises(self, tmp_path):
        path = tmp_path / "directive.txt"
        path.write_text("@spin up\n1,1,1\n")
        with pytest.raises(ConfigError):
            load_custom(str(path))

    def test_fractional_and_expression_coordinates(self, tmp_path):
        path = tmp_path / "expr.txt"
        path.write_text("@closure on\n(7+tau)/5, tau^2, 1/2\n")
        config = load_custom(str(path))
        assert len(config) % 1 == 0 and len(config) >= 60
