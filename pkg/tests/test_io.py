"""Serialization: XYZ/OFF float channels, exact CSV, canonical JSON."""

import math
import random

import pytest

from icofold.cages import CageGraph, face_census, trivalence_threshold_search
from icofold.configs import builtin
from icofold.engine import generate_array, make_translation, outer_cage
from icofold.export import (
    BOND_LENGTH,
    ExportError,
    ExportOptions,
    canonical_json,
    export_csv,
    export_off,
    export_xyz,
    provenance_comment,
    read_csv,
)
from icofold.golden import parse_field_expr
from icofold.pentagon import pentagon_array


def c60_graph():
    graph = trivalence_threshold_search(builtin("c60").vertices)
    assert graph is not None
    return graph


def parse_xyz(text):
    lines = text.splitlines()
    count = int(lines[0])
    rows = []
    for line in lines[2:2 + count]:
        tag, *coords = line.split()
        assert tag == "C"
        rows.append(tuple(float(c) for c in coords))
    return lines[1], rows


# --- XYZ ---------------------------------------------------------------

def test_xyz_structure():
    text = export_xyz(builtin("c60").vertices, comment="sixty vertices")
    lines = text.splitlines()
    assert lines[0] == "60"
    assert lines[1] == "sixty vertices"
    assert len(lines) == 62
    assert text.endswith("\n")
    comment, rows = parse_xyz(text)
    assert len(rows) == 60 and all(len(r) == 3 for r in rows)
    # one orbit: every point sits on the same sphere
    radii = [math.fsum(c * c for c in r) for r in rows]
    assert max(radii) - min(radii) < 1e-4


def test_xyz_matches_input_coordinates():
    points = builtin("dodecahedron").vertices
    _, rows = parse_xyz(export_xyz(points, ExportOptions(precision=12)))
    expected = sorted(tuple(p.as_floats()) for p in points)
    for got, want in zip(sorted(rows), expected):
        assert got == pytest.approx(want, abs=1e-9)


def test_xyz_input_order_does_not_matter():
    points = list(builtin("c60").vertices)
    shuffled = points[:]
    random.Random(7).shuffle(shuffled)
    assert export_xyz(points) == export_xyz(shuffled)


def test_xyz_bond_scaling_sets_min_distance():
    text = export_xyz(builtin("c60").vertices, ExportOptions(scale="bond"))
    _, rows = parse_xyz(text)
    dmin = min(math.dist(a, b)
               for i, a in enumerate(rows) for b in rows[i + 1:])
    assert dmin == pytest.approx(BOND_LENGTH, abs=1e-4)
    # the built-in c60 bond is exactly 2, so the factor is exactly 0.71
    assert "C " + " ".join(
        f"{0.71 * c:.6f}" for c in builtin("c60").vertices[0].as_floats()
    ) in text


def test_xyz_pads_plane_points_to_three_columns():
    arr = pentagon_array(parse_field_expr("tau"))
    _, rows = parse_xyz(export_xyz(arr.points))
    assert all(len(r) == 3 and r[2] == 0.0 for r in rows)


def test_xyz_empty_is_an_error():
    with pytest.raises(ExportError, match="nothing"):
        export_xyz([])


def test_bond_scaling_needs_two_distinct_points():
    v = builtin("c60").vertices[0]
    with pytest.raises(ExportError, match="two points"):
        export_xyz([v], ExportOptions(scale="bond"))
    with pytest.raises(ExportError, match="distinct"):
        export_xyz([v, v], ExportOptions(scale="bond"))


# --- OFF ---------------------------------------------------------------

def parse_off(text):
    lines = text.splitlines()
    assert lines[0] == "OFF"
    nv, ne, nf = (int(x) for x in lines[1].split())
    verts = [tuple(float(c) for c in line.split())
             for line in lines[2:2 + nv]]
    faces = []
    for line in lines[2 + nv:2 + nv + nf]:
        nums = [int(x) for x in line.split()]
        assert nums[0] == len(nums) - 1
        faces.append(tuple(nums[1:]))
    assert len(lines) == 2 + nv + nf
    return (nv, ne, nf), verts, faces


def test_off_c60():
    text = export_off(c60_graph())
    (nv, ne, nf), verts, faces = parse_off(text)
    assert (nv, ne, nf) == (60, 90, 32)
    sizes = sorted(len(f) for f in faces)
    assert sizes == [5] * 12 + [6] * 20
    assert all(f[0] == min(f) for f in faces)  # canonical rotation
    for face in faces:  # outward orientation: normal agrees with centroid
        pts = [verts[i] for i in face]
        normal = [0.0, 0.0, 0.0]
        for i in range(len(pts)):
            a, b = pts[i], pts[(i + 1) % len(pts)]
            normal[0] += a[1] * b[2] - a[2] * b[1]
            normal[1] += a[2] * b[0] - a[0] * b[2]
            normal[2] += a[0] * b[1] - a[1] * b[0]
        centroid = [sum(c) / len(pts) for c in zip(*pts)]
        assert sum(a * b for a, b in zip(normal, centroid)) > 0


def test_off_c240_counts():
    start = builtin("c60")
    t = make_translation(start.symmetry, 5, parse_field_expr("3"))
    finding = outer_cage(generate_array(start, t, 1))
    text = export_off(finding.graph, finding.census)
    assert text.splitlines()[1] == "240 360 122"


def test_off_requires_a_trivalent_cage():
    points = builtin("icosahedron").vertices[:4]
    coords = __import__("numpy").array([p.as_floats() for p in points])
    square = CageGraph(coords, ((0, 1), (1, 2), (2, 3), (3, 0)), 1.0,
                       points=points)
    with pytest.raises(ExportError, match="trivalent"):
        export_off(square)


def test_off_is_deterministic():
    assert export_off(c60_graph()) == export_off(c60_graph())


# --- CSV (exact round-trip) ----------------------------------------------

def test_csv_roundtrip_3d():
    points = builtin("c80").vertices
    text = export_csv(points)
    assert text.startswith("# radicand: 1\n")
    back = read_csv(text)
    assert {p.key() for p in back} == {p.key() for p in points}
    assert export_csv(back) == text


def test_csv_roundtrip_2d_with_radicals():
    arr = pentagon_array(parse_field_expr("tau"))
    text = export_csv(arr.points)
    assert text.splitlines()[1] == "x,y"
    back = read_csv(text)
    assert {p.key() for p in back} == {p.key() for p in arr.points}
    assert export_csv(back) == text


def test_csv_roundtrip_after_translation():
    start = builtin("dodecahedron")
    t = make_translation(start.symmetry, 5, parse_field_expr("tau"))
    array = generate_array(start, t, 1)
    text = export_csv(array.points)
    assert {p.key() for p in read_csv(text)} == {p.key() for p in array.points}


def test_csv_missing_radicand_header():
    with pytest.raises(ExportError, match="radicand"):
        read_csv("x,y,z\n1,2,3\n")


def test_csv_wrong_column_count():
    text = "# radicand: 1\nx,y,z\n1,2\n"
    with pytest.raises(ExportError, match="columns"):
        read_csv(text)


def test_csv_empty_is_an_error():
    with pytest.raises(ExportError, match="nothing"):
        export_csv([])


# --- JSON and options -------------------------------------------------------

def test_canonical_json_bytes():
    assert canonical_json({"b": 1, "a": [1, 2]}) == (
        '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    )
    assert canonical_json({"a": [1, 2], "b": 1}) == canonical_json(
        {"b": 1, "a": [1, 2]}
    )


def test_provenance_comment_fields():
    assert provenance_comment("c60", 5, "3", 1, (1.0, 2.5)) == (
        "start=c60 fold=5 length=3 depth=1 band=1.000000..2.500000"
    )
    assert provenance_comment() == "exact icosahedral point set"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"format": "pdb"},
        {"scale": "angstrom"},
        {"precision": 0},
        {"precision": 18},
    ],
)
def test_export_options_validation(kwargs):
    with pytest.raises(ExportError):
        ExportOptions(**kwargs)


def test_face_census_feeds_off_export():
    graph = c60_graph()
    census = face_census(graph)
    assert export_off(graph, census) == export_off(graph)
