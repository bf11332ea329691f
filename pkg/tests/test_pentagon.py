"""Exact plane pentagon arrays under the five-fold rotation group."""

import numpy as np
import pytest

from icofold.golden import ExtNumber, GoldenNumber, ONE, parse_field_expr
from icofold.pentagon import (
    PENTAGON_RADICAND,
    Vec2E,
    pentagon_array,
    pentagon_vertices,
    rotate,
    rotation72,
)


def ext(a, b, p=0, q=0):
    return ExtNumber(GoldenNumber(a, b), GoldenNumber(p, q),
                     PENTAGON_RADICAND)


def float_count(lam: float, direction: str = "vertex") -> int:
    """Independent float reconstruction of the array's distinct points."""
    ang = np.pi / 2 + 2 * np.pi * np.arange(5) / 5
    base = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    shift = np.array([0.0, lam if direction == "vertex" else -lam])
    chunks = [base]
    shifted = base + shift
    for k in range(5):
        th = 2 * np.pi * k / 5
        rot = np.array([[np.cos(th), -np.sin(th)],
                        [np.sin(th), np.cos(th)]])
        chunks.append(shifted @ rot.T)
    points = np.vstack(chunks)
    distinct: list[np.ndarray] = []
    for p in points:
        if not any(np.linalg.norm(p - q) < 1e-7 for q in distinct):
            distinct.append(p)
    return len(distinct)


# --- exact rotation -------------------------------------------------------

def test_rotation_has_order_five():
    matrix = rotation72()
    v = Vec2E(ext(1, 2, 3, -1), ext(-2, 1, 0, 1))
    cycled = v
    seen = set()
    for _ in range(5):
        cycled = rotate(matrix, cycled)
        seen.add(cycled.key())
    assert cycled == v
    assert len(seen) == 5  # no shorter period on a generic point


def test_rotation_preserves_norm_exactly():
    matrix = rotation72()
    v = Vec2E(ext(1, 2, 3, -1), ext(-2, 1, 0, 1))
    assert rotate(matrix, v).norm2() == v.norm2()


def test_pentagon_vertices_on_unit_circle():
    verts = pentagon_vertices()
    assert len(verts) == 5
    assert len({v.key() for v in verts}) == 5
    unit = ExtNumber.from_golden(ONE, PENTAGON_RADICAND)
    assert all(v.norm2() == unit for v in verts)
    assert verts[0].as_floats() == (0.0, 1.0)


# --- coincidence counting ---------------------------------------------------

@pytest.mark.parametrize(
    "expr,expected",
    [
        ("tau", 25),
        ("tau-1", 25),
        ("1", 20),
        ("1/2", 30),
        ("2*tau", 30),
        ("2", 30),
    ],
)
def test_vertex_direction_counts(expr, expected):
    lam = parse_field_expr(expr)
    arr = pentagon_array(lam)
    assert arr.actual == expected
    assert arr.generic == 30
    assert arr.coincidences == 30 - expected
    assert arr.nontrivial == (expected < 30)
    assert arr.length == lam
    assert arr.actual == float_count(float(lam))


@pytest.mark.parametrize("expr,expected", [("tau", 25), ("1", 26)])
def test_edge_direction_counts(expr, expected):
    arr = pentagon_array(parse_field_expr(expr), direction="edge")
    assert arr.actual == expected
    assert arr.actual == float_count(float(parse_field_expr(expr)), "edge")


def test_actual_never_exceeds_generic():
    for num in range(1, 8):
        for den in (1, 2, 3):
            arr = pentagon_array(GoldenNumber(num, 0) / GoldenNumber(den, 0))
            assert 5 < arr.actual <= arr.generic == 30


def test_array_is_rotation_invariant():
    matrix = rotation72()
    arr = pentagon_array(parse_field_expr("tau"))
    keys = {p.key() for p in arr.points}
    assert {rotate(matrix, p).key() for p in arr.points} == keys


def test_tau_array_has_three_exact_radii():
    arr = pentagon_array(parse_field_expr("tau"))
    assert len({p.norm2().key() for p in arr.points}) == 3


def test_points_are_sorted_and_unique():
    arr = pentagon_array(parse_field_expr("tau"))
    floats = [p.as_floats() for p in arr.points]
    assert floats == sorted(floats)
    assert len({p.key() for p in arr.points}) == arr.actual


# --- argument validation ------------------------------------------------------

@pytest.mark.parametrize("bad", [GoldenNumber(0, 0), GoldenNumber(0, -1)])
def test_non_positive_length_rejected(bad):
    with pytest.raises(ValueError, match="positive"):
        pentagon_array(bad)


def test_unknown_direction_rejected():
    with pytest.raises(ValueError, match="direction"):
        pentagon_array(parse_field_expr("tau"), direction="corner")
