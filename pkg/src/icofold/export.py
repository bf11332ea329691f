"""Serialize point sets, cages, and reports to XYZ, OFF, CSV, and JSON.

Two coordinate channels with different guarantees:

* XYZ and OFF carry floats at fixed precision for chemistry/geometry
  viewers (lossy but portable).
* CSV carries the exact field literals, so a written file parses back to
  the identical point set (lossless round-trip).

All writers emit identical bytes for identical inputs and options:
points are sorted into a canonical order, faces are canonicalized, and
JSON is dumped with fixed key order and separators.
"""

from __future__ import annotations

import json
import math

from . import cages
from .geometry import Vec3E
from .golden import GoldenNumber, format_ext, format_golden, parse_ext_expr
from .pentagon import Vec2E

__all__ = [
    "BOND_LENGTH",
    "ExportError",
    "ExportOptions",
    "provenance_comment",
    "export_xyz",
    "export_off",
    "export_csv",
    "read_csv",
    "canonical_json",
]

BOND_LENGTH = 1.42

_FORMATS = ("xyz", "off", "csv", "json")
_SCALES = ("raw", "bond")


class ExportError(ValueError):
    """A point set or cage cannot be written in the requested format."""


class ExportOptions:
    """Output format, coordinate scaling, and float precision."""

    __slots__ = ("format", "scale", "precision")

    def __init__(self, format: str = "xyz", scale: str = "raw",
                 precision: int = 6) -> None:
        if format not in _FORMATS:
            raise ExportError(f"unknown format '{format}'; "
                              f"expected one of {_FORMATS}")
        if scale not in _SCALES:
            raise ExportError(f"unknown scale mode '{scale}'; "
                              f"expected one of {_SCALES}")
        if not 1 <= int(precision) <= 17:
            raise ExportError("precision must be between 1 and 17 digits")
        self.format = format
        self.scale = scale
        self.precision = int(precision)


def provenance_comment(start: str | None = None, fold: int | None = None,
                       length: str | None = None, depth: int | None = None,
                       band: tuple[float, float] | None = None) -> str:
    """One-line description of where a point set came from."""
    parts = []
    if start is not None:
        parts.append(f"start={start}")
    if fold is not None:
        parts.append(f"fold={fold}")
    if length is not None:
        parts.append(f"length={length}")
    if depth is not None:
        parts.append(f"depth={depth}")
    if band is not None:
        parts.append(f"band={band[0]:.6f}..{band[1]:.6f}")
    return " ".join(parts) if parts else "exact icosahedral point set"


def _as_float_rows(points) -> list[tuple[float, ...]]:
    return [tuple(p.as_floats()) for p in points]


def _canonical_indices(points) -> list[int]:
    """Sort by radius then coordinates; exact keys break float ties."""
    rows = _as_float_rows(points)

    def sort_key(i: int):
        row = rows[i]
        return (math.fsum(c * c for c in row), row, str(points[i].key()))

    return sorted(range(len(points)), key=sort_key)


def _min_pairwise_distance(rows: list[tuple[float, ...]]) -> float:
    best = math.inf
    for i, a in enumerate(rows):
        for b in rows[i + 1:]:
            d = math.dist(a, b)
            if d < best:
                best = d
    return best


def _scale_factor(rows: list[tuple[float, ...]], opts: ExportOptions) -> float:
    if opts.scale == "raw":
        return 1.0
    if len(rows) < 2:
        raise ExportError("bond scaling needs at least two points")
    dmin = _min_pairwise_distance(rows)
    if dmin <= 0.0:
        raise ExportError("bond scaling needs distinct points")
    return BOND_LENGTH / dmin


def export_xyz(points, opts: ExportOptions | None = None,
               comment: str = "") -> str:
    """XYZ text: count line, provenance comment, one atom row per point."""
    opts = opts or ExportOptions("xyz")
    pts = list(points)
    if not pts:
        raise ExportError("nothing to export")
    order = _canonical_indices(pts)
    rows = _as_float_rows(pts)
    factor = _scale_factor(rows, opts)
    digits = opts.precision
    lines = [str(len(pts)), comment or provenance_comment()]
    for i in order:
        coords = rows[i]
        if len(coords) == 2:
            coords = (*coords, 0.0)
        lines.append("C " + " ".join(f"{factor * c:.{digits}f}"
                                     for c in coords))
    return "\n".join(lines) + "\n"


def _oriented_face(face: tuple[int, ...], coords) -> tuple[int, ...]:
    """Reverse the face if its normal points toward the origin."""
    verts = [coords[i] for i in face]
    n = len(verts)
    normal = [0.0, 0.0, 0.0]
    centroid = [0.0, 0.0, 0.0]
    for i in range(n):
        ax, ay, az = verts[i]
        bx, by, bz = verts[(i + 1) % n]
        normal[0] += ay * bz - az * by
        normal[1] += az * bx - ax * bz
        normal[2] += ax * by - ay * bx
        centroid[0] += ax / n
        centroid[1] += ay / n
        centroid[2] += az / n
    outward = sum(a * b for a, b in zip(normal, centroid))
    return face if outward >= 0.0 else tuple(reversed(face))


def _canonical_face(face: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate so the smallest vertex index leads (orientation kept)."""
    pivot = face.index(min(face))
    return face[pivot:] + face[:pivot]


def export_off(graph: cages.CageGraph,
               census: cages.FaceCensus | None = None,
               opts: ExportOptions | None = None) -> str:
    """OFF text for a trivalent cage with outward-oriented faces."""
    opts = opts or ExportOptions("off")
    if not graph.trivalent:
        raise ExportError("not a trivalent cage; OFF export needs one")
    if census is None:
        census = cages.face_census(graph)
    rows = _as_float_rows(graph.points)
    factor = _scale_factor(rows, opts)
    digits = opts.precision
    faces = sorted(
        _canonical_face(_oriented_face(face, rows)) for face in census.faces
    )
    lines = ["OFF", f"{graph.vertex_count} {graph.edge_count} {len(faces)}"]
    for coords in rows:
        lines.append(" ".join(f"{factor * c:.{digits}f}" for c in coords))
    for face in faces:
        lines.append(" ".join(str(n) for n in (len(face), *face)))
    return "\n".join(lines) + "\n"


def export_csv(points) -> str:
    """CSV of exact field literals; parses back to the same point set."""
    pts = list(points)
    if not pts:
        raise ExportError("nothing to export")
    three_d = hasattr(pts[0], "z")
    radicand = pts[0].radicand if three_d else pts[0].x.k
    lines = [f"# radicand: {format_golden(radicand)}",
             "x,y,z" if three_d else "x,y"]
    for i in _canonical_indices(pts):
        p = pts[i]
        cells = [format_ext(p.x), format_ext(p.y)]
        if three_d:
            cells.append(format_ext(p.z))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def read_csv(text: str) -> list:
    """Parse an exact-literal CSV back into vectors."""
    radicand: GoldenNumber | None = None
    points: list = []
    expected: int | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tag, _, value = line[1:].partition(":")
            if tag.strip() == "radicand":
                from .golden import parse_field_expr
                radicand = parse_field_expr(value.strip())
            continue
        cells = [c.strip() for c in line.split(",")]
        if cells in (["x", "y", "z"], ["x", "y"]):
            expected = len(cells)
            continue
        if radicand is None:
            raise ExportError("CSV is missing its '# radicand:' header")
        if expected is not None and len(cells) != expected:
            raise ExportError(f"expected {expected} columns, got {len(cells)}")
        parts = [parse_ext_expr(cell, radicand) for cell in cells]
        if len(parts) == 3:
            points.append(Vec3E(*parts))
        elif len(parts) == 2:
            points.append(Vec2E(*parts))
        else:
            raise ExportError(f"expected 2 or 3 columns, got {len(parts)}")
    return points


def canonical_json(payload, indent: int = 2) -> str:
    """JSON with fixed key order and spacing: identical input, identical
    bytes."""
    return json.dumps(payload, sort_keys=True, indent=indent,
                      separators=(",", ": ")) + "\n"
