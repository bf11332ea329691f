"""Affine translations along symmetry axes and the point arrays they make.

A translation of exact length lambda along an axis family turns into the
full set of translated copies {x + t_i} because the start configuration is
invariant under the group: closing one translated copy under the group is
the same as translating along every axis direction at once.  Depth-k
arrays therefore collect sums of up to k translation vectors without
building an exponential word tree.

Translation steps are lambda times the golden base vector of each axis
((0,1,tau), (1,1,1), (tau,0,0)), not lambda times a unit vector: only the
base-vector steps land back in the golden lattice the start points live
in, so only they can produce coinciding points at all.

Shells partition an array by exact squared radius; bands cluster shells
whose float radii sit within a relative gap.  The cage surfaces the bands
approximate are detected separately (cages.detect_cage) because no single
gap value reproduces every known surface.
"""

from __future__ import annotations

import math
from itertools import combinations_with_replacement

from . import cages
from .configs import StartConfig
from .geometry import Vec3E, norm2
from .golden import ExtNumber, GoldenNumber, TAU, format_golden
from .groups import FOLD_RADICANDS, PointGroup

__all__ = [
    "PointBudgetError",
    "AffineTranslation",
    "PointArray",
    "Shell",
    "Band",
    "make_translation",
    "generate_array",
    "shells",
    "bands",
    "outer_cage",
    "generic_cardinality",
    "is_nontrivial",
    "ScanSpec",
    "parse_scan_spec",
    "DEFAULT_SCAN_SPEC",
    "classify_length",
    "classify_scan",
    "DEFAULT_BAND_GAP",
    "DEFAULT_POINT_CAP",
]

# Calibrated so the outermost band of every depth-1 table row that has a
# cage matches that cage's shell span where possible (the c60 rows allow
# 0.1057..0.1186, the fold-3 dodecahedron rows 0.0964..0.2023).  No value
# covers every row at once -- the 80-point row needs >= 0.186 -- which is
# why cage detection does not reuse the band split.
DEFAULT_BAND_GAP = 0.11
DEFAULT_POINT_CAP = 10 ** 6


class PointBudgetError(RuntimeError):
    """Array generation would exceed the configured point cap."""


class AffineTranslation:
    """A translation length attached to every axis direction of one fold."""

    def __init__(self, fold: int, length: GoldenNumber,
                 directions: tuple[Vec3E, ...]) -> None:
        self.fold = fold
        self.length = length
        self.directions = directions
        self.vectors: tuple[Vec3E, ...] = tuple(
            d.scale(length) for d in directions
        )

    @property
    def radicand(self) -> GoldenNumber:
        return self.directions[0].radicand

    def __repr__(self) -> str:
        return (f"AffineTranslation(fold={self.fold}, "
                f"length={format_golden(self.length)}, "
                f"{len(self.vectors)} vectors)")


def make_translation(group: PointGroup, fold: int,
                     length: GoldenNumber) -> AffineTranslation:
    """Attach a positive exact length to the base-vector orbit of a fold."""
    if fold not in FOLD_RADICANDS:
        raise ValueError(f"unsupported fold {fold}; expected 2, 3, or 5")
    if length.sign() <= 0:
        raise ValueError("translation length must be positive")
    return AffineTranslation(fold, length, group.translation_orbit(fold))


class Shell:
    """All array points at one exact squared radius."""

    __slots__ = ("radius2", "points")

    def __init__(self, radius2: ExtNumber, points: tuple[Vec3E, ...]) -> None:
        self.radius2 = radius2
        self.points = points

    @property
    def radius(self) -> float:
        return math.sqrt(float(self.radius2))

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"Shell(r2={self.radius2}, {len(self.points)} points)"


class Band:
    """Consecutive shells whose float radii cluster within the gap."""

    __slots__ = ("shells",)

    def __init__(self, shell_group: tuple[Shell, ...]) -> None:
        self.shells = shell_group

    @property
    def rmin(self) -> float:
        return self.shells[0].radius

    @property
    def rmax(self) -> float:
        return self.shells[-1].radius

    @property
    def points(self) -> tuple[Vec3E, ...]:
        out: list[Vec3E] = []
        for shell in self.shells:
            out.extend(shell.points)
        return tuple(out)

    def __len__(self) -> int:
        return sum(len(shell) for shell in self.shells)

    def __repr__(self) -> str:
        return (f"Band(r={self.rmin:.4f}..{self.rmax:.4f}, "
                f"{len(self)} points)")


class PointArray:
    """A deduplicated, exactly symmetric point set with shell structure."""

    def __init__(self, start: StartConfig, translation: AffineTranslation,
                 depth: int, shell_list: tuple[Shell, ...]) -> None:
        self.start = start
        self.translation = translation
        self.depth = depth
        self.shells = shell_list

    @property
    def points(self) -> tuple[Vec3E, ...]:
        out: list[Vec3E] = []
        for shell in self.shells:
            out.extend(shell.points)
        return tuple(out)

    def __len__(self) -> int:
        return sum(len(shell) for shell in self.shells)

    def __repr__(self) -> str:
        return (f"PointArray({self.start.name}, fold {self.translation.fold}, "
                f"depth {self.depth}, {len(self)} points)")


def build_shells(points) -> tuple[Shell, ...]:
    """Group points by exact squared radius, ascending.

    Points inside a shell are ordered by float coordinates (exact key as
    final tie-break) so output is deterministic.
    """
    by_radius: dict[tuple, list[Vec3E]] = {}
    radii: dict[tuple, ExtNumber] = {}
    for p in points:
        r2 = norm2(p)
        key = r2.key()
        by_radius.setdefault(key, []).append(p)
        radii.setdefault(key, r2)
    ordered = sorted(radii.values())
    out = []
    for r2 in ordered:
        members = by_radius[r2.key()]
        members.sort(key=lambda p: (p.as_floats(), p.key()))
        out.append(Shell(r2, tuple(members)))
    return tuple(out)


def _offsets(translation: AffineTranslation, depth: int) -> list[Vec3E]:
    # all sums of up to `depth` translation vectors (multisets), exact dedup
    zero = Vec3E.from_golden(0, 0, 0, GoldenNumber(1, 0)).rebase(
        translation.radicand
    )
    seen: dict[tuple, Vec3E] = {zero.key(): zero}
    for j in range(1, depth + 1):
        for combo in combinations_with_replacement(translation.vectors, j):
            total = combo[0]
            for v in combo[1:]:
                total = total + v
            seen.setdefault(total.key(), total)
    return list(seen.values())


def generate_array(start: StartConfig, translation: AffineTranslation,
                   depth: int, cap: int = DEFAULT_POINT_CAP) -> PointArray:
    """Collect {x + (sum of at most `depth` translation vectors)} exactly."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    offsets = _offsets(translation, depth)
    budget = len(start.vertices) * len(offsets)
    if budget > cap:
        raise PointBudgetError(
            f"{budget} candidate points exceed the cap of {cap}"
        )
    base = [v.rebase(translation.radicand) for v in start.vertices]
    seen: dict[tuple, Vec3E] = {}
    for offset in offsets:
        for x in base:
            p = x + offset
            seen.setdefault(p.key(), p)
    return PointArray(start, translation, depth, build_shells(seen.values()))


def shells(array: PointArray) -> tuple[Shell, ...]:
    return array.shells


def bands(array_or_shells, gap: float = DEFAULT_BAND_GAP) -> tuple[Band, ...]:
    """Split the ascending shell sequence at relative radius gaps > gap."""
    if not 0 < gap < 0.5:
        raise ValueError("band gap must lie in (0, 0.5)")
    shell_list = (
        array_or_shells.shells
        if isinstance(array_or_shells, PointArray)
        else tuple(array_or_shells)
    )
    if not shell_list:
        return ()
    groups: list[list[Shell]] = [[shell_list[0]]]
    previous = shell_list[0].radius
    for shell in shell_list[1:]:
        radius = shell.radius
        if radius > 0 and (radius - previous) / radius > gap:
            groups.append([])
        groups[-1].append(shell)
        previous = radius
    return tuple(Band(tuple(group)) for group in groups)


def outer_cage(array: PointArray) -> cages.CageFinding | None:
    """Detect the outermost cage surface of an array, if there is one."""
    return cages.detect_cage([shell.points for shell in array.shells])


def _multiset_count(n_directions: int, depth: int) -> int:
    return sum(math.comb(n_directions + j - 1, j) for j in range(depth + 1))


def generic_cardinality(start: StartConfig, translation: AffineTranslation,
                        depth: int = 1) -> int:
    """Array size when no points coincide: |X| * (1 + #directions) at depth 1."""
    return len(start.vertices) * _multiset_count(len(translation.vectors), depth)


def is_nontrivial(start: StartConfig, translation: AffineTranslation,
                  cap: int = DEFAULT_POINT_CAP) -> bool:
    """True when the depth-1 array has coinciding points."""
    actual = len(generate_array(start, translation, 1, cap=cap))
    return actual < generic_cardinality(start, translation)


class ScanSpec:
    """Grid of candidate lengths (a + b*tau)/c with a float cutoff."""

    def __init__(self, a_range=(-7, 7), b_range=(-6, 6),
                 c_values=(1, 2, 3, 4, 5), cutoff: float | None = None) -> None:
        self.a_range = (int(a_range[0]), int(a_range[1]))
        self.b_range = (int(b_range[0]), int(b_range[1]))
        self.c_values = tuple(sorted(set(int(c) for c in c_values)))
        if any(c <= 0 for c in self.c_values):
            raise ValueError("denominators must be positive")
        self.cutoff = cutoff  # None: 2x the start's outer radius

    def lengths(self, cutoff: float) -> list[GoldenNumber]:
        """Distinct positive candidate lengths with float value <= cutoff."""
        from fractions import Fraction

        seen: dict[tuple, GoldenNumber] = {}
        a_lo, a_hi = self.a_range
        b_lo, b_hi = self.b_range
        for c in self.c_values:
            for a in range(a_lo, a_hi + 1):
                for b in range(b_lo, b_hi + 1):
                    value = GoldenNumber(Fraction(a, c), Fraction(b, c))
                    if value.sign() <= 0 or float(value) > cutoff:
                        continue
                    seen.setdefault(value.key(), value)
        return sorted(seen.values())


def parse_scan_spec(text: str) -> ScanSpec:
    """Parse "a=-6..6,b=-6..6,c=1..5,max=3.5" (c also accepts 1;2;5)."""

    def int_range(value: str) -> tuple[int, int]:
        lo, _, hi = value.partition("..")
        if not _:
            n = int(lo)
            return (n, n)
        return (int(lo), int(hi))

    spec = ScanSpec()
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            name, _, value = part.partition("=")
            if not _:
                raise ValueError(f"expected name=value, got '{part}'")
            name = name.strip()
            value = value.strip()
            if name == "a":
                spec.a_range = int_range(value)
            elif name == "b":
                spec.b_range = int_range(value)
            elif name == "c":
                if ".." in value:
                    lo, hi = int_range(value)
                    spec.c_values = tuple(range(lo, hi + 1))
                else:
                    spec.c_values = tuple(
                        sorted(set(int(v) for v in value.split(";")))
                    )
                if any(c <= 0 for c in spec.c_values):
                    raise ValueError("denominators must be positive")
            elif name == "max":
                spec.cutoff = float(value)
            else:
                raise ValueError(f"unknown scan field '{name}'")
    except ValueError as exc:
        raise ValueError(f"bad scan spec '{text}': {exc}") from exc
    return spec


# The stock grid: (a + b*tau)/c for a in -7..7, b in -6..6, c in 1..5,
# capped at twice the start radius.  The rational part reaches 7 so the
# grid covers every catalogued length, (7+tau)/5 included.
DEFAULT_SCAN_SPEC = ScanSpec()


def _band_report(band: Band, is_outer: bool) -> dict:
    """Describe one band; the trivalence flag is asked of the outer band.

    A translation "results in" a three-coordinated shell when the new
    outer surface of its array bonds trivalently, so only the outermost
    band carries the flag.  Interior bands routinely contain 3-regular
    sub-orbits (scaled dodecahedra and the like) that say nothing about
    the extension, so they report trivalent: false by definition.
    """
    entry = {
        "rmin": round(band.rmin, 9),
        "rmax": round(band.rmax, 9),
        "count": len(band),
        "trivalent": False,
    }
    cage = cages.trivalence_threshold_search(band.points) if is_outer else None
    if cage is not None:
        entry["trivalent"] = True
        entry["edge_ratio"] = round(cage.edge_ratio, 9)
        try:
            census = cages.face_census(cage)
        except cages.EulerError:
            entry["faces"] = None
        else:
            entry["faces"] = {
                "5": census.counts.get(5, 0),
                "6": census.counts.get(6, 0),
                "other": census.other_count,
            }
    return entry


def cage_report(finding: cages.CageFinding | None,
                array: PointArray) -> dict | None:
    """JSON-ready summary of a cage finding against its source array."""
    if finding is None:
        return None
    used = [array.shells[i] for i in finding.shell_indices]
    dropped = finding.dropped_index
    return {
        "count": finding.vertex_count,
        "rmin": round(used[0].radius, 9),
        "rmax": round(used[-1].radius, 9),
        "shells": len(used),
        "dropped_shell_radius": (
            round(array.shells[dropped].radius, 9)
            if dropped is not None else None
        ),
        "edges": finding.graph.edge_count,
        "edge_ratio": round(finding.graph.edge_ratio, 9),
        "faces": {
            "5": finding.census.pentagons,
            "6": finding.census.hexagons,
            "other": finding.census.other_count,
        },
        "pentagon_contact": cages.pentagon_contact_signature(finding.census),
    }


def classify_length(start: StartConfig, translation: AffineTranslation,
                    depth: int = 1, band_gap: float = DEFAULT_BAND_GAP,
                    cap: int = DEFAULT_POINT_CAP,
                    with_cage: bool = True) -> dict:
    """One classification row: cardinalities plus band and cage findings.

    `with_cage=False` skips the cage search (scans over hundreds of
    lengths use the cheaper per-band trivalence flags instead).
    """
    array = generate_array(start, translation, depth, cap=cap)
    generic = generic_cardinality(start, translation, depth)
    actual = len(array)
    split = bands(array, band_gap)
    row = {
        "start": start.name,
        "fold": translation.fold,
        "length": format_golden(translation.length),
        "length_float": round(float(translation.length), 9),
        "depth": depth,
        "generic": generic,
        "actual": actual,
        "nontrivial": actual < generic,
        "bands": [
            _band_report(band, i == len(split) - 1)
            for i, band in enumerate(split)
        ],
    }
    if with_cage:
        row["cage"] = cage_report(outer_cage(array), array)
    return row


def classify_scan(start: StartConfig, folds, spec: ScanSpec,
                  band_gap: float = DEFAULT_BAND_GAP,
                  cap: int = DEFAULT_POINT_CAP, threads: int = 1) -> list[dict]:
    """Classify every scan length along every requested fold.

    Rows are ordered by (fold, float length, exact key): deterministic for
    a fixed spec regardless of how the work is scheduled, so any worker
    count produces identical output.
    """
    cutoff = spec.cutoff
    if cutoff is None:
        cutoff = 2.0 * math.sqrt(float(start.radius2))
    lengths = spec.lengths(cutoff)
    if not lengths:
        raise ValueError("scan produced no candidate lengths")
    tasks = [(fold, length) for fold in sorted(folds) for length in lengths]

    def one_row(task) -> dict:
        fold, length = task
        translation = make_translation(start.symmetry, fold, length)
        return classify_length(start, translation, 1, band_gap, cap,
                               with_cage=False)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one_row, tasks))
    return [one_row(task) for task in tasks]
