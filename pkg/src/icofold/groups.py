"""Icosahedral point groups as exact matrix sets.

The rotation group I (order 60) is generated by a cyclic coordinate
permutation R3 and a 5-fold rotation B5 whose entries lie in (1/2)Q(tau);
adjoining -identity gives the full group I_h (order 120).  Closure is a
breadth-first product walk with exact dedup, so group order, axis counts,
orbits, and stabilizers are all certified in integer arithmetic.

Axes are found by orbiting one canonical representative per fold (a
5-fold axis through an icosahedron vertex, a 3-fold axis through (1,1,1),
a 2-fold axis through (1,0,0)) rather than by eigendecomposition.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import Mat3G, Vec3E, mat_apply, mat_det, mat_mul
from .golden import (
    K_FIVEFOLD,
    K_THREEFOLD,
    K_TWOFOLD,
    ExtNumber,
    GoldenNumber,
    ONE,
    TAU,
    ZERO,
)

__all__ = [
    "ClosureBoundError",
    "NonOrthogonalGeneratorError",
    "PointGroup",
    "generate_closure",
    "rotation_group",
    "full_group",
    "GEN_R3",
    "GEN_B5",
    "FOLD_RADICANDS",
]

HALF = Fraction(1, 2)

# Cyclic coordinate permutation (x,y,z) -> (z,x,y): a 3-fold rotation.
GEN_R3 = Mat3G([[0, 0, 1], [1, 0, 0], [0, 1, 0]])

# 5-fold rotation, trace tau = 1 + 2*cos(72 deg), determinant 1.
GEN_B5 = Mat3G([
    [GoldenNumber(-HALF, HALF), GoldenNumber(0, -HALF), GoldenNumber(HALF, 0)],
    [GoldenNumber(0, HALF), GoldenNumber(HALF, 0), GoldenNumber(-HALF, HALF)],
    [GoldenNumber(-HALF, 0), GoldenNumber(-HALF, HALF), GoldenNumber(0, HALF)],
])

FOLD_RADICANDS: dict[int, GoldenNumber] = {
    2: K_TWOFOLD,
    3: K_THREEFOLD,
    5: K_FIVEFOLD,
}


class ClosureBoundError(ValueError):
    """Closure exceeded its element bound (wrong generators, most likely)."""


class NonOrthogonalGeneratorError(ValueError):
    """A generator fails the exact orthogonality check."""


def _unit_axis_seed(fold: int) -> Vec3E:
    # Canonical unit vector along one axis of the given fold, expressed in
    # that fold's workspace radicand so translated points stay exact.
    if fold == 5:
        k = K_FIVEFOLD
        inv = k.inverse()  # 1/sqrt(k) = (1/k)*sqrt(k)
        return Vec3E(
            ExtNumber(ZERO, ZERO, k),
            ExtNumber(ZERO, inv, k),
            ExtNumber(ZERO, TAU * inv, k),
        )
    if fold == 3:
        k = K_THREEFOLD
        third = GoldenNumber(Fraction(1, 3), 0)
        c = ExtNumber(ZERO, third, k)
        return Vec3E(c, c, c)
    if fold == 2:
        return Vec3E.from_golden(1, 0, 0, K_TWOFOLD)
    raise ValueError(f"unsupported fold {fold}; expected 2, 3, or 5")


def _base_axis_seed(fold: int) -> Vec3E:
    # Canonical golden-integer vector along one axis of the given fold: an
    # icosahedron vertex (0,1,tau) for fold 5, a dodecahedron vertex
    # (1,1,1) for fold 3, an icosidodecahedron vertex (tau,0,0) for fold 2.
    # Translation steps stay inside the golden lattice of the start
    # configurations only with these base lengths (|w|^2 = 2+tau, 3, tau^2):
    # a unit-length step would add pure-radical coordinates that no golden
    # start point can ever cancel.
    if fold == 5:
        return Vec3E.from_golden(0, 1, TAU, K_FIVEFOLD)
    if fold == 3:
        return Vec3E.from_golden(1, 1, 1, K_THREEFOLD)
    if fold == 2:
        return Vec3E.from_golden(TAU, 0, 0, K_TWOFOLD)
    raise ValueError(f"unsupported fold {fold}; expected 2, 3, or 5")


def _positive_representative(v: Vec3E) -> Vec3E:
    for component in v:
        s = component.sign()
        if s < 0:
            return -v
        if s > 0:
            return v
    return v


class PointGroup:
    """An immutable, exactly closed matrix group with axis bookkeeping."""

    def __init__(self, name: str, elements: tuple[Mat3G, ...]) -> None:
        self.name = name
        self.elements = elements
        self._direction_cache: dict[int, tuple[Vec3E, ...]] = {}
        self._translation_cache: dict[int, tuple[Vec3E, ...]] = {}
        self._axes_cache: dict[int, tuple[Vec3E, ...]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: Mat3G) -> bool:
        return any(m == e for e in self.elements)

    def direction_orbit(self, fold: int) -> tuple[Vec3E, ...]:
        """All unit vectors along axes of this fold (antipodes distinct).

        12 directions for fold 5, 20 for fold 3, 30 for fold 2.
        """
        cached = self._direction_cache.get(fold)
        if cached is None:
            cached = self.orbit(_unit_axis_seed(fold))
            self._direction_cache[fold] = cached
        return cached

    def translation_orbit(self, fold: int) -> tuple[Vec3E, ...]:
        """Golden base vectors along every axis of this fold.

        The orbit of (0,1,tau), (1,1,1), or (tau,0,0): 12, 20, or 30
        vectors of squared length 2+tau, 3, or tau^2.  A translation of
        length lambda steps by lambda times these.
        """
        cached = self._translation_cache.get(fold)
        if cached is None:
            cached = self.orbit(_base_axis_seed(fold))
            self._translation_cache[fold] = cached
        return cached

    def axes(self, fold: int) -> tuple[Vec3E, ...]:
        """One unit representative per axis, antipodal pairs merged."""
        cached = self._axes_cache.get(fold)
        if cached is None:
            seen: dict[tuple, Vec3E] = {}
            for v in self.direction_orbit(fold):
                rep = _positive_representative(v)
                seen.setdefault(rep.key(), rep)
            cached = tuple(sorted(seen.values(), key=Vec3E.key))
            self._axes_cache[fold] = cached
        return cached

    def orbit(self, v: Vec3E) -> tuple[Vec3E, ...]:
        """The exact orbit of v, deduplicated, in a deterministic order."""
        seen: dict[tuple, Vec3E] = {}
        for g in self.elements:
            image = mat_apply(g, v)
            seen.setdefault(image.key(), image)
        return tuple(sorted(seen.values(), key=Vec3E.key))

    def orbit_of_set(self, points) -> tuple[Vec3E, ...]:
        """Union of the orbits of several points."""
        seen: dict[tuple, Vec3E] = {}
        for v in points:
            for g in self.elements:
                image = mat_apply(g, v)
                seen.setdefault(image.key(), image)
        return tuple(sorted(seen.values(), key=Vec3E.key))

    def stabilizer_order(self, v: Vec3E) -> int:
        return sum(1 for g in self.elements if mat_apply(g, v) == v)

    def element_order(self, m: Mat3G) -> int:
        identity = Mat3G.identity()
        power = m
        n = 1
        while power != identity:
            power = mat_mul(power, m)
            n += 1
            if n > self.order:
                raise ValueError("element order exceeds group order")
        return n

    def order_histogram(self) -> dict[int, int]:
        histogram: dict[int, int] = {}
        for m in self.elements:
            n = self.element_order(m)
            histogram[n] = histogram.get(n, 0) + 1
        return dict(sorted(histogram.items()))

    def rotation_count(self) -> int:
        one = ONE
        return sum(1 for m in self.elements if mat_det(m) == one)


def generate_closure(
    generators: list[Mat3G], bound: int = 200, name: str = ""
) -> PointGroup:
    """Breadth-first closure of the generators under multiplication.

    Deterministic: elements appear in generation (level) order, each level
    sorted by canonical matrix key.  Raises ClosureBoundError once more
    than `bound` elements appear, and NonOrthogonalGeneratorError for a
    generator with M^T M != identity.
    """
    for g in generators:
        if not g.is_orthogonal():
            raise NonOrthogonalGeneratorError(f"generator is not orthogonal: {g!r}")
    identity = Mat3G.identity()
    elements: dict[tuple, Mat3G] = {identity.key(): identity}
    ordered: list[Mat3G] = [identity]
    frontier: list[Mat3G] = [identity]
    while frontier:
        discovered: dict[tuple, Mat3G] = {}
        for m in frontier:
            for g in generators:
                product = mat_mul(m, g)
                key = product.key()
                if key not in elements and key not in discovered:
                    discovered[key] = product
        frontier = [discovered[key] for key in sorted(discovered)]
        for m in frontier:
            elements[m.key()] = m
            ordered.append(m)
        if len(ordered) > bound:
            raise ClosureBoundError(
                f"closure exceeded bound {bound}; check the generators"
            )
    return PointGroup(name, tuple(ordered))


_CACHE: dict[str, PointGroup] = {}


def rotation_group() -> PointGroup:
    """The 60 icosahedral rotations I."""
    group = _CACHE.get("I")
    if group is None:
        group = generate_closure([GEN_R3, GEN_B5], name="I")
        _CACHE["I"] = group
    return group


def full_group() -> PointGroup:
    """The full icosahedral group I_h of order 120 (adds -identity)."""
    group = _CACHE.get("I_h")
    if group is None:
        group = generate_closure(
            [GEN_R3, GEN_B5, -Mat3G.identity()], name="I_h"
        )
        _CACHE["I_h"] = group
    return group
