"""Exact 3-vectors and 3x3 matrices for symmetry-group point geometry.

Vectors carry ExtNumber components sharing one workspace radicand, so
squared norms and distances are exact field elements.  Matrices carry
GoldenNumber entries only: every icosahedral rotation has entries in
(1/2)Q(tau), so group closure never leaves the golden field.  Applying a
matrix to a vector mixes the two via scalar multiplication, which keeps
the vector's radicand.
"""

from __future__ import annotations

from .golden import ExtNumber, GoldenNumber

__all__ = [
    "Vec3E",
    "Mat3G",
    "dot",
    "norm2",
    "dist2",
    "mat_apply",
    "mat_mul",
    "mat_det",
]


class Vec3E:
    """An exact point or direction (x, y, z) with a shared radicand."""

    __slots__ = ("x", "y", "z", "_hash")

    def __init__(self, x: ExtNumber, y: ExtNumber, z: ExtNumber) -> None:
        x._same_k(y)
        x._same_k(z)
        self.x = x
        self.y = y
        self.z = z
        self._hash = -1

    @classmethod
    def from_golden(cls, x, y, z, k: GoldenNumber) -> "Vec3E":
        """Build from radical-free coordinates in the workspace of k."""
        gx = GoldenNumber._lift(x)
        gy = GoldenNumber._lift(y)
        gz = GoldenNumber._lift(z)
        if gx is None or gy is None or gz is None:
            raise TypeError("coordinates must be GoldenNumber, int, or Fraction")
        return cls(
            ExtNumber.from_golden(gx, k),
            ExtNumber.from_golden(gy, k),
            ExtNumber.from_golden(gz, k),
        )

    @property
    def radicand(self) -> GoldenNumber:
        return self.x.k

    def key(self) -> tuple:
        return (self.x.key(), self.y.key(), self.z.key())

    def __add__(self, other: "Vec3E") -> "Vec3E":
        return Vec3E(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3E") -> "Vec3E":
        return Vec3E(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3E":
        return Vec3E(-self.x, -self.y, -self.z)

    def scale(self, s) -> "Vec3E":
        """Multiply by an ExtNumber or Q(tau) scalar."""
        if isinstance(s, GoldenNumber):
            return Vec3E(
                self.x.mul_golden(s), self.y.mul_golden(s), self.z.mul_golden(s)
            )
        return Vec3E(self.x * s, self.y * s, self.z * s)

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def rebase(self, k: GoldenNumber) -> "Vec3E":
        """Re-embed radical-free coordinates into another workspace."""
        return Vec3E(self.x.rebase(k), self.y.rebase(k), self.z.rebase(k))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec3E):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.z == other.z

    def __hash__(self) -> int:
        h = self._hash
        if h == -1:
            h = hash(self.key())
            if h == -1:
                h = -2
            self._hash = h
        return h

    def as_floats(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __repr__(self) -> str:
        return f"Vec3E({self.x}, {self.y}, {self.z})"


class Mat3G:
    """A 3x3 matrix with GoldenNumber entries, row-major and immutable."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows) -> None:
        rows = tuple(tuple(GoldenNumber._lift(e) for e in row) for row in rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("Mat3G needs 3 rows of 3 entries")
        if any(e is None for row in rows for e in row):
            raise TypeError("entries must be GoldenNumber, int, or Fraction")
        self.rows = rows
        self._hash = -1

    @classmethod
    def identity(cls) -> "Mat3G":
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def key(self) -> tuple:
        return tuple(e.key() for row in self.rows for e in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat3G):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h == -1:
            h = hash(self.key())
            if h == -1:
                h = -2
            self._hash = h
        return h

    def __neg__(self) -> "Mat3G":
        return Mat3G([[-e for e in row] for row in self.rows])

    def transpose(self) -> "Mat3G":
        r = self.rows
        return Mat3G([[r[0][0], r[1][0], r[2][0]],
                      [r[0][1], r[1][1], r[2][1]],
                      [r[0][2], r[1][2], r[2][2]]])

    def trace(self) -> GoldenNumber:
        r = self.rows
        return r[0][0] + r[1][1] + r[2][2]

    def is_orthogonal(self) -> bool:
        return mat_mul(self.transpose(), self) == Mat3G.identity()

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"Mat3G([{body}])"


def dot(u: Vec3E, v: Vec3E) -> ExtNumber:
    return u.x * v.x + u.y * v.y + u.z * v.z


def norm2(v: Vec3E) -> ExtNumber:
    return dot(v, v)


def dist2(u: Vec3E, v: Vec3E) -> ExtNumber:
    return norm2(u - v)


def mat_apply(m: Mat3G, v: Vec3E) -> Vec3E:
    r = m.rows
    x, y, z = v.x, v.y, v.z
    return Vec3E(
        x.mul_golden(r[0][0]) + y.mul_golden(r[0][1]) + z.mul_golden(r[0][2]),
        x.mul_golden(r[1][0]) + y.mul_golden(r[1][1]) + z.mul_golden(r[1][2]),
        x.mul_golden(r[2][0]) + y.mul_golden(r[2][1]) + z.mul_golden(r[2][2]),
    )


def mat_mul(a: Mat3G, b: Mat3G) -> Mat3G:
    ar, br = a.rows, b.rows
    return Mat3G([
        [
            ar[i][0] * br[0][j] + ar[i][1] * br[1][j] + ar[i][2] * br[2][j]
            for j in range(3)
        ]
        for i in range(3)
    ])


def mat_det(m: Mat3G) -> GoldenNumber:
    r = m.rows
    return (
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
        - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    )
