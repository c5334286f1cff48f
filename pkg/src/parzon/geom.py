"""Vectors, small matrices, and the cross-product determinant identity.

Everything downstream (zonotope measures, the pair representation, the
isotropy reduction) reduces to dot products, cross products, and 3x3
determinants of the four tetrahedron vertices, so those live here with
strict finiteness validation on the public types.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K


def _require_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class Vector3:
    """Point or direction in 3-space with finite coordinates."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        object.__setattr__(self, "x", _require_finite(self.x, "coordinate"))
        object.__setattr__(self, "y", _require_finite(self.y, "coordinate"))
        object.__setattr__(self, "z", _require_finite(self.z, "coordinate"))

    @classmethod
    def from_seq(cls, seq: Sequence[float]) -> "Vector3":
        if len(seq) != 3:
            raise ValueError(f"expected 3 coordinates, got {len(seq)}")
        return cls(seq[0], seq[1], seq[2])

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def __add__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "Vector3":
        return Vector3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def dot(self, other: "Vector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vector3") -> "Vector3":
        cx, cy, cz = K.cross3(self.x, self.y, self.z, other.x, other.y, other.z)
        return Vector3(cx, cy, cz)

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())


ORIGIN = Vector3(0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Matrix3:
    """3x3 matrix held as row tuples, entries finite."""

    rows: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Matrix3 needs exactly 3 rows of 3 entries")
        clean = tuple(
            tuple(_require_finite(e, "matrix entry") for e in row) for row in self.rows
        )
        object.__setattr__(self, "rows", clean)

    @classmethod
    def identity(cls) -> "Matrix3":
        return cls(((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)))

    @classmethod
    def from_numpy(cls, arr) -> "Matrix3":
        a = np.asarray(arr, dtype=float)
        if a.shape != (3, 3):
            raise ValueError(f"expected shape (3, 3), got {a.shape}")
        return cls(tuple(tuple(float(e) for e in row) for row in a))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    def max_abs_diff(self, other: "Matrix3") -> float:
        return max(
            abs(a - b)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )


def det3(a: Vector3, b: Vector3, c: Vector3) -> float:
    """Determinant of the matrix with columns a, b, c (signed volume x6 of
    the spanned tetrahedron with the origin)."""
    return K.det3(a.x, a.y, a.z, b.x, b.y, b.z, c.x, c.y, c.z)


def cross(a: Vector3, b: Vector3) -> Vector3:
    """Cross product a x b."""
    return a.cross(b)


def gram(vectors: Sequence[Vector3]) -> np.ndarray:
    """Gram matrix of pairwise dot products, shape (k, k)."""
    mat = np.array([v.as_tuple() for v in vectors], dtype=float)
    return mat @ mat.T


def _check_pair(pair: Sequence[int]) -> tuple[int, int]:
    if len(pair) != 2:
        raise ValueError(f"index pair must have 2 entries, got {pair!r}")
    i, j = int(pair[0]), int(pair[1])
    if not (1 <= i <= 4 and 1 <= j <= 4) or i == j:
        raise ValueError(f"index pair must be two distinct indices in 1..4, got {pair!r}")
    return i, j


def cross_det_identity(
    vertices: Sequence[Vector3],
    pairs: Iterable[Sequence[int]],
) -> tuple[float, float]:
    """Both sides of the cross-product determinant identity.

    For vectors v1..v4 and index pairs (i,j), (k,l), (s,t) the determinant
    det(vi x vj, vk x vl, vs x vt) equals V_ijl*V_stk - V_ijk*V_stl, where
    V_abc = det3(va, vb, vc).  Returns (lhs, rhs) so callers can check the
    residual themselves.
    """
    if len(vertices) != 4:
        raise ValueError(f"expected 4 vertices, got {len(vertices)}")
    plist = [_check_pair(p) for p in pairs]
    if len(plist) != 3:
        raise ValueError(f"expected 3 index pairs, got {len(plist)}")
    (i, j), (k, l), (s, t) = plist
    v = vertices

    def V(a: int, b: int, c: int) -> float:
        return det3(v[a - 1], v[b - 1], v[c - 1])

    lhs = det3(
        cross(v[i - 1], v[j - 1]),
        cross(v[k - 1], v[l - 1]),
        cross(v[s - 1], v[t - 1]),
    )
    rhs = V(i, j, l) * V(s, t, k) - V(i, j, k) * V(s, t, l)
    return lhs, rhs
