"""Parallelohedra through the centered-tetrahedron pair representation.

A normalized centered tetrahedron (vertices summing to zero, every vertex
triple spanning unit absolute determinant, positive orientation) plus six
nonnegative pair weights determines a zonotope whose generators are the
weighted cross products of vertex pairs.  The zero pattern of the weights
decides which of the five combinatorial types the body has.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

import numpy as np

from .errors import DegenerateBodyError, SchemaError
from .geom import Vector3, cross, det3, gram
from .volume_form import COMPLEMENT_SLOT, PAIRS, PairVector, volume_form
from .zonotope import (
    PolyMesh,
    QuermassReport,
    Zonotope,
    EDGE_PARALLEL_TOL,
    inradius as zonotope_inradius,
    realize_hull,
)

CENTER_TOL = 1e-10
DET_TOL = 1e-10
DEGENERATE_DET_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class CenteredTetrahedron:
    """Four vertices summing to zero with |det| = 1 on every vertex triple
    and det(v1, v2, v3) = +1; the convex hull then has volume 2/3."""

    v1: Vector3
    v2: Vector3
    v3: Vector3
    v4: Vector3

    def __post_init__(self):
        v = (self.v1, self.v2, self.v3, self.v4)
        total = v[0] + v[1] + v[2] + v[3]
        if total.norm() > CENTER_TOL:
            raise ValueError("not centered")
        d123 = det3(v[0], v[1], v[2])
        if abs(d123 - 1.0) > DET_TOL:
            raise ValueError("not normalized: det(v1, v2, v3) must be +1")
        for a, b, c in ((0, 1, 3), (0, 2, 3), (1, 2, 3)):
            if abs(abs(det3(v[a], v[b], v[c])) - 1.0) > DET_TOL:
                raise ValueError("not normalized: vertex triple with |det| != 1")

    @property
    def vertices(self) -> tuple[Vector3, Vector3, Vector3, Vector3]:
        return (self.v1, self.v2, self.v3, self.v4)

    def gram(self) -> np.ndarray:
        return gram(self.vertices)

    def volume(self) -> float:
        return 2.0 / 3.0

    def pair_cross(self, i: int, j: int) -> Vector3:
        return cross(self.vertices[i - 1], self.vertices[j - 1])

    def pair_crosses(self) -> tuple[Vector3, ...]:
        return tuple(self.pair_cross(i, j) for i, j in PAIRS)


def normalize_tetrahedron(points: Sequence[Vector3]) -> CenteredTetrahedron:
    """Center, rescale, and orient four points into a CenteredTetrahedron.

    Subtracts the centroid, rescales by |det(v1,v2,v3)|^(-1/3), and swaps
    v1 and v2 if the orientation is negative.  Already-normalized input is
    returned unchanged, so the map is idempotent.  Coplanar points are
    rejected.
    """
    if len(points) != 4:
        raise ValueError(f"expected 4 points, got {len(points)}")
    try:
        return CenteredTetrahedron(*points)
    except ValueError:
        pass

    centroid = (points[0] + points[1] + points[2] + points[3]) * 0.25
    q = [p - centroid for p in points]
    d = det3(q[0], q[1], q[2])
    scale_bound = q[0].norm() * q[1].norm() * q[2].norm()
    if abs(d) <= DEGENERATE_DET_TOL * max(scale_bound, 1e-300):
        raise DegenerateBodyError("degenerate tetrahedron")
    s = abs(d) ** (-1.0 / 3.0)
    r = [p * s for p in q]
    if det3(r[0], r[1], r[2]) < 0.0:
        r[0], r[1] = r[1], r[0]
    return CenteredTetrahedron(r[0], r[1], r[2], r[3])


@dataclass(frozen=True, slots=True)
class BetaWeights:
    """Nonnegative pair weights in slot order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)."""

    b12: float
    b13: float
    b14: float
    b23: float
    b24: float
    b34: float

    def __post_init__(self):
        for name in ("b12", "b13", "b14", "b23", "b24", "b34"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative, got {v!r}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_sequence(cls, seq: Sequence[float]) -> "BetaWeights":
        vals = tuple(float(v) for v in seq)
        if len(vals) != 6:
            raise ValueError(f"expected 6 weights, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.b12, self.b13, self.b14, self.b23, self.b24, self.b34)

    def as_pair_vector(self) -> PairVector:
        return PairVector(*self.as_tuple())

    def scaled(self, s: float) -> "BetaWeights":
        return BetaWeights(*(v * s for v in self.as_tuple()))


class ParallelohedronType(IntEnum):
    """The five combinatorial types, by increasing belt complexity, plus a
    bucket for weight patterns that collapse the body."""

    DEGENERATE = 0
    CUBE = 1
    HEXAGONAL_PRISM = 2
    RHOMBIC_DODECAHEDRON = 3
    ELONGATED_DODECAHEDRON = 4
    TRUNCATED_OCTAHEDRON = 5


TYPE_NAMES = {
    ParallelohedronType.DEGENERATE: "degenerate",
    ParallelohedronType.CUBE: "cube",
    ParallelohedronType.HEXAGONAL_PRISM: "hexagonal prism",
    ParallelohedronType.RHOMBIC_DODECAHEDRON: "rhombic dodecahedron",
    ParallelohedronType.ELONGATED_DODECAHEDRON: "elongated dodecahedron",
    ParallelohedronType.TRUNCATED_OCTAHEDRON: "truncated octahedron",
}

# expected face counts and (4-belt, 6-belt) counts per type
TYPE_FACE_COUNTS = {1: 6, 2: 8, 3: 12, 4: 12, 5: 14}
TYPE_BELT_COUNTS = {1: (3, 0), 2: (3, 1), 3: (0, 4), 4: (1, 4), 5: (0, 6)}

DEFAULT_CLASSIFY_EPS_REL = 1e-9


def build(t: CenteredTetrahedron, b: BetaWeights) -> Zonotope:
    """Zonotope with generators beta_ij * (v_i x v_j); zero weights drop
    their generator."""
    gens = []
    for slot, (i, j) in enumerate(PAIRS):
        w = b.as_tuple()[slot]
        if w > 0.0:
            gens.append(t.pair_cross(i, j) * w)
    if not gens:
        raise DegenerateBodyError("empty body")
    return Zonotope(tuple(gens))


def classify(b: BetaWeights, eps: float | None = None) -> ParallelohedronType:
    """Combinatorial type from the zero pattern of the weights.

    A weight counts as zero when it is <= eps; eps defaults to 1e-9 times
    the largest weight.  All positive: truncated octahedron.  One zero:
    elongated dodecahedron.  Two zeros: rhombic dodecahedron when the zero
    pairs are disjoint, hexagonal prism when they share an index.  Three
    zeros: cube when the surviving pairs have no common index.  Everything
    else is degenerate.
    """
    vals = b.as_tuple()
    top = max(vals)
    if eps is None:
        if top == 0.0:
            return ParallelohedronType.DEGENERATE
        eps = DEFAULT_CLASSIFY_EPS_REL * top
    if eps <= 0.0:
        raise ValueError("eps must be positive")

    zero_slots = [k for k, v in enumerate(vals) if v <= eps]
    nz = len(zero_slots)
    if nz == 0:
        return ParallelohedronType.TRUNCATED_OCTAHEDRON
    if nz == 1:
        return ParallelohedronType.ELONGATED_DODECAHEDRON
    if nz == 2:
        a, bb = zero_slots
        if COMPLEMENT_SLOT[a] == bb:
            return ParallelohedronType.RHOMBIC_DODECAHEDRON
        return ParallelohedronType.HEXAGONAL_PRISM
    if nz == 3:
        free = [k for k in range(6) if k not in zero_slots]
        common = set(PAIRS[free[0]]) & set(PAIRS[free[1]]) & set(PAIRS[free[2]])
        if common:
            return ParallelohedronType.DEGENERATE
        return ParallelohedronType.CUBE
    return ParallelohedronType.DEGENERATE


def belts(z: Zonotope, mesh: PolyMesh | None = None) -> tuple[int, int]:
    """Counts of 4-face and 6-face belts, one belt per generator.

    A generator's belt is the set of hull faces having an edge parallel to
    it.  Parallelohedra only have belts of length 4 or 6.
    """
    if mesh is None:
        mesh = realize_hull(z)
    four = 0
    six = 0
    for g in z.generators:
        glen = g.norm()
        count = 0
        for face in mesh.faces:
            n = len(face)
            for k in range(n):
                e = mesh.vertices[face[(k + 1) % n]] - mesh.vertices[face[k]]
                if e.cross(g).norm() <= EDGE_PARALLEL_TOL * e.norm() * glen:
                    count += 1
                    break
        if count == 4:
            four += 1
        elif count == 6:
            six += 1
    return four, six


def measures_rep(t: CenteredTetrahedron, b: BetaWeights) -> QuermassReport:
    """Closed-form measures straight from the representation data.

    Volume is the pair-weight form; surface area expands into vertex-norm
    and complementary-pair terms; mean width is half the weighted sum of
    cross-product norms.  The inradius falls back to the zonotope support
    minimum and is 0 for lower-dimensional weight patterns.
    """
    beta = b.as_tuple()
    v = t.vertices
    crosses = t.pair_crosses()
    cross_norms = [c.norm() for c in crosses]

    vol = volume_form(beta)

    vertex_term = 0.0
    for vi in range(1, 5):
        slots = [k for k, p in enumerate(PAIRS) if vi in p]
        a, bb, c = (beta[s] for s in slots)
        vertex_term += (a * bb + a * c + bb * c) * v[vi - 1].norm()
    matching_term = (
        beta[0] * beta[5] * (v[0] + v[1]).norm()
        + beta[1] * beta[4] * (v[0] + v[2]).norm()
        + beta[2] * beta[3] * (v[0] + v[3]).norm()
    )
    surf = 2.0 * (vertex_term + matching_term)

    width = 0.5 * math.fsum(beta[k] * cross_norms[k] for k in range(6))

    active = [crosses[k].as_tuple() for k in range(6) if beta[k] > 0.0]
    rank = int(np.linalg.matrix_rank(np.array(active))) if active else 0
    r = zonotope_inradius(build(t, b)) if rank == 3 else 0.0

    return QuermassReport(
        volume=vol,
        surface_area=surf,
        mean_width=width,
        second_quermass=(2.0 * math.pi / 3.0) * width,
        inradius=r,
        provenance={
            "volume": "pair-weight form",
            "surface_area": "pair-weight expansion",
            "mean_width": "weighted cross-norm sum",
            "second_quermass": "weighted cross-norm sum",
            "inradius": "support minimum over facet normals" if rank == 3 else "lower-dimensional body",
        },
    )


def _vector_rows(raw, what: str, n: int) -> list[Vector3]:
    if not isinstance(raw, (list, tuple)) or len(raw) != n:
        raise SchemaError(f"{what} must be a list of {n} coordinate triples")
    out = []
    for row in raw:
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise SchemaError(f"{what} entries must be [x, y, z] triples")
        try:
            out.append(Vector3.from_seq([float(c) for c in row]))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad coordinate in {what}: {exc}") from exc
    return out


def body_from_json(data) -> Zonotope | tuple[CenteredTetrahedron, BetaWeights]:
    """Parse the input document schema.

    Either {"generators": [[x,y,z], ...]} for a raw zonotope, or
    {"tetrahedron": [[x,y,z] x 4], "betas": [b12,b13,b14,b23,b24,b34]} for
    the pair representation (the tetrahedron is normalized on the way in).
    """
    if not isinstance(data, dict):
        raise SchemaError("input document must be a JSON object")
    has_gens = "generators" in data
    has_rep = "tetrahedron" in data or "betas" in data
    if has_gens and has_rep:
        raise SchemaError("give either generators or tetrahedron+betas, not both")
    if has_gens:
        rows = data["generators"]
        if not isinstance(rows, (list, tuple)) or not rows:
            raise SchemaError("generators must be a nonempty list of coordinate triples")
        gens = _vector_rows(rows, "generators", len(rows))
        try:
            return Zonotope(tuple(gens))
        except (ValueError, DegenerateBodyError) as exc:
            if isinstance(exc, DegenerateBodyError):
                raise
            raise SchemaError(str(exc)) from exc
    if not ("tetrahedron" in data and "betas" in data):
        raise SchemaError("need both tetrahedron and betas")
    points = _vector_rows(data["tetrahedron"], "tetrahedron", 4)
    raw_betas = data["betas"]
    if not isinstance(raw_betas, (list, tuple)) or len(raw_betas) != 6:
        raise SchemaError("betas must be a list of 6 numbers")
    try:
        betas = BetaWeights.from_sequence([float(v) for v in raw_betas])
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad betas: {exc}") from exc
    t = normalize_tetrahedron(points)
    return t, betas
