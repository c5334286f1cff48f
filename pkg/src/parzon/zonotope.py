"""Zonotopes (Minkowski sums of segments) and their exact measures.

Volume, surface area, and mean width come from closed-form generator sums;
``realize_hull`` builds the actual vertex/face mesh through a convex hull
of the 2^m sign combinations, which serves as the independent oracle for
those formulas.  All bodies are centered on their symmetry center plus an
optional anchor translation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from . import _kernels as K
from .errors import DegenerateBodyError
from .geom import ORIGIN, Vector3

MAX_GENERATORS = 16
NORMAL_TOL = 1e-8
OFFSET_TOL = 1e-8
EDGE_PARALLEL_TOL = 1e-8
WIDTH_RELATION_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Zonotope:
    """Minkowski sum of segments [0, g] over the generators, recentered so
    the anchor is the symmetry center."""

    generators: tuple[Vector3, ...]
    anchor: Vector3 = ORIGIN

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("zonotope needs at least one generator")
        if len(gens) > MAX_GENERATORS:
            raise DegenerateBodyError("generator limit exceeded")
        for g in gens:
            if g.norm() < 1e-12:
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], anchor: Sequence[float] | None = None) -> "Zonotope":
        gens = tuple(Vector3.from_seq(r) for r in rows)
        a = ORIGIN if anchor is None else Vector3.from_seq(anchor)
        return cls(gens, a)

    def generator_matrix(self) -> np.ndarray:
        return np.array([g.as_tuple() for g in self.generators], dtype=float)

    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.generator_matrix()))

    def scaled(self, s: float) -> "Zonotope":
        return Zonotope(tuple(g * s for g in self.generators), self.anchor * s)


@dataclass(frozen=True)
class QuermassReport:
    """The four quermass-type measures plus the inradius, with a note of
    which formula produced each number."""

    volume: float
    surface_area: float
    mean_width: float
    second_quermass: float
    inradius: float
    provenance: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("volume", "surface_area", "mean_width", "second_quermass", "inradius"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative, got {v!r}")
        expected = (3.0 / (2.0 * math.pi)) * self.second_quermass
        if abs(self.mean_width - expected) > WIDTH_RELATION_TOL * max(1.0, self.mean_width):
            raise ValueError("mean_width and second_quermass disagree")


def _flat(z: Zonotope) -> np.ndarray:
    return np.ascontiguousarray(z.generator_matrix().reshape(-1), dtype=float)


def volume(z: Zonotope) -> float:
    """Sum of |det| over generator triples."""
    return K.zonotope_volume(_flat(z), len(z.generators))


def surface_area(z: Zonotope) -> float:
    """Twice the sum of cross-product norms over generator pairs."""
    return K.zonotope_surface(_flat(z), len(z.generators))


def mean_width(z: Zonotope) -> float:
    """Half the sum of generator lengths."""
    return K.zonotope_mean_width(_flat(z), len(z.generators))


def second_quermass(z: Zonotope) -> float:
    """(pi/3) times the sum of generator lengths."""
    return (2.0 * math.pi / 3.0) * mean_width(z)


def support(z: Zonotope, direction: Vector3) -> float:
    """Support function at the given direction, about the symmetry center."""
    return 0.5 * math.fsum(abs(g.dot(direction)) for g in z.generators)


def facet_normals(z: Zonotope) -> list[Vector3]:
    """Unit facet normals: deduplicated directions of pairwise cross
    products, one representative per +/- pair."""
    reps: list[Vector3] = []
    gens = z.generators
    for i in range(len(gens) - 1):
        for j in range(i + 1, len(gens)):
            c = gens[i].cross(gens[j])
            n = c.norm()
            if n < 1e-12 * gens[i].norm() * gens[j].norm():
                continue
            u = c * (1.0 / n)
            is_new = True
            for r in reps:
                if (u - r).norm() <= NORMAL_TOL or (u + r).norm() <= NORMAL_TOL:
                    is_new = False
                    break
            if is_new:
                reps.append(u)
    return reps


def inradius(z: Zonotope) -> float:
    """Radius of the largest ball centered at the symmetry center: the
    minimum support value over facet normals."""
    if z.rank() < 3:
        raise DegenerateBodyError("not full-dimensional")
    return min(support(z, u) for u in facet_normals(z))


def measures(z: Zonotope) -> QuermassReport:
    """All closed-form measures of the zonotope in one report."""
    return QuermassReport(
        volume=volume(z),
        surface_area=surface_area(z),
        mean_width=mean_width(z),
        second_quermass=second_quermass(z),
        inradius=inradius(z),
        provenance={
            "volume": "triple-determinant sum",
            "surface_area": "pairwise cross-norm sum",
            "mean_width": "generator length sum",
            "second_quermass": "generator length sum",
            "inradius": "support minimum over facet normals",
        },
    )


@dataclass(frozen=True)
class PolyMesh:
    """Polytope boundary mesh: vertices plus face vertex cycles, each cycle
    counterclockwise when seen from outside."""

    vertices: tuple[Vector3, ...]
    faces: tuple[tuple[int, ...], ...]

    def edge_count(self) -> int:
        edges = set()
        for face in self.faces:
            n = len(face)
            for k in range(n):
                a, b = face[k], face[(k + 1) % n]
                edges.add((min(a, b), max(a, b)))
        return len(edges)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - self.edge_count() + len(self.faces)


def realize_hull(z: Zonotope) -> PolyMesh:
    """Vertex/face mesh of the zonotope from the 2^m sign combinations.

    Coplanar hull simplices are merged into a single polygonal face using
    a normal tolerance and a plane-offset tolerance of 1e-8 each.
    """
    m = len(z.generators)
    if m > MAX_GENERATORS:
        raise DegenerateBodyError("generator limit exceeded")
    G = z.generator_matrix()
    if np.linalg.matrix_rank(G) < 3:
        raise DegenerateBodyError("not full-dimensional")

    signs = ((np.arange(2**m)[:, None] >> np.arange(m)) & 1) * 2.0 - 1.0
    pts = 0.5 * (signs @ G)
    anchor = np.array(z.anchor.as_tuple())
    pts = pts + anchor

    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise DegenerateBodyError("not full-dimensional") from exc

    # group hull simplices into coplanar faces
    groups: list[dict] = []
    for simplex, eq in zip(hull.simplices, hull.equations):
        normal = eq[:3]
        offset = -eq[3]
        placed = False
        for grp in groups:
            if (
                np.max(np.abs(normal - grp["normal"])) <= NORMAL_TOL
                and abs(offset - grp["offset"]) <= OFFSET_TOL
            ):
                grp["vertices"].update(int(i) for i in simplex)
                placed = True
                break
        if not placed:
            groups.append(
                {
                    "normal": normal.copy(),
                    "offset": offset,
                    "vertices": set(int(i) for i in simplex),
                }
            )

    used = sorted({i for grp in groups for i in grp["vertices"]})
    remap = {old: new for new, old in enumerate(used)}
    verts = [Vector3(*pts[i]) for i in used]

    faces = []
    for grp in groups:
        ids = sorted(grp["vertices"])
        n = grp["normal"]
        pts_face = pts[ids]
        centroid = pts_face.mean(axis=0)
        # angular order in the face plane, counterclockwise about the
        # outward normal
        ref = pts_face[0] - centroid
        ref = ref / np.linalg.norm(ref)
        u = ref
        w = np.cross(n, u)
        w = w / np.linalg.norm(w)
        rel = pts_face - centroid
        ang = np.arctan2(rel @ w, rel @ u)
        order = np.argsort(ang)
        faces.append(tuple(remap[ids[k]] for k in order))

    mesh = PolyMesh(vertices=tuple(verts), faces=tuple(faces))
    if mesh.euler_characteristic() != 2:
        raise DegenerateBodyError("hull realization produced a non-spherical mesh")
    return mesh


def mesh_volume(mesh: PolyMesh) -> float:
    """Volume enclosed by the mesh via signed cone volumes over faces."""
    total = 0.0
    for face in mesh.faces:
        w0 = mesh.vertices[face[0]]
        for k in range(1, len(face) - 1):
            w1 = mesh.vertices[face[k]]
            w2 = mesh.vertices[face[k + 1]]
            total += K.det3(*w0.as_tuple(), *w1.as_tuple(), *w2.as_tuple())
    return total / 6.0


def mesh_surface_area(mesh: PolyMesh) -> float:
    """Total face area via fan triangulation."""
    total = 0.0
    for face in mesh.faces:
        w0 = mesh.vertices[face[0]]
        ax = ay = az = 0.0
        for k in range(1, len(face) - 1):
            e1 = mesh.vertices[face[k]] - w0
            e2 = mesh.vertices[face[k + 1]] - w0
            c = e1.cross(e2)
            ax += c.x
            ay += c.y
            az += c.z
        total += 0.5 * math.sqrt(ax * ax + ay * ay + az * az)
    return total


def to_off(mesh: PolyMesh) -> str:
    """OFF text for the mesh: header, 'V F E' counts, vertex lines with 17
    significant digits, then face lines 'k i1 ... ik'."""
    lines = ["OFF", f"{len(mesh.vertices)} {len(mesh.faces)} {mesh.edge_count()}"]
    for v in mesh.vertices:
        lines.append(f"{v.x:.17g} {v.y:.17g} {v.z:.17g}")
    for face in mesh.faces:
        lines.append(" ".join([str(len(face))] + [str(i) for i in face]))
    return "\n".join(lines) + "\n"
