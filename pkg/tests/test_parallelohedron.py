import math

import numpy as np
import pytest

from parzon.errors import DegenerateBodyError, SchemaError
from parzon.geom import Vector3, det3
from parzon.parallelohedron import (
    TYPE_BELT_COUNTS,
    TYPE_FACE_COUNTS,
    BetaWeights,
    CenteredTetrahedron,
    ParallelohedronType,
    belts,
    body_from_json,
    build,
    classify,
    measures_rep,
    normalize_tetrahedron,
)
from parzon.sampling import as_tetrahedron, normalized_tetrahedra, random_betas
from parzon.zonotope import Zonotope, mean_width, realize_hull, surface_area, volume

TYPE_ZERO_SLOTS = {
    ParallelohedronType.CUBE: (2, 4, 5),
    ParallelohedronType.HEXAGONAL_PRISM: (0, 1),
    ParallelohedronType.RHOMBIC_DODECAHEDRON: (0, 5),
    ParallelohedronType.ELONGATED_DODECAHEDRON: (5,),
    ParallelohedronType.TRUNCATED_OCTAHEDRON: (),
}


def test_centered_tetrahedron_validation():
    with pytest.raises(ValueError):
        # vertices do not sum to zero
        CenteredTetrahedron(
            Vector3(1.0, 0.0, 0.0),
            Vector3(0.0, 1.0, 0.0),
            Vector3(0.0, 0.0, 1.0),
            Vector3(0.0, 0.0, 0.0),
        )
    with pytest.raises(ValueError):
        # wrong orientation: det(v1, v2, v3) = -1
        CenteredTetrahedron(
            Vector3(0.0, 1.0, 0.0),
            Vector3(1.0, 0.0, 0.0),
            Vector3(0.0, 0.0, 1.0),
            Vector3(-1.0, -1.0, -1.0),
        )


def test_centered_tetrahedron_volume(cube_tetra):
    assert cube_tetra.volume() == pytest.approx(2.0 / 3.0, rel=1e-15)


def test_normalize_translation_scale_orientation(rng):
    for _ in range(50):
        pts = [Vector3(*row) for row in rng.standard_normal((4, 3))]
        if abs(det3(*(p - pts[3] for p in pts[:3]))) < 1e-3:
            continue
        t = normalize_tetrahedron(pts)
        total = t.v1 + t.v2 + t.v3 + t.v4
        assert total.norm() < 1e-12
        assert det3(t.v1, t.v2, t.v3) == pytest.approx(1.0, abs=1e-10)
        for triple in ((t.v1, t.v2, t.v4), (t.v1, t.v3, t.v4), (t.v2, t.v3, t.v4)):
            assert abs(det3(*triple)) == pytest.approx(1.0, abs=1e-10)


def test_normalize_idempotent(cube_tetra):
    again = normalize_tetrahedron(list(cube_tetra.vertices))
    assert again.vertices == cube_tetra.vertices


def test_normalize_rejects_coplanar():
    pts = [
        Vector3(0.0, 0.0, 0.0),
        Vector3(1.0, 0.0, 0.0),
        Vector3(0.0, 1.0, 0.0),
        Vector3(1.0, 1.0, 0.0),
    ]
    with pytest.raises(DegenerateBodyError):
        normalize_tetrahedron(pts)


def test_beta_weights_validation():
    with pytest.raises(ValueError):
        BetaWeights.from_sequence([1.0, -0.5, 0.0, 0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        BetaWeights.from_sequence([1.0] * 5)
    b = BetaWeights.from_sequence([1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    assert b.scaled(2.0).as_tuple() == (2.0, 4.0, 6.0, 8.0, 10.0, 12.0)


CLASSIFY_CASES = [
    ((1.0, 1.0, 1.0, 1.0, 1.0, 1.0), ParallelohedronType.TRUNCATED_OCTAHEDRON),
    ((1.0, 1.0, 1.0, 1.0, 1.0, 0.0), ParallelohedronType.ELONGATED_DODECAHEDRON),
    ((0.0, 1.0, 1.0, 1.0, 1.0, 0.0), ParallelohedronType.RHOMBIC_DODECAHEDRON),
    ((0.0, 0.0, 1.0, 1.0, 1.0, 1.0), ParallelohedronType.HEXAGONAL_PRISM),
    ((1.0, 1.0, 0.0, 1.0, 0.0, 0.0), ParallelohedronType.CUBE),
    ((1.0, 1.0, 1.0, 0.0, 0.0, 0.0), ParallelohedronType.DEGENERATE),
    ((1.0, 0.0, 0.0, 0.0, 0.0, 1.0), ParallelohedronType.DEGENERATE),
    ((1.0, 0.0, 0.0, 0.0, 0.0, 0.0), ParallelohedronType.DEGENERATE),
]


@pytest.mark.parametrize("values,expected", CLASSIFY_CASES)
def test_classify_patterns(values, expected):
    assert classify(BetaWeights.from_sequence(values)) == expected


def test_classify_eps_handles_dirty_zeros():
    b = BetaWeights.from_sequence([1.0, 1.0, 1e-12, 1.0, 1e-13, 1e-15])
    assert classify(b) == ParallelohedronType.CUBE
    assert classify(b, eps=1e-16) == ParallelohedronType.TRUNCATED_OCTAHEDRON


def test_classify_scale_invariance(rng):
    vals = rng.uniform(0.5, 2.0, size=6)
    vals[5] = 0.0
    b = BetaWeights.from_sequence(vals)
    assert classify(b) == classify(b.scaled(1e8)) == classify(b.scaled(1e-8))


@pytest.mark.parametrize("ptype", list(TYPE_ZERO_SLOTS))
def test_face_and_belt_counts_per_type(ptype, rng):
    for _ in range(5):
        t = as_tetrahedron(normalized_tetrahedra(1, rng)[0])
        b = random_betas(rng, TYPE_ZERO_SLOTS[ptype])
        assert classify(b) == ptype
        z = build(t, b)
        mesh = realize_hull(z)
        assert len(mesh.faces) == TYPE_FACE_COUNTS[ptype]
        assert belts(z, mesh) == TYPE_BELT_COUNTS[ptype]


def test_cube_pattern_builds_actual_cube(cube_tetra, cube_betas):
    z = build(cube_tetra, cube_betas)
    mesh = realize_hull(z)
    assert len(mesh.vertices) == 8
    assert len(mesh.faces) == 6
    assert volume(z) == pytest.approx(1.0, rel=1e-14)
    assert surface_area(z) == pytest.approx(6.0, rel=1e-14)
    assert mean_width(z) == pytest.approx(1.5, rel=1e-14)


def test_build_rejects_all_zero():
    t = normalize_tetrahedron(
        [
            Vector3(1.0, 1.0, 1.0),
            Vector3(1.0, -1.0, -1.0),
            Vector3(-1.0, 1.0, -1.0),
            Vector3(-1.0, -1.0, 1.0),
        ]
    )
    with pytest.raises(DegenerateBodyError):
        build(t, BetaWeights.from_sequence([0.0] * 6))


def test_measures_rep_matches_zonotope_routes(rng):
    for _ in range(50):
        t = as_tetrahedron(normalized_tetrahedra(1, rng)[0])
        b = random_betas(rng, ())
        rep = measures_rep(t, b)
        z = build(t, b)
        assert rep.volume == pytest.approx(volume(z), rel=1e-11)
        assert rep.surface_area == pytest.approx(surface_area(z), rel=1e-11)
        assert rep.mean_width == pytest.approx(mean_width(z), rel=1e-11)


def test_measures_rep_volume_is_form_value(rng):
    from parzon.volume_form import volume_form

    t = as_tetrahedron(normalized_tetrahedra(1, rng)[0])
    b = random_betas(rng, (1, 4))
    rep = measures_rep(t, b)
    assert rep.volume == pytest.approx(volume_form(b.as_tuple()), rel=1e-12)


def test_body_from_json_generators():
    z = body_from_json({"generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
    assert isinstance(z, Zonotope)
    assert volume(z) == 1.0


def test_body_from_json_representation():
    doc = {
        "tetrahedron": [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
        "betas": [1, 1, 1, 1, 1, 1],
    }
    t, b = body_from_json(doc)
    assert isinstance(t, CenteredTetrahedron)
    assert b.as_tuple() == (1.0,) * 6
    assert det3(t.v1, t.v2, t.v3) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {},
        {"generators": []},
        {"generators": [[1, 0]]},
        {"generators": [[1, 0, 0]], "betas": [1, 1, 1, 1, 1, 1]},
        {"tetrahedron": [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]},
        {"betas": [1, 1, 1, 1, 1, 1]},
        {
            "tetrahedron": [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
            "betas": [1, 1, 1],
        },
        {
            "tetrahedron": [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
            "betas": [1, 1, 1, 1, 1, "x"],
        },
    ],
)
def test_body_from_json_schema_errors(doc):
    with pytest.raises(SchemaError):
        body_from_json(doc)


def test_type_enum_names():
    assert int(ParallelohedronType.CUBE) == 1
    assert int(ParallelohedronType.HEXAGONAL_PRISM) == 2
    assert int(ParallelohedronType.RHOMBIC_DODECAHEDRON) == 3
    assert int(ParallelohedronType.ELONGATED_DODECAHEDRON) == 4
    assert int(ParallelohedronType.TRUNCATED_OCTAHEDRON) == 5
    assert int(ParallelohedronType.DEGENERATE) == 0
