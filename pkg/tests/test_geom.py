import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parzon.geom import Matrix3, Vector3, cross, cross_det_identity, det3, gram

coord = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
vec = st.tuples(coord, coord, coord).map(lambda t: Vector3(*t))


def test_vector_arithmetic():
    a = Vector3(1.0, 2.0, 3.0)
    b = Vector3(-2.0, 0.5, 4.0)
    assert (a + b).as_tuple() == (-1.0, 2.5, 7.0)
    assert (a - b).as_tuple() == (3.0, 1.5, -1.0)
    assert (-a).as_tuple() == (-1.0, -2.0, -3.0)
    assert (2.0 * a).as_tuple() == (a * 2.0).as_tuple() == (2.0, 4.0, 6.0)
    assert a.dot(b) == -2.0 + 1.0 + 12.0
    assert a.norm_sq() == 14.0
    assert a.norm() == math.sqrt(14.0)


def test_vector_rejects_non_finite():
    with pytest.raises(ValueError):
        Vector3(float("nan"), 0.0, 0.0)
    with pytest.raises(ValueError):
        Vector3(0.0, float("inf"), 0.0)


def test_det3_column_convention():
    e1 = Vector3(1.0, 0.0, 0.0)
    e2 = Vector3(0.0, 1.0, 0.0)
    e3 = Vector3(0.0, 0.0, 1.0)
    assert det3(e1, e2, e3) == 1.0
    assert det3(e2, e1, e3) == -1.0


def test_det3_matches_numpy(rng):
    for _ in range(200):
        m = rng.standard_normal((3, 3))
        got = det3(Vector3(*m[:, 0]), Vector3(*m[:, 1]), Vector3(*m[:, 2]))
        assert got == pytest.approx(np.linalg.det(m), rel=1e-12, abs=1e-12)


def test_cross_matches_numpy(rng):
    for _ in range(200):
        a, b = rng.standard_normal((2, 3))
        got = cross(Vector3(*a), Vector3(*b))
        assert np.allclose([got.x, got.y, got.z], np.cross(a, b), rtol=0, atol=1e-14)


def test_gram_matches_numpy(rng):
    rows = rng.standard_normal((4, 3))
    vecs = [Vector3(*r) for r in rows]
    assert np.allclose(gram(vecs), rows @ rows.T, rtol=1e-14, atol=1e-14)


def test_matrix3_roundtrip(rng):
    m = rng.standard_normal((3, 3))
    m3 = Matrix3.from_numpy(m)
    assert np.array_equal(m3.to_numpy(), m)
    assert Matrix3.identity().to_numpy().tolist() == np.eye(3).tolist()
    assert m3.max_abs_diff(Matrix3.from_numpy(m)) == 0.0


def test_cross_det_identity_against_direct_oracle(rng):
    """Both sides recomputed with numpy from scratch."""
    for _ in range(100):
        pts = rng.standard_normal((4, 3))
        pairs = [(1, 2), (3, 4), (2, 4)]
        vs = [Vector3(*p) for p in pts]
        lhs, rhs = cross_det_identity(vs, pairs)
        crosses = np.array([np.cross(pts[i - 1], pts[j - 1]) for i, j in pairs])
        lhs_np = np.linalg.det(crosses.T)
        (i, j), (k, l), (s, t) = pairs
        vol = lambda a, b, c: np.linalg.det(np.array([pts[a - 1], pts[b - 1], pts[c - 1]]).T)
        rhs_np = vol(i, j, l) * vol(s, t, k) - vol(i, j, k) * vol(s, t, l)
        assert lhs == pytest.approx(lhs_np, rel=1e-10, abs=1e-10)
        assert rhs == pytest.approx(rhs_np, rel=1e-10, abs=1e-10)
        assert lhs == pytest.approx(rhs, abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.tuples(vec, vec, vec, vec))
def test_cross_det_identity_holds_everywhere(vertices):
    lhs, rhs = cross_det_identity(list(vertices), [(1, 2), (1, 3), (1, 4)])
    assert abs(lhs - rhs) <= 1e-9


def test_cross_det_identity_rejects_bad_pairs():
    vs = [Vector3(1.0, 0.0, 0.0)] * 4
    with pytest.raises(ValueError):
        cross_det_identity(vs, [(1, 1), (1, 2), (1, 3)])
    with pytest.raises(ValueError):
        cross_det_identity(vs, [(0, 2), (1, 2), (1, 3)])
    with pytest.raises(ValueError):
        cross_det_identity(vs, [(1, 2), (1, 3)])
