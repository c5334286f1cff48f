"""Seeded random generators for tetrahedra, weights, and zonotopes.

All samplers take a numpy Generator so sweeps and tests stay reproducible.
Batch functions return arrays shaped (n, 4, 3) with vertex rows.
"""

from __future__ import annotations

import numpy as np

from .geom import Vector3
from .parallelohedron import BetaWeights, CenteredTetrahedron, normalize_tetrahedron
from .zonotope import Zonotope

_DET_MIN = 1e-3


def centered_tetrahedra(
    n: int, rng: np.random.Generator, scale_range: tuple[float, float] = (0.25, 4.0)
) -> np.ndarray:
    """Centered tetrahedra of arbitrary scale, shape (n, 4, 3)."""
    out = np.empty((n, 4, 3))
    filled = 0
    lo, hi = np.log(scale_range[0]), np.log(scale_range[1])
    while filled < n:
        need = n - filled
        v = rng.standard_normal((need, 3, 3))
        dets = np.abs(np.linalg.det(v))
        keep = v[dets > _DET_MIN]
        if keep.shape[0] == 0:
            continue
        scales = np.exp(rng.uniform(lo, hi, size=keep.shape[0]))[:, None, None]
        keep = keep * scales
        take = min(keep.shape[0], need)
        out[filled : filled + take, :3] = keep[:take]
        out[filled : filled + take, 3] = -keep[:take].sum(axis=1)
        filled += take
    return out


def normalized_tetrahedra(n: int, rng: np.random.Generator) -> np.ndarray:
    """Normalized centered tetrahedra (unit triple determinants, positive
    orientation), shape (n, 4, 3)."""
    out = np.empty((n, 4, 3))
    filled = 0
    while filled < n:
        need = n - filled
        v = rng.standard_normal((need, 3, 3))
        dets = np.linalg.det(v)
        keep = np.abs(dets) > _DET_MIN
        v = v[keep]
        dets = dets[keep]
        if v.shape[0] == 0:
            continue
        v = v * (np.abs(dets) ** (-1.0 / 3.0))[:, None, None]
        flip = dets < 0.0
        v[flip] = v[flip][:, [1, 0, 2]]
        take = min(v.shape[0], need)
        out[filled : filled + take, :3] = v[:take]
        out[filled : filled + take, 3] = -v[:take].sum(axis=1)
        filled += take
    return out


def obtuse_tetrahedra(n: int, rng: np.random.Generator) -> np.ndarray:
    """Normalized tetrahedra whose six pairwise vertex inner products are
    all nonpositive, shape (n, 4, 3).  Rejection sampled."""
    out = np.empty((n, 4, 3))
    filled = 0
    while filled < n:
        batch = normalized_tetrahedra(max(4 * (n - filled), 64), rng)
        g = np.einsum("nik,njk->nij", batch, batch)
        iu = np.triu_indices(4, k=1)
        ok = (g[:, iu[0], iu[1]] <= 0.0).all(axis=1)
        keep = batch[ok]
        take = min(keep.shape[0], n - filled)
        out[filled : filled + take] = keep[:take]
        filled += take
    return out


def as_tetrahedron(rows: np.ndarray) -> CenteredTetrahedron:
    """CenteredTetrahedron from a (4, 3) vertex array (normalizing first)."""
    return normalize_tetrahedron([Vector3.from_seq(r) for r in rows])


def random_betas(
    rng: np.random.Generator,
    zero_slots: tuple[int, ...] = (),
    low: float = 0.3,
    high: float = 1.7,
) -> BetaWeights:
    """Positive weights on the free slots, zeros on the given slots."""
    vals = rng.uniform(low, high, size=6)
    for s in zero_slots:
        vals[s] = 0.0
    return BetaWeights(*vals)


def random_zonotope(rng: np.random.Generator, m: int) -> Zonotope:
    """Full-rank zonotope with m Gaussian generators."""
    while True:
        rows = rng.standard_normal((m, 3))
        if np.linalg.matrix_rank(rows) == 3 and (np.linalg.norm(rows, axis=1) > 1e-6).all():
            return Zonotope.from_rows(rows)
