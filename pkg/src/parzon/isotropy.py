"""Isotropic position of pair-represented bodies and the width bound chain.

A body is in isotropic position when the outward-normal second moments of
its projection-body facets balance to a multiple of the identity.  For a
fixed centered tetrahedron that pins the weights to an explicit formula,
which turns the minimal-mean-width question into maximizing the form at
the zeta quantities of the tetrahedron alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBodyError
from .geom import Matrix3, Vector3
from .parallelohedron import BetaWeights, CenteredTetrahedron
from .volume_form import PAIRS, PairVector, volume_form

SQRT2 = math.sqrt(2.0)
CHAIN_TOL = 1e-9
OBTUSE_TOL = 1e-12


@dataclass(frozen=True)
class ReductionQuantities:
    """The three pair vectors attached to a tetrahedron: gamma (opposite
    inner products), tau (gamma times squared cross norm), and zeta (gamma
    times cross norm).  zeta^2 = gamma * tau slotwise."""

    gamma: PairVector
    tau: PairVector
    zeta: PairVector


@dataclass(frozen=True)
class BoundChainResult:
    """Links of the width bound chain at one tetrahedron, plus the mean
    width the top value translates to at unit volume."""

    f_zeta: float
    cs_bound: float
    global_bound: float
    width: float


def _gamma_and_norms(t: CenteredTetrahedron) -> tuple[list[float], list[float]]:
    v = t.vertices
    gamma = []
    norms = []
    for i, j in PAIRS:
        s, k = [m for m in (1, 2, 3, 4) if m not in (i, j)]
        gamma.append(-v[s - 1].dot(v[k - 1]))
        norms.append(t.pair_cross(i, j).norm())
    return gamma, norms


def reduction_quantities(t: CenteredTetrahedron) -> ReductionQuantities:
    """gamma, tau, zeta pair vectors of the tetrahedron."""
    gamma, norms = _gamma_and_norms(t)
    tau = [g * n * n for g, n in zip(gamma, norms)]
    zeta = [g * n for g, n in zip(gamma, norms)]
    return ReductionQuantities(PairVector(*gamma), PairVector(*tau), PairVector(*zeta))


def isotropy_matrix(t: CenteredTetrahedron, b: BetaWeights) -> Matrix3:
    """Second-moment matrix of the weighted facet normals.

    Sum of (3 beta_ij / (2 w |c_ij|)) c_ij c_ij^T over the pairs, where w
    is the body's mean width; equals the identity exactly when the body is
    in isotropic position.
    """
    beta = b.as_tuple()
    crosses = [t.pair_cross(i, j) for i, j in PAIRS]
    norms = [c.norm() for c in crosses]
    w = 0.5 * math.fsum(bb * n for bb, n in zip(beta, norms))
    if w <= 0.0:
        raise DegenerateBodyError("zero-width body")
    m = np.zeros((3, 3))
    for bb, c, n in zip(beta, crosses, norms):
        if bb == 0.0:
            continue
        arr = np.array(c.as_tuple())
        m += (3.0 * bb / (2.0 * w * n)) * np.outer(arr, arr)
    return Matrix3.from_numpy(m)


def beta_from_isotropy(t: CenteredTetrahedron, w_target: float) -> BetaWeights:
    """The unique weights putting the body in isotropic position at the
    requested mean width: beta_ij = gamma_ij |c_ij| (2 w / 3).

    Requires every opposite vertex pair to have nonpositive inner product;
    otherwise some weight would come out negative.
    """
    if not (w_target >= 0.0) or not math.isfinite(w_target):
        raise ValueError(f"w_target must be finite and nonnegative, got {w_target!r}")
    gamma, norms = _gamma_and_norms(t)
    scale = max(v.norm_sq() for v in t.vertices)
    out = []
    for g, n in zip(gamma, norms):
        if g < -OBTUSE_TOL * scale:
            raise ValueError(
                "tetrahedron not obtuse-centered: isotropic weights would be negative"
            )
        out.append(max(g, 0.0) * n * (2.0 * w_target / 3.0))
    return BetaWeights(*out)


def bound_chain(t: CenteredTetrahedron) -> BoundChainResult:
    """Evaluate f(zeta) <= sqrt(f(gamma) f(tau)) <= sqrt(2) at a tetrahedron
    with all gamma >= 0, and the mean width 3 / (2 f(zeta)^(1/3)) that the
    first value yields at unit volume."""
    q = reduction_quantities(t)
    scale = max(v.norm_sq() for v in t.vertices)
    if any(g < -OBTUSE_TOL * scale for g in q.gamma):
        raise ValueError("bound chain inapplicable: opposite pair with positive inner product")
    f_zeta = volume_form(q.zeta)
    cs = math.sqrt(max(volume_form(q.gamma), 0.0) * max(volume_form(q.tau), 0.0))
    if f_zeta > cs + CHAIN_TOL or cs > SQRT2 + CHAIN_TOL:
        raise RuntimeError(
            f"bound chain violated: f_zeta={f_zeta!r}, cs={cs!r}"
        )
    width = 1.5 * f_zeta ** (-1.0 / 3.0) if f_zeta > 0.0 else math.inf
    return BoundChainResult(
        f_zeta=f_zeta,
        cs_bound=cs,
        global_bound=SQRT2,
        width=width,
    )


def regular_tetrahedron() -> CenteredTetrahedron:
    """The normalized regular tetrahedron with alternating-sign vertices
    scaled by 4^(-1/3); its Gram matrix is a positive multiple of 4*Id - E."""
    s = 4.0 ** (-1.0 / 3.0)
    return CenteredTetrahedron(
        Vector3(s, s, s),
        Vector3(s, -s, -s),
        Vector3(-s, s, -s),
        Vector3(-s, -s, s),
    )


def projection_body_facets(
    t: CenteredTetrahedron, b: BetaWeights
) -> list[tuple[Vector3, float]]:
    """Outward unit normals with facet areas for the body's projection-body
    data: each positive-weight pair contributes +/-c_ij/|c_ij| with area
    beta_ij |c_ij| / 2 on each side.  The area-weighted normal sum is zero
    by construction."""
    beta = b.as_tuple()
    active = []
    for slot, (i, j) in enumerate(PAIRS):
        if beta[slot] > 0.0:
            active.append((slot, t.pair_cross(i, j)))
    if len(active) < 3 or int(np.linalg.matrix_rank(np.array([c.as_tuple() for _, c in active]))) < 3:
        raise DegenerateBodyError("not full-dimensional")
    out = []
    for slot, c in active:
        n = c.norm()
        u = c * (1.0 / n)
        area = 0.5 * beta[slot] * n
        out.append((u, area))
        out.append((-u, area))
    return out
