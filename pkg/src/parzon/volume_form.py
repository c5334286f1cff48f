"""The six-pair volume form: evaluation, gradient, constrained maxima on
the simplex, and the centered-tetrahedron identities it satisfies.

A body built from pair weights (w_ij on the cross product v_i x v_j of
tetrahedron vertices) has volume equal to a fixed degree-3 form in the six
weights.  The form expands to 16 of the 20 squarefree cubic monomials; the
four products over pairs sharing a common index are missing because those
cross products are coplanar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels as K
from .geom import Vector3, det3

PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

PAIR_SLOT: dict[tuple[int, int], int] = {}
for _k, _p in enumerate(PAIRS):
    PAIR_SLOT[_p] = _k
    PAIR_SLOT[(_p[1], _p[0])] = _k

# slot of the complementary pair: {1,2}<->{3,4}, {1,3}<->{2,4}, {1,4}<->{2,3}
COMPLEMENT_SLOT: tuple[int, ...] = (5, 4, 3, 2, 1, 0)

# the 16 monomials of the form, as slot triples: 4 "triangle" products over
# a 3-subset of indices plus 12 products containing a complementary pair
MONOMIAL_SLOTS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 3),
    (0, 2, 4),
    (1, 2, 5),
    (3, 4, 5),
    (0, 1, 4),
    (0, 2, 3),
    (1, 4, 5),
    (2, 3, 5),
    (0, 1, 5),
    (1, 2, 3),
    (0, 4, 5),
    (2, 3, 4),
    (0, 2, 5),
    (1, 2, 4),
    (0, 3, 5),
    (1, 3, 4),
)


class PairVector(NamedTuple):
    """Six reals indexed by the vertex pairs, in slot order."""

    v12: float
    v13: float
    v14: float
    v23: float
    v24: float
    v34: float


def _six(w: Sequence[float]) -> tuple[float, ...]:
    vals = tuple(float(v) for v in w)
    if len(vals) != 6:
        raise ValueError(f"expected 6 pair weights, got {len(vals)}")
    return vals


def volume_form(w: Sequence[float]) -> float:
    """The grouped form of the degree-3 pair-weight polynomial."""
    return K.volume_form(*_six(w))


def volume_form_expanded(w: Sequence[float]) -> float:
    """Monomial-by-monomial evaluation; equals :func:`volume_form`."""
    vals = _six(w)
    return math.fsum(vals[a] * vals[b] * vals[c] for a, b, c in MONOMIAL_SLOTS)


def volume_form_grad(w: Sequence[float]) -> PairVector:
    """Gradient of the form, as a PairVector."""
    return PairVector(*K.volume_form_grad(*_six(w)))


def volume_form_batch(arr: np.ndarray) -> np.ndarray:
    """Vectorized grouped-form evaluation over an (..., 6) array."""
    a = np.asarray(arr, dtype=float)
    if a.shape[-1] != 6:
        raise ValueError(f"last axis must have length 6, got {a.shape}")
    t12, t13, t14, t23, t24, t34 = (a[..., k] for k in range(6))
    return (
        t12 * t13 * t23
        + t12 * t14 * t24
        + t13 * t14 * t34
        + t23 * t24 * t34
        + (t12 + t34) * (t13 * t24 + t14 * t23)
        + (t13 + t24) * (t12 * t34 + t14 * t23)
        + (t14 + t23) * (t12 * t34 + t13 * t24)
    )


def volume_form_grad_batch(arr: np.ndarray) -> np.ndarray:
    """Vectorized gradient over an (..., 6) array, same shape out."""
    a = np.asarray(arr, dtype=float)
    if a.shape[-1] != 6:
        raise ValueError(f"last axis must have length 6, got {a.shape}")
    t12, t13, t14, t23, t24, t34 = (a[..., k] for k in range(6))
    g = np.empty_like(a)
    g[..., 0] = t13 * t23 + t14 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t34
    g[..., 1] = t12 * t23 + t14 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t24
    g[..., 2] = t12 * t24 + t13 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t23
    g[..., 3] = t12 * t13 + t24 * t34 + t12 * t34 + t13 * t24 + (t12 + t13 + t24 + t34) * t14
    g[..., 4] = t12 * t14 + t23 * t34 + t12 * t34 + t14 * t23 + (t12 + t14 + t23 + t34) * t13
    g[..., 5] = t13 * t14 + t23 * t24 + t13 * t24 + t14 * t23 + (t13 + t14 + t23 + t24) * t12
    return g


class SimplexCase(Enum):
    """How many weights the zero pattern pins, bucketed as in the maxima table."""

    ALL_POSITIVE = "all_positive"
    ONE_ZERO = "one_zero"
    TWO_ZEROS = "two_zeros"
    THREE_ZEROS = "three_zeros"
    MORE_ZEROS = "more_zeros"


@dataclass(frozen=True)
class SimplexMaxResult:
    """Analytic maximum of the form on a zero-constrained weight simplex."""

    max_value: float
    argmax: PairVector
    case_tag: SimplexCase


def normalize_zero_pattern(zero_pattern: Iterable[Sequence[int]]) -> frozenset[int]:
    """Slot set for a collection of index pairs; validates the pairs."""
    slots = set()
    for pair in zero_pattern:
        if len(pair) != 2:
            raise ValueError(f"index pair must have 2 entries, got {pair!r}")
        key = (int(pair[0]), int(pair[1]))
        if key not in PAIR_SLOT:
            raise ValueError(f"not a vertex pair: {pair!r}")
        slots.add(PAIR_SLOT[key])
    return frozenset(slots)


def _pairs_share_index(slot_a: int, slot_b: int) -> bool:
    return bool(set(PAIRS[slot_a]) & set(PAIRS[slot_b]))


def _common_index(slots: Iterable[int]) -> bool:
    sets = [set(PAIRS[s]) for s in slots]
    common = set.intersection(*sets) if sets else set()
    return bool(common)


def simplex_max(C: float, zero_pattern: Iterable[Sequence[int]] = ()) -> SimplexMaxResult:
    """Maximum of the form over {w >= 0, sum w = C, w zero on the pattern}.

    The maxima scale as C^3 by homogeneity.  With no zeros the maximum is
    2C^3/27 at the uniform point; with one zero it is 16C^3/243 with the
    complementary slot at C/9 and the rest at 2C/9.  With two zeros the
    value depends on the pattern: disjoint pairs allow C^3/16 (uniform C/4
    on the free slots) while pairs sharing an index cap at 4C^3/81.  With
    three zeros the maximum is C^3/27 when the free pairs have no common
    index and 0 when they do (the form vanishes identically there).  Four
    or more zeros force the form to 0.
    """
    C = float(C)
    if not (C > 0.0) or not math.isfinite(C):
        raise ValueError("nonpositive budget")
    slots = normalize_zero_pattern(zero_pattern)
    nz = len(slots)
    arg = [0.0] * 6

    if nz == 0:
        for k in range(6):
            arg[k] = C / 6.0
        return SimplexMaxResult(2.0 * C**3 / 27.0, PairVector(*arg), SimplexCase.ALL_POSITIVE)

    if nz == 1:
        (z,) = slots
        comp = COMPLEMENT_SLOT[z]
        for k in range(6):
            if k == z:
                continue
            arg[k] = C / 9.0 if k == comp else 2.0 * C / 9.0
        return SimplexMaxResult(16.0 * C**3 / 243.0, PairVector(*arg), SimplexCase.ONE_ZERO)

    if nz == 2:
        a, b = sorted(slots)
        if COMPLEMENT_SLOT[a] == b:
            for k in range(6):
                if k not in slots:
                    arg[k] = C / 4.0
            return SimplexMaxResult(C**3 / 16.0, PairVector(*arg), SimplexCase.TWO_ZEROS)
        # zeros share an index: the pair of their other endpoints gets C/3
        shared = set(PAIRS[a]) & set(PAIRS[b])
        others = (set(PAIRS[a]) | set(PAIRS[b])) - shared
        i, j = sorted(others)
        special = PAIR_SLOT[(i, j)]
        for k in range(6):
            if k in slots:
                continue
            arg[k] = C / 3.0 if k == special else 2.0 * C / 9.0
        return SimplexMaxResult(4.0 * C**3 / 81.0, PairVector(*arg), SimplexCase.TWO_ZEROS)

    if nz == 3:
        free = [k for k in range(6) if k not in slots]
        for k in free:
            arg[k] = C / 3.0
        if _common_index(free):
            # free pairs share an index, so every monomial dies
            return SimplexMaxResult(0.0, PairVector(*arg), SimplexCase.THREE_ZEROS)
        return SimplexMaxResult(C**3 / 27.0, PairVector(*arg), SimplexCase.THREE_ZEROS)

    free = [k for k in range(6) if k not in slots]
    if not free:
        raise ValueError("all six weights pinned to zero: empty constraint set")
    for k in free:
        arg[k] = C / len(free)
    return SimplexMaxResult(0.0, PairVector(*arg), SimplexCase.MORE_ZEROS)


class TetrahedronIdentities(NamedTuple):
    """Observed and expected values of the two centered-tetrahedron identities."""

    f_gamma: float
    zeta_sum: float
    expected_f: float
    expected_sum: float


def tetrahedron_identities(points: Sequence[Vector3]) -> TetrahedronIdentities:
    """Evaluate the form at the opposite-pair inner products of a centered
    tetrahedron, plus the weighted cross-norm sum, against their closed forms.

    For points p1..p4 with zero sum and tetrahedron volume V, the form at
    gamma_ij = -<p_s, p_t> equals (9/4)V^2 and the sum of
    gamma_ij * |p_i x p_j|^2 equals (27/4)V^2.
    """
    if len(points) != 4:
        raise ValueError(f"expected 4 points, got {len(points)}")
    p = points
    total = p[0] + p[1] + p[2] + p[3]
    scale = max(q.norm() for q in p)
    if total.norm() > 1e-8 * max(scale, 1e-300):
        raise ValueError("not centered")

    gamma = []
    zeta_terms = []
    for i, j in PAIRS:
        s, t = [k for k in (1, 2, 3, 4) if k not in (i, j)]
        g = -p[s - 1].dot(p[t - 1])
        gamma.append(g)
        zeta_terms.append(g * p[i - 1].cross(p[j - 1]).norm_sq())

    vol = abs(det3(p[0], p[1], p[2])) * (2.0 / 3.0)
    f_gamma = volume_form(gamma)
    zeta_sum = math.fsum(zeta_terms)
    return TetrahedronIdentities(
        f_gamma=f_gamma,
        zeta_sum=zeta_sum,
        expected_f=2.25 * vol * vol,
        expected_sum=6.75 * vol * vol,
    )
