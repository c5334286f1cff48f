"""Multi-start derivative-free search for minimal mean width at unit volume.

Each combinatorial type fixes a zero pattern on the pair weights; the
search runs over raw tetrahedron coordinates (renormalized inside every
objective call) and square roots of the free weights, so the feasible set
needs no explicit constraints.  Every start draws its own sub-seed from
the configured seed, which makes results identical no matter how many
worker threads execute the starts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import optimize as _sciopt

from . import _kernels as K
from .errors import NoFeasibleStartError
from .geom import Vector3
from .isotropy import beta_from_isotropy, reduction_quantities
from .parallelohedron import (
    BetaWeights,
    CenteredTetrahedron,
    ParallelohedronType,
    build,
    classify,
    normalize_tetrahedron,
)
from .volume_form import (
    PairVector,
    SimplexMaxResult,
    normalize_zero_pattern,
    simplex_max,
    volume_form,
    volume_form_batch,
    volume_form_grad_batch,
)
from .zonotope import mean_width as zonotope_mean_width

# canonical zero slots per type, in the fixed pair order
TYPE_ZERO_SLOTS: dict[ParallelohedronType, tuple[int, ...]] = {
    ParallelohedronType.CUBE: (2, 4, 5),
    ParallelohedronType.HEXAGONAL_PRISM: (0, 1),
    ParallelohedronType.RHOMBIC_DODECAHEDRON: (0, 5),
    ParallelohedronType.ELONGATED_DODECAHEDRON: (5,),
    ParallelohedronType.TRUNCATED_OCTAHEDRON: (),
}

# analytic minimal widths at unit volume; type 4 only has a lower bound
KNOWN_MIN_WIDTH: dict[int, float] = {
    1: 1.5,
    2: 3.0 ** (7.0 / 6.0) / 2.0 ** (4.0 / 3.0),
    3: 3.0 ** 0.5 / 2.0 ** (1.0 / 3.0),
    5: 3.0 / 2.0 ** (7.0 / 6.0),
}
TYPE4_WIDTH_LOWER_BOUND: float = 3.0 ** (4.0 / 3.0) / 2.0 ** (5.0 / 3.0)
OPTIMUM_KNOWN: dict[int, bool] = {1: True, 2: True, 3: True, 4: False, 5: True}

_PENALTY_CUTOFF = K.DEGENERATE_PENALTY * 0.5


@dataclass(frozen=True)
class OptimConfig:
    """Multi-start search configuration.

    f_tol and x_tol drive the per-start simplex search termination; f_tol
    also decides which starts count as agreeing with the best one.
    """

    starts: int = 64
    seed: int = 0
    max_iters: int = 6000
    x_tol: float = 1e-10
    f_tol: float = 1e-12
    type_pattern: ParallelohedronType = ParallelohedronType.TRUNCATED_OCTAHEDRON

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not (self.x_tol > 0.0 and self.f_tol > 0.0):
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class OptimResult:
    """Best body found: width, representation data, and start statistics."""

    best_width: float
    tetrahedron: CenteredTetrahedron
    betas: BetaWeights
    converged: bool
    starts_agreeing: int
    history: tuple[float, ...]


def _sub_rng(seed: int, stream: int, start_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, stream, start_index)))


def _nm_once(fun: Callable, x0: np.ndarray, maxiter: int, xatol: float, fatol: float):
    return _sciopt.minimize(
        fun,
        x0,
        method="Nelder-Mead",
        options={
            "maxiter": maxiter,
            "maxfev": 4 * maxiter,
            "xatol": xatol,
            "fatol": fatol,
            "adaptive": True,
        },
    )


def _nm_chain(fun: Callable, x0: np.ndarray, cfg: OptimConfig, rounds: int):
    """Simplex search with full restarts; a restart rebuilds the initial
    simplex around the incumbent, which shakes off degenerate shrinkage."""
    x = np.asarray(x0, dtype=float)
    best = None
    for _ in range(rounds):
        res = _nm_once(fun, x, cfg.max_iters, cfg.x_tol, cfg.f_tol)
        if best is None or res.fun < best.fun:
            best = res
        x = res.x
    return best


def _draw_start(rng: np.random.Generator, n_free: int) -> np.ndarray:
    for _ in range(256):
        coords = rng.standard_normal(9)
        d = K.det3(*coords)
        if abs(d) >= 0.3:
            break
    roots = rng.uniform(0.6, 1.4, size=n_free)
    return np.concatenate([coords, roots])


def _finalize_general(x: np.ndarray, free: tuple[int, ...]) -> tuple[CenteredTetrahedron, BetaWeights]:
    pts = [Vector3(*x[3 * k : 3 * k + 3]) for k in range(3)]
    pts.append(Vector3(-(x[0] + x[3] + x[6]), -(x[1] + x[4] + x[7]), -(x[2] + x[5] + x[8])))
    swapped = K.det3(*x[:9]) < 0.0
    t = normalize_tetrahedron(pts)

    beta = [0.0] * 6
    for k, slot in enumerate(free):
        r = float(x[9 + k])
        beta[slot] = r * r
    if swapped:
        # the orientation fix swapped v1 and v2, which relabels the pairs
        # 13<->23 and 14<->24
        beta[1], beta[3] = beta[3], beta[1]
        beta[2], beta[4] = beta[4], beta[2]

    vol = volume_form(beta)
    if vol <= 0.0:
        raise NoFeasibleStartError("search collapsed to a zero-volume body")
    s = vol ** (-1.0 / 3.0)
    b = BetaWeights(*(v * s for v in beta))
    return t, b


def minimize_mean_width(cfg: OptimConfig, workers: int = 1) -> OptimResult:
    """Minimize mean width at unit volume within one combinatorial type.

    Runs cfg.starts independent simplex searches over tetrahedron
    coordinates and free weight roots, polishes the best start, rescales
    the weights so the volume is exactly 1, and reports the body.  Results
    are bitwise reproducible for a fixed config, independent of workers.
    """
    if cfg.type_pattern == ParallelohedronType.DEGENERATE:
        raise ValueError("cannot optimize the degenerate pattern")
    zero_slots = TYPE_ZERO_SLOTS[cfg.type_pattern]
    free = tuple(k for k in range(6) if k not in zero_slots)
    fun = lambda x: K.width_volume_objective(np.ascontiguousarray(x, dtype=float), free)

    def run_start(idx: int):
        rng = _sub_rng(cfg.seed, 0, idx)
        x0 = _draw_start(rng, len(free))
        res = _nm_chain(fun, x0, cfg, rounds=2)
        return float(res.fun), np.array(res.x), bool(res.success)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_start, range(cfg.starts)))
    else:
        outcomes = [run_start(i) for i in range(cfg.starts)]

    finals = np.array([o[0] for o in outcomes])
    if np.min(finals) >= _PENALTY_CUTOFF:
        raise NoFeasibleStartError("no feasible start")
    best_idx = int(np.argmin(finals))

    polish = _nm_chain(fun, outcomes[best_idx][1], cfg, rounds=4)
    t, b = _finalize_general(np.asarray(polish.x, dtype=float), free)

    got = classify(b)
    if got != cfg.type_pattern:
        raise NoFeasibleStartError(
            f"search left the requested type: wanted {cfg.type_pattern.name}, got {got.name}"
        )
    best_width = zonotope_mean_width(build(t, b))
    history = tuple(float(v) for v in finals)
    agreeing = int(np.sum(np.abs(finals - best_width) <= cfg.f_tol))
    return OptimResult(
        best_width=best_width,
        tetrahedron=t,
        betas=b,
        converged=bool(polish.success),
        starts_agreeing=agreeing,
        history=history,
    )


def minimize_width_isotropic_fastpath(cfg: OptimConfig, workers: int = 1) -> OptimResult:
    """Truncated-octahedron search through the isotropic reduction.

    Only the nine tetrahedron coordinates are free: the objective
    maximizes the form at the zeta quantities, and the weights are
    recovered from the isotropy formula afterwards.
    """
    if cfg.type_pattern != ParallelohedronType.TRUNCATED_OCTAHEDRON:
        raise ValueError("fastpath only applies to the all-positive pattern")
    fun = lambda x: K.isotropic_objective(np.ascontiguousarray(x, dtype=float))

    def run_start(idx: int):
        rng = _sub_rng(cfg.seed, 1, idx)
        x0 = _draw_start(rng, 0)
        res = _nm_chain(fun, x0, cfg, rounds=2)
        return float(res.fun), np.array(res.x), bool(res.success)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_start, range(cfg.starts)))
    else:
        outcomes = [run_start(i) for i in range(cfg.starts)]

    finals = np.array([o[0] for o in outcomes])
    if np.min(finals) >= _PENALTY_CUTOFF:
        raise NoFeasibleStartError("no feasible start")
    best_idx = int(np.argmin(finals))

    polish = _nm_chain(fun, outcomes[best_idx][1], cfg, rounds=4)
    x = np.asarray(polish.x, dtype=float)
    pts = [Vector3(*x[3 * k : 3 * k + 3]) for k in range(3)]
    pts.append(-(pts[0] + pts[1] + pts[2]))
    t = normalize_tetrahedron(pts)

    f_zeta = volume_form(reduction_quantities(t).zeta)
    if f_zeta <= 0.0:
        raise NoFeasibleStartError("search collapsed to a zero-volume body")
    width = 1.5 * f_zeta ** (-1.0 / 3.0)
    b = beta_from_isotropy(t, width)

    def width_of(fval: float) -> float:
        return 1.5 * fval ** (-1.0 / 3.0) if fval > 0.0 else math.inf

    history = tuple(width_of(-v) for v in finals)
    best_width = zonotope_mean_width(build(t, b))
    agreeing = int(np.sum(np.abs(np.array(history) - best_width) <= cfg.f_tol))
    return OptimResult(
        best_width=best_width,
        tetrahedron=t,
        betas=b,
        converged=bool(polish.success),
        starts_agreeing=agreeing,
        history=history,
    )


def _project_simplex_rows(y: np.ndarray, total: float) -> np.ndarray:
    """Euclidean projection of each row onto {x >= 0, sum x = total}."""
    n = y.shape[1]
    u = np.sort(y, axis=1)[:, ::-1]
    css = np.cumsum(u, axis=1) - total
    idx = np.arange(1, n + 1)
    cond = u - css / idx > 0.0
    rho = n - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(y.shape[0]), rho] / (rho + 1.0)
    return np.maximum(y - theta[:, None], 0.0)


def numeric_simplex_max(
    C: float,
    zero_pattern: Iterable[Sequence[int]] = (),
    cfg: OptimConfig | None = None,
) -> SimplexMaxResult:
    """Numeric maximizer of the form on a zero-constrained weight simplex.

    Multi-start projected gradient ascent over the free slots, with all
    starts marching in one vectorized batch.  Case tagging reuses the
    analytic routine; the value and argmax come from the search.
    """
    if cfg is None:
        cfg = OptimConfig()
    C = float(C)
    if not (C > 0.0) or not math.isfinite(C):
        raise ValueError("nonpositive budget")
    analytic = simplex_max(C, zero_pattern)
    zero_slots = normalize_zero_pattern(zero_pattern)
    free = [k for k in range(6) if k not in zero_slots]
    nf = len(free)

    rng = _sub_rng(cfg.seed, 2, 0)
    x = rng.dirichlet(np.ones(nf), size=cfg.starts) * C
    steps = np.full(cfg.starts, 0.1 * C)

    def f_of(xfree: np.ndarray) -> np.ndarray:
        full = np.zeros((xfree.shape[0], 6))
        full[:, free] = xfree
        return volume_form_batch(full)

    def g_of(xfree: np.ndarray) -> np.ndarray:
        full = np.zeros((xfree.shape[0], 6))
        full[:, free] = xfree
        return volume_form_grad_batch(full)[:, free]

    fx = f_of(x)
    for _ in range(cfg.max_iters):
        if np.all(steps < 1e-16 * C):
            break
        y = _project_simplex_rows(x + steps[:, None] * g_of(x), C)
        fy = f_of(y)
        better = fy > fx
        x[better] = y[better]
        fx[better] = fy[better]
        steps[better] *= 1.2
        steps[~better] *= 0.5

    best = int(np.argmax(fx))
    arg = np.zeros(6)
    arg[free] = x[best]
    return SimplexMaxResult(
        max_value=float(fx[best]),
        argmax=PairVector(*arg),
        case_tag=analytic.case_tag,
    )


@dataclass(frozen=True)
class TableRow:
    """One line of the per-type minimal width table."""

    type_id: int
    type_name: str
    analytic_value: float
    computed_value: float
    abs_error: float | None
    optimum_known: bool
    bound_gap: float | None = None


def width_table(starts: int = 64, seed: int = 0, workers: int = 1) -> list[TableRow]:
    """Minimal mean widths at unit volume for all five types.

    Each type runs its own multi-start search seeded from (seed, type), so
    rows are independently reproducible.
    """
    from .parallelohedron import TYPE_NAMES

    rows = []
    for type_id in (1, 2, 3, 4, 5):
        ptype = ParallelohedronType(type_id)
        cfg = OptimConfig(starts=starts, seed=(seed << 3) + type_id, type_pattern=ptype)
        res = minimize_mean_width(cfg, workers=workers)
        if OPTIMUM_KNOWN[type_id]:
            target = KNOWN_MIN_WIDTH[type_id]
            rows.append(
                TableRow(
                    type_id=type_id,
                    type_name=TYPE_NAMES[ptype],
                    analytic_value=target,
                    computed_value=res.best_width,
                    abs_error=abs(res.best_width - target),
                    optimum_known=True,
                )
            )
        else:
            bound = TYPE4_WIDTH_LOWER_BOUND
            rows.append(
                TableRow(
                    type_id=type_id,
                    type_name=TYPE_NAMES[ptype],
                    analytic_value=bound,
                    computed_value=res.best_width,
                    abs_error=None,
                    optimum_known=False,
                    bound_gap=res.best_width - bound,
                )
            )
    return rows
