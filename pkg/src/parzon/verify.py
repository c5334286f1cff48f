"""Randomized verification sweeps behind the `verify` CLI subcommand.

Each suite draws seeded samples, evaluates an algebraic identity or bound
by two independent routes, and reports the worst deviation per assertion.
Failures carry the offending sample so it can be replayed as a regression
fixture.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .geom import Vector3, cross_det_identity
from .isotropy import SQRT2, beta_from_isotropy, isotropy_matrix, reduction_quantities
from .optimizer import OptimConfig, numeric_simplex_max
from .parallelohedron import build
from .sampling import as_tetrahedron, centered_tetrahedra, obtuse_tetrahedra
from .volume_form import simplex_max, volume_form_batch
from .zonotope import mean_width

SUITE_DEFAULTS = {
    "identities": {"trials": 1000, "tol": 1e-9},
    "cross-id": {"trials": 1000, "tol": 1e-9},
    "isotropy": {"trials": 500, "tol": 1e-9},
    "bound-chain": {"trials": 1000, "tol": 1e-9},
    "lemma-max": {"trials": 100000, "tol": 1e-8},
}


@dataclass(frozen=True)
class AssertionReport:
    """Worst observed deviation of one checked assertion."""

    name: str
    max_deviation: float
    tolerance: float
    passed: bool
    counterexample: dict | None = None


@dataclass(frozen=True)
class SweepReport:
    """Outcome of one verification suite."""

    suite: str
    trials: int
    seed: int
    assertions: tuple[AssertionReport, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "assertions": [
                {
                    "name": a.name,
                    "max_deviation": a.max_deviation,
                    "tolerance": a.tolerance,
                    "pass": a.passed,
                }
                for a in self.assertions
            ],
            "pass": self.passed,
        }

    def counterexamples(self) -> list[dict]:
        out = []
        for a in self.assertions:
            if not a.passed and a.counterexample is not None:
                out.append({"assertion": a.name, "sample": a.counterexample})
        return out


def _report(name, devs, tol, samples) -> AssertionReport:
    devs = np.asarray(devs, dtype=float)
    worst = int(np.argmax(devs))
    dev = float(devs[worst])
    ok = dev <= tol
    return AssertionReport(
        name=name,
        max_deviation=dev,
        tolerance=tol,
        passed=ok,
        counterexample=None if ok else samples(worst),
    )


def _gamma_tau_zeta(batch: np.ndarray):
    """gamma, tau, zeta arrays (n, 6) for tetra batches shaped (n, 4, 3),
    in the fixed pair slot order."""
    v = batch
    pair_idx = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    comp_idx = ((2, 3), (1, 3), (1, 2), (0, 3), (0, 2), (0, 1))
    n = v.shape[0]
    gamma = np.empty((n, 6))
    cross_sq = np.empty((n, 6))
    for slot in range(6):
        s, t = comp_idx[slot]
        gamma[:, slot] = -np.einsum("nk,nk->n", v[:, s], v[:, t])
        i, j = pair_idx[slot]
        c = np.cross(v[:, i], v[:, j])
        cross_sq[:, slot] = np.einsum("nk,nk->n", c, c)
    cross_norm = np.sqrt(cross_sq)
    return gamma, gamma * cross_sq, gamma * cross_norm


def sweep_identities(trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> SweepReport:
    """Centered-tetrahedron identities: the form at gamma equals (9/4)V^2
    and the zeta-weighted cross-norm sum equals (27/4)V^2, relative."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 10)))
    batch = centered_tetrahedra(trials, rng)
    gamma, tau, _ = _gamma_tau_zeta(batch)
    vol = (2.0 / 3.0) * np.abs(np.linalg.det(batch[:, :3]))
    f_gamma = volume_form_batch(gamma)
    tau_sum = tau.sum(axis=1)
    expected_f = 2.25 * vol**2
    expected_sum = 6.75 * vol**2
    dev_f = np.abs(f_gamma - expected_f) / expected_f
    dev_s = np.abs(tau_sum - expected_sum) / expected_sum

    def sample(k):
        return {"tetrahedron": batch[k].tolist()}

    return SweepReport(
        suite="identities",
        trials=trials,
        seed=seed,
        assertions=(
            _report("form at gamma equals (9/4) V^2", dev_f, tol, sample),
            _report("weighted cross-norm sum equals (27/4) V^2", dev_s, tol, sample),
        ),
    )


def sweep_cross_identity(trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> SweepReport:
    """Cross-product determinant identity on Gaussian vertex quadruples
    with random pair selections, absolute deviation."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 11)))
    pts = rng.standard_normal((trials, 4, 3))
    all_pairs = [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j]
    devs = np.empty(trials)
    chosen = []
    for k in range(trials):
        pairs = [all_pairs[i] for i in rng.integers(0, len(all_pairs), size=3)]
        chosen.append(pairs)
        vs = [Vector3(*row) for row in pts[k]]
        lhs, rhs = cross_det_identity(vs, pairs)
        devs[k] = abs(lhs - rhs)

    def sample(k):
        return {"vertices": pts[k].tolist(), "pairs": [list(p) for p in chosen[k]]}

    return SweepReport(
        suite="cross-id",
        trials=trials,
        seed=seed,
        assertions=(
            _report("determinant of pair crosses equals signed volume products", devs, tol, sample),
        ),
    )


def sweep_isotropy(trials: int = 500, seed: int = 0, tol: float = 1e-9) -> SweepReport:
    """Round trip: recovered weights put the body in isotropic position
    (identity matrix, entrywise) and reproduce the requested mean width
    (relative, at tol/10)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 12)))
    batch = obtuse_tetrahedra(trials, rng)
    widths = rng.uniform(0.5, 3.0, size=trials)
    dev_m = np.empty(trials)
    dev_w = np.empty(trials)
    eye = np.eye(3)
    for k in range(trials):
        t = as_tetrahedron(batch[k])
        b = beta_from_isotropy(t, widths[k])
        m = isotropy_matrix(t, b).to_numpy()
        dev_m[k] = np.abs(m - eye).max()
        dev_w[k] = abs(mean_width(build(t, b)) - widths[k]) / widths[k]

    def sample(k):
        return {"tetrahedron": batch[k].tolist(), "w_target": float(widths[k])}

    return SweepReport(
        suite="isotropy",
        trials=trials,
        seed=seed,
        assertions=(
            _report("isotropy matrix is the identity", dev_m, tol, sample),
            _report("mean width matches the target", dev_w, tol / 10.0, sample),
        ),
    )


def sweep_bound_chain(trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> SweepReport:
    """Bound chain on obtuse-centered tetrahedra: the form at zeta stays
    below the Cauchy-Schwarz bound, which stays below sqrt(2)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 13)))
    batch = obtuse_tetrahedra(trials, rng)
    gamma, tau, zeta = _gamma_tau_zeta(batch)
    f_zeta = volume_form_batch(zeta)
    cs = np.sqrt(np.maximum(volume_form_batch(gamma), 0.0) * np.maximum(volume_form_batch(tau), 0.0))
    dev_first = np.maximum(f_zeta - cs, 0.0)
    dev_second = np.maximum(cs - SQRT2, 0.0)

    def sample(k):
        return {"tetrahedron": batch[k].tolist()}

    return SweepReport(
        suite="bound-chain",
        trials=trials,
        seed=seed,
        assertions=(
            _report("form at zeta is below the Cauchy-Schwarz bound", dev_first, tol, sample),
            _report("Cauchy-Schwarz bound is below sqrt(2)", dev_second, tol, sample),
        ),
    )


LEMMA_MAX_PATTERNS: tuple[tuple[str, tuple[tuple[int, int], ...]], ...] = (
    ("no zeros", ()),
    ("one zero", ((3, 4),)),
    ("two disjoint zeros", ((1, 2), (3, 4))),
    ("two intersecting zeros", ((1, 2), (1, 3))),
    ("three zeros", ((1, 4), (2, 4), (3, 4))),
    ("four zeros", ((1, 4), (2, 4), (3, 4), (1, 2))),
)


def sweep_lemma_max(trials: int = 100000, seed: int = 0, tol: float = 1e-8) -> SweepReport:
    """Constrained simplex maxima: the numeric maximizer agrees with the
    analytic values, and random simplex samples never beat them (absolute
    slack 1e-12)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, 14)))
    cfg = OptimConfig(starts=32, seed=seed, max_iters=4000)
    assertions = []
    for label, pattern in LEMMA_MAX_PATTERNS:
        analytic = simplex_max(1.0, pattern)
        numeric = numeric_simplex_max(1.0, pattern, cfg)
        dev = abs(numeric.max_value - analytic.max_value)
        assertions.append(
            AssertionReport(
                name=f"numeric maximum matches analytic ({label})",
                max_deviation=dev,
                tolerance=tol,
                passed=dev <= tol,
                counterexample=None if dev <= tol else {"pattern": [list(p) for p in pattern]},
            )
        )
        free = _free_slots(pattern)
        samples = np.zeros((trials, 6))
        samples[:, free] = rng.dirichlet(np.ones(len(free)), size=trials)
        excess = volume_form_batch(samples) - analytic.max_value
        worst = float(np.max(excess))
        ok = worst <= 1e-12
        assertions.append(
            AssertionReport(
                name=f"samples never beat the analytic maximum ({label})",
                max_deviation=max(worst, 0.0),
                tolerance=1e-12,
                passed=ok,
                counterexample=None
                if ok
                else {"pattern": [list(p) for p in pattern], "weights": samples[int(np.argmax(excess))].tolist()},
            )
        )
    return SweepReport(
        suite="lemma-max",
        trials=trials,
        seed=seed,
        assertions=tuple(assertions),
    )


def _free_slots(pattern: Sequence[Sequence[int]]) -> list[int]:
    from .volume_form import normalize_zero_pattern

    zero = normalize_zero_pattern(pattern)
    return [k for k in range(6) if k not in zero]


SUITES = {
    "identities": sweep_identities,
    "cross-id": sweep_cross_identity,
    "isotropy": sweep_isotropy,
    "bound-chain": sweep_bound_chain,
    "lemma-max": sweep_lemma_max,
}


def run_suite(suite: str, trials: int | None = None, seed: int = 0, tol: float | None = None) -> SweepReport:
    """Run one named suite with per-suite defaults for trials and tol."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite: {suite!r} (choose from {sorted(SUITES)})")
    defaults = SUITE_DEFAULTS[suite]
    return SUITES[suite](
        trials=defaults["trials"] if trials is None else trials,
        seed=seed,
        tol=defaults["tol"] if tol is None else tol,
    )
