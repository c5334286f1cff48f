"""Throughput comparison of the pure-Python and compiled kernel backends.

Run:  python3 benchmarks/bench_kernels.py [--repeats N]

The two backends are expression-for-expression twins (the extension is
compiled without FP contraction), so results must agree bit for bit;
the benchmark asserts that while timing.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from parzon._kernels import available_backends


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_scalar(backends, repeats: int):
    rng = np.random.default_rng(42)
    samples = rng.uniform(0.1, 2.0, size=(20000, 6))
    rows = []
    checks = {}
    for name, mod in backends.items():
        def run(mod=mod):
            acc = 0.0
            for row in samples:
                acc += mod.volume_form(row[0], row[1], row[2], row[3], row[4], row[5])
            return acc
        dt = _time(run, repeats)
        checks[name] = run()
        rows.append((f"volume_form x{len(samples)}", name, dt))
    assert len(set(checks.values())) == 1, "backends disagree on volume_form"
    return rows


def bench_objective(backends, repeats: int):
    rng = np.random.default_rng(43)
    xs = rng.standard_normal((4000, 15))
    free = tuple(range(6))
    rows = []
    checks = {}
    for name, mod in backends.items():
        def run(mod=mod):
            acc = 0.0
            for x in xs:
                acc += mod.width_volume_objective(x, free)
            return acc
        dt = _time(run, repeats)
        checks[name] = run()
        rows.append((f"width_volume_objective x{len(xs)}", name, dt))
    assert len(set(checks.values())) == 1, "backends disagree on the objective"
    return rows


def bench_zonotope(backends, repeats: int):
    rng = np.random.default_rng(44)
    flats = [rng.standard_normal(3 * 12) for _ in range(2000)]
    rows = []
    checks = {}
    for name, mod in backends.items():
        def run(mod=mod):
            acc = 0.0
            for flat in flats:
                acc += mod.zonotope_volume(flat, 12)
                acc += mod.zonotope_surface(flat, 12)
            return acc
        dt = _time(run, repeats)
        checks[name] = run()
        rows.append((f"zonotope measures (12 gens) x{len(flats)}", name, dt))
    assert len(set(checks.values())) == 1, "backends disagree on zonotope measures"
    return rows


def bench_end_to_end(repeats: int):
    rows = []
    widths = {}
    for name in ("python", "c"):
        env = os.environ.copy()
        env["PARZON_KERNELS"] = name
        code = (
            "from parzon.optimizer import OptimConfig, minimize_mean_width\n"
            "from parzon.parallelohedron import ParallelohedronType\n"
            "import time\n"
            "cfg = OptimConfig(starts=8, seed=3, type_pattern=ParallelohedronType.TRUNCATED_OCTAHEDRON)\n"
            "t0 = time.perf_counter()\n"
            "r = minimize_mean_width(cfg)\n"
            "print(time.perf_counter() - t0, repr(r.best_width))\n"
        )
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        dt_s, width = out.stdout.split()
        rows.append(("minimize_mean_width (8 starts)", name, float(dt_s)))
        widths[name] = width
    assert widths["python"] == widths["c"], "backends disagree end to end"
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "c" not in backends:
        print("compiled backend missing; building it first gives the comparison")

    rows = []
    rows += bench_scalar(backends, args.repeats)
    rows += bench_objective(backends, args.repeats)
    rows += bench_zonotope(backends, args.repeats)
    if "c" in backends:
        rows += bench_end_to_end(args.repeats)

    print()
    print(f"{'benchmark':<42} {'backend':<8} {'best time':>10}")
    print("-" * 62)
    base: dict[str, float] = {}
    for label, name, dt in rows:
        speedup = ""
        if name == "python":
            base[label] = dt
        elif label in base:
            speedup = f"  ({base[label] / dt:.1f}x)"
        print(f"{label:<42} {name:<8} {dt:>9.4f}s{speedup}")
    print()
    print("all cross-backend value checks passed (bit-identical)")


if __name__ == "__main__":
    main()
