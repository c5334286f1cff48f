import os
import subprocess
import sys

import numpy as np
import pytest

from parzon._kernels import _purecore as pure
from parzon._kernels import available_backends, backend_name

HAS_C = "c" in available_backends()
needs_c = pytest.mark.skipif(not HAS_C, reason="compiled backend not built")


def test_pure_backend_always_available():
    assert "python" in available_backends()
    assert backend_name() in available_backends()


@needs_c
def test_scalar_kernels_bit_identical(rng):
    fast = available_backends()["c"]
    for _ in range(5000):
        w = rng.uniform(-3.0, 3.0, size=6)
        assert pure.volume_form(*w) == fast.volume_form(*w)
        assert pure.volume_form_grad(*w) == fast.volume_form_grad(*w)


@needs_c
def test_zonotope_kernels_bit_identical(rng):
    fast = available_backends()["c"]
    for _ in range(500):
        m = int(rng.integers(3, 10))
        flat = rng.standard_normal(3 * m)
        assert pure.zonotope_volume(flat, m) == fast.zonotope_volume(flat, m)
        assert pure.zonotope_surface(flat, m) == fast.zonotope_surface(flat, m)
        assert pure.zonotope_mean_width(flat, m) == fast.zonotope_mean_width(flat, m)


@needs_c
def test_objective_kernels_bit_identical(rng):
    fast = available_backends()["c"]
    free = tuple(range(6))
    for _ in range(500):
        x = rng.standard_normal(15)
        assert pure.width_volume_objective(x, free) == fast.width_volume_objective(x, free)
        assert pure.isotropic_objective(x[:9]) == fast.isotropic_objective(x[:9])


def _backend_in_subprocess(env_value):
    env = os.environ.copy()
    env["PARZON_KERNELS"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "from parzon._kernels import backend_name; print(backend_name())"],
        env=env,
        capture_output=True,
        text=True,
    )
    return out


def test_env_var_forces_python_backend():
    out = _backend_in_subprocess("python")
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


@needs_c
def test_env_var_forces_c_backend():
    out = _backend_in_subprocess("c")
    assert out.returncode == 0
    assert out.stdout.strip() == "c"


def test_env_var_rejects_unknown_backend():
    out = _backend_in_subprocess("fortran")
    assert out.returncode != 0


def test_degenerate_tetra_penalty():
    x = np.zeros(15)
    # first two vertex columns identical: zero determinant
    x[:9] = [1, 1, 0, 1, 1, 0, 0, 0, 1]
    x[9:] = 1.0
    assert pure.width_volume_objective(x, tuple(range(6))) == pytest.approx(1e6)
    assert pure.isotropic_objective(x[:9]) == pytest.approx(1e6)
