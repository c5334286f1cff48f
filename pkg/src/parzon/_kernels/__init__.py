"""Kernel backend selection.

Imports the compiled core when it is available and falls back to the
pure-Python twin otherwise.  Set ``PARZON_KERNELS=python`` or ``=c`` to
force a backend; the default ``auto`` prefers the compiled one.
"""

from __future__ import annotations

import os

from . import _purecore

_requested = os.environ.get("PARZON_KERNELS", "auto")

if _requested == "python":
    _impl = _purecore
elif _requested in ("auto", "c"):
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "c":
            raise
        _impl = _purecore
else:
    raise ValueError(
        f"PARZON_KERNELS must be 'auto', 'c', or 'python', got {_requested!r}"
    )

BACKEND = _impl.BACKEND
DET_FLOOR = _impl.DET_FLOOR
VOLUME_FLOOR = _impl.VOLUME_FLOOR
DEGENERATE_PENALTY = _impl.DEGENERATE_PENALTY

det3 = _impl.det3
cross3 = _impl.cross3
volume_form = _impl.volume_form
volume_form_grad = _impl.volume_form_grad
zonotope_volume = _impl.zonotope_volume
zonotope_surface = _impl.zonotope_surface
zonotope_mean_width = _impl.zonotope_mean_width
width_volume_objective = _impl.width_volume_objective
isotropic_objective = _impl.isotropic_objective


def backend_name() -> str:
    """Name of the active backend: 'c' or 'python'."""
    return BACKEND


def available_backends():
    """Mapping of backend name to kernel module, for benchmarks and tests."""
    out = {"python": _purecore}
    try:
        from . import _fastcore
    except ImportError:
        pass
    else:
        out["c"] = _fastcore
    return out
