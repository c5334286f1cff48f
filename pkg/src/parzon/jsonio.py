"""Deterministic JSON output.

Floats are rendered with %.17g so reruns with the same seed are
byte-identical and values survive a parse round trip exactly.
Non-finite floats are rejected; callers map them to null explicitly
where the schema allows it.
"""

from __future__ import annotations

import json
import math
from typing import Any


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("non-finite float in JSON payload")
    if x == int(x) and abs(x) < 1e16:
        return f"{x:.1f}"
    return f"{x:.17g}"


def _encode(obj: Any, indent: int | None, level: int) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=True)
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = ", " if indent is None else ","
    if isinstance(obj, dict):
        items = []
        for key, value in obj.items():
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {type(key).__name__}")
            items.append(f"{pad}{json.dumps(key, ensure_ascii=True)}: {_encode(value, indent, level + 1)}")
        if not items:
            return "{}"
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in obj]
        if not items:
            return "[]"
        return "[" + sep.join(items) + end + "]"
    try:
        import numpy as np

        if isinstance(obj, np.integer):
            return str(int(obj))
        if isinstance(obj, np.floating):
            return _format_float(float(obj))
        if isinstance(obj, np.ndarray):
            return _encode(obj.tolist(), indent, level)
    except ImportError:
        pass
    raise TypeError(f"type {type(obj).__name__} is not JSON-serializable")


def dumps(obj: Any, indent: int | None = None) -> str:
    """Serialize to a JSON string with 17-significant-digit floats.

    indent=None gives a compact single line; an integer pretty-prints
    with that many spaces per level. Dict insertion order is preserved.
    """
    if indent is not None and (not isinstance(indent, int) or indent < 0):
        raise ValueError("indent must be None or a nonnegative integer")
    text = _encode(obj, indent, 0)
    if indent is None:
        return text
    return text
