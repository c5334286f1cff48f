import json
import math

import numpy as np
import pytest

from parzon import jsonio


def test_float_roundtrip_is_lossless(rng):
    vals = list(rng.standard_normal(200)) + [1e-300, 1e300, 0.1, 2.0 / 3.0]
    text = jsonio.dumps(vals)
    back = json.loads(text)
    assert back == vals


def test_integral_floats_render_with_decimal_point():
    assert jsonio.dumps(1.0) == "1.0"
    assert jsonio.dumps(-16.0) == "-16.0"
    assert jsonio.dumps(0.5) == "0.5"


def test_ints_and_bools_and_none():
    assert jsonio.dumps({"a": 1, "b": True, "c": None, "d": False}) == '{"a": 1, "b": true, "c": null, "d": false}'


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        jsonio.dumps(float("nan"))
    with pytest.raises(ValueError):
        jsonio.dumps({"x": [1.0, float("inf")]})


def test_numpy_values_supported():
    doc = {"i": np.int64(3), "f": np.float64(0.25), "a": np.array([1.0, 2.0])}
    assert json.loads(jsonio.dumps(doc)) == {"i": 3, "f": 0.25, "a": [1.0, 2.0]}


def test_non_string_keys_rejected():
    with pytest.raises(TypeError):
        jsonio.dumps({1: "x"})


def test_indent_output_parses_and_nests():
    doc = {"rows": [{"a": 1}, {"a": 2}], "empty": {}, "list": []}
    text = jsonio.dumps(doc, indent=2)
    assert json.loads(text) == doc
    assert "\n  " in text
    assert jsonio.dumps(doc) == json.dumps(doc, separators=(", ", ": "))


def test_indent_validation():
    with pytest.raises(ValueError):
        jsonio.dumps({}, indent=-1)


def test_deterministic_key_order():
    doc = {"b": 1, "a": 2}
    assert jsonio.dumps(doc) == '{"b": 1, "a": 2}'
