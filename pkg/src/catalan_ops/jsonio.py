"""Deterministic JSON/matrix serialization.

Doubles are written with 17 significant digits (losslessly round-trippable);
arbitrary-precision integers travel as decimal strings so no JSON consumer can
silently truncate them.  The emitter is tiny but gives byte-identical output
for identical inputs, which the CLI determinism contract relies on.
"""

from __future__ import annotations

import json
import math

import numpy as np


def format_double(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite double {x!r} cannot be serialized")
    return format(float(x), ".17g")


class BigInt(str):
    """Marker: emit this decimal string unquoted-as-string (kept for clarity)."""


def dumps(obj, indent: int = 2) -> str:
    """Serialize dicts/lists/str/bool/None/int/float with 17-digit doubles."""

    def emit(node, depth: int) -> str:
        pad = " " * (indent * depth)
        inner = " " * (indent * (depth + 1))
        if isinstance(node, dict):
            if not node:
                return "{}"
            items = [
                f'{inner}{json.dumps(str(key))}: {emit(value, depth + 1)}'
                for key, value in node.items()
            ]
            return "{\n" + ",\n".join(items) + f"\n{pad}}}"
        if isinstance(node, (list, tuple)):
            if not node:
                return "[]"
            items = [f"{inner}{emit(value, depth + 1)}" for value in node]
            return "[\n" + ",\n".join(items) + f"\n{pad}]"
        if isinstance(node, bool) or node is None:
            return json.dumps(node)
        if isinstance(node, (str, BigInt)):
            return json.dumps(str(node))
        if isinstance(node, int):
            return str(node)
        if isinstance(node, (float, np.floating)):
            return format_double(float(node))
        raise TypeError(f"cannot serialize {type(node).__name__}")

    return emit(obj, 0) + "\n"


def matrix_to_doc(m: np.ndarray) -> dict:
    """{"d": n, "re": [[...]], "im": [[...]]} row-major."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return {
        "d": int(m.shape[0]),
        "re": [[float(v.real) for v in row] for row in m],
        "im": [[float(v.imag) for v in row] for row in m],
    }


def matrix_from_doc(doc: dict) -> np.ndarray:
    try:
        d = int(doc["d"])
        re = doc["re"]
        im = doc["im"]
    except (KeyError, TypeError) as exc:
        raise ValueError("matrix JSON needs keys d, re, im") from exc
    re = np.asarray(re, dtype=float)
    im = np.asarray(im, dtype=float)
    if re.shape != (d, d) or im.shape != (d, d):
        raise ValueError(f"re/im must be {d}x{d} row-major arrays")
    return re + 1j * im
