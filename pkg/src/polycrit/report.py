"""Machine-readable report rendering.

JSON for structured results, CSV for tables; every floating-point value
is serialized with 17 significant digits so reports are byte-stable and
round-trip exactly.  Complex numbers appear as [re, im] arrays; the only
non-finite value that can legitimately occur (p = infinity) is rendered
as the string "inf".
"""

from __future__ import annotations

import dataclasses
import json
import math
from enum import Enum

from .poly import Polynomial, RootSet


def format_float(x: float) -> str:
    if math.isfinite(x):
        return "%.17g" % x
    return json.dumps("inf" if x > 0 else ("-inf" if x < 0 else "nan"))


def to_jsonable(obj):
    """Convert package objects to a JSON-ready tree (floats stay floats)."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, RootSet):
        return [to_jsonable(z) for z in obj.roots]
    if isinstance(obj, Polynomial):
        return {"coeffs": [to_jsonable(c) for c in obj.coeffs]}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _render(obj, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.append(pad + "  " + json.dumps(str(k)) + ": ")
            _render(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad + "  ")
            _render(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot render {type(obj)!r}")


def dump_json(obj) -> str:
    """Deterministic JSON: insertion-ordered keys, 17-digit floats, LF."""
    out: list[str] = []
    _render(to_jsonable(obj), 0, out)
    out.append("\n")
    return "".join(out)
