"""JSON file formats for matrices, factor sequences and recipes.

Matrix file::

    {"n": 3, "re": [[...], ...], "im": [[...], ...]}

Factor file::

    {"n": 3, "factors": [{"kind": "phase", "thetas": [...]},
                         {"kind": "block", "j": 2, "z_re": [...], "z_im": [...], "beta": 0.5}]}

Recipe files add ``target``, ``provenance`` and ``module_count`` to the
factor file; decomposition output adds ``residual``. Floats are written with
17 significant digits so every double survives a round trip bit for bit, and
key order is fixed so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .gates import GateId, GateKind
from .matrix import as_cmatrix
from .modules import BlockModule, FactorSequence, PhaseModule
from .synthesis import Recipe

__all__ = [
    "FormatError",
    "dumps",
    "matrix_to_dict",
    "matrix_from_dict",
    "sequence_to_dict",
    "sequence_from_dict",
    "recipe_to_dict",
    "target_from_name",
    "write_json",
    "read_json",
    "write_matrix",
    "read_matrix",
    "write_sequence",
    "read_sequence",
]


class FormatError(ValueError):
    """The document does not follow the expected schema."""


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise FormatError(f"cannot serialize non-finite value {x!r}")
    text = format(x, ".17g")
    if all(ch not in text for ch in ".en"):
        text += ".0"
    return text


def dumps(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON text; floats use 17 significant digits, numeric lists stay on one line."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [f"{inner}{dumps(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise FormatError(f"cannot serialize {type(obj).__name__}")


def matrix_to_dict(m: np.ndarray) -> dict:
    m = as_cmatrix(m)
    return {
        "n": m.shape[0],
        "re": [[float(v) for v in row] for row in m.real],
        "im": [[float(v) for v in row] for row in m.imag],
    }


def _float_grid(doc: dict, key: str, n: int) -> np.ndarray:
    rows = doc.get(key)
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"'{key}' must be a list of {n} rows")
    out = np.empty((n, n))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"'{key}' row {i} must have {n} entries")
        for k, v in enumerate(row):
            out[i, k] = _number(v, f"{key}[{i}][{k}]")
    return out


def _number(v: Any, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise FormatError(f"{where} must be a number")
    x = float(v)
    if not math.isfinite(x):
        raise FormatError(f"{where} must be finite")
    return x


def _dimension(doc: Any) -> int:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError("'n' must be a positive integer")
    return n


def matrix_from_dict(doc: Any) -> np.ndarray:
    n = _dimension(doc)
    return _float_grid(doc, "re", n) + 1j * _float_grid(doc, "im", n)


def _factor_to_dict(f) -> dict:
    if isinstance(f, PhaseModule):
        return {"kind": "phase", "thetas": list(f.thetas)}
    return {
        "kind": "block",
        "j": f.j,
        "z_re": [v.real for v in f.z_tilde],
        "z_im": [v.imag for v in f.z_tilde],
        "beta": f.beta,
    }


def sequence_to_dict(seq: FactorSequence) -> dict:
    return {"n": seq.n, "factors": [_factor_to_dict(f) for f in seq.factors]}


def _numbers(d: dict, key: str, where: str) -> list[float]:
    vals = d.get(key)
    if not isinstance(vals, list):
        raise FormatError(f"{where}.{key} must be a list")
    return [_number(v, f"{where}.{key}[{i}]") for i, v in enumerate(vals)]


def sequence_from_dict(doc: Any) -> FactorSequence:
    n = _dimension(doc)
    raw = doc.get("factors")
    if not isinstance(raw, list):
        raise FormatError("'factors' must be a list")
    factors = []
    for i, d in enumerate(raw):
        where = f"factors[{i}]"
        if not isinstance(d, dict):
            raise FormatError(f"{where} must be an object")
        try:
            if d.get("kind") == "phase":
                thetas = _numbers(d, "thetas", where)
                if len(thetas) != n:
                    raise FormatError(f"{where}.thetas must have {n} entries")
                factors.append(PhaseModule(tuple(thetas)))
            elif d.get("kind") == "block":
                j = d.get("j")
                if isinstance(j, bool) or not isinstance(j, int):
                    raise FormatError(f"{where}.j must be an integer")
                re = _numbers(d, "z_re", where)
                im = _numbers(d, "z_im", where)
                if len(re) != len(im):
                    raise FormatError(f"{where}: z_re and z_im differ in length")
                beta = _number(d.get("beta"), f"{where}.beta")
                factors.append(BlockModule(n, j, tuple(complex(a, b) for a, b in zip(re, im)), beta))
            else:
                raise FormatError(f"{where}.kind must be 'phase' or 'block'")
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from exc
    return FactorSequence(n, tuple(factors))


def recipe_to_dict(recipe: Recipe) -> dict:
    doc = {
        "target": recipe.target.name,
        "provenance": recipe.provenance,
        "module_count": recipe.module_count,
    }
    doc.update(sequence_to_dict(recipe.sequence))
    return doc


def target_from_name(name: str, n: int) -> GateId:
    """Inverse of ``GateId.name`` (``"sigma1"``, ``"pauli(1,2)"``, ...)."""
    if name.startswith("pauli(") and name.endswith(")"):
        a, b = (int(x) for x in name[6:-1].split(","))
        return GateId(GateKind.PAULI, n, a, b)
    return GateId(GateKind(name), n)


def write_json(path: str | Path, doc: dict) -> None:
    Path(path).write_text(dumps(doc) + "\n", encoding="utf-8")


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def write_matrix(path: str | Path, m: np.ndarray) -> None:
    write_json(path, matrix_to_dict(m))


def read_matrix(path: str | Path) -> np.ndarray:
    return matrix_from_dict(read_json(path))


def write_sequence(path: str | Path, seq: FactorSequence, **extra: Any) -> None:
    doc = dict(extra)
    doc.update(sequence_to_dict(seq))
    write_json(path, doc)


def read_sequence(path: str | Path) -> FactorSequence:
    return sequence_from_dict(read_json(path))
