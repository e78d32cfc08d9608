"""JSON system and path files.

A system file is ``{"generators": [...], "matrix": [[...]]}`` where ``0`` stands
for an infinite entry. A path file is ``{"start": word, "letters": word}``;
either word may be a string or an array of generator names.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core import INFINITY, Caps, CoxeterSystem
from .errors import InvalidInputError
from .paths import EdgePath


class ParseError(InvalidInputError):
    """A malformed file; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _load_json(data) -> object:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError("file", f"not UTF-8 ({e.reason} at byte {e.start})") from None
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError("file", f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def system_from_dict(obj, *, engine: str = "roots", caps: Caps | None = None) -> CoxeterSystem:
    if not isinstance(obj, dict):
        raise ParseError("file", "expected a JSON object")
    for key in ("generators", "matrix"):
        if key not in obj:
            raise ParseError(key, "missing")
    gens = obj["generators"]
    if not isinstance(gens, list) or not gens:
        raise ParseError("generators", "expected a nonempty array of names")
    for i, g in enumerate(gens):
        if not isinstance(g, str) or not g or any(ch.isspace() for ch in g):
            raise ParseError(f"generators[{i}]", f"bad generator name {g!r}")
    if len(set(gens)) != len(gens):
        raise ParseError("generators", "names must be distinct")
    n = len(gens)
    mat = obj["matrix"]
    if not isinstance(mat, list) or len(mat) != n:
        raise ParseError("matrix", f"expected {n} rows")
    rows = []
    for i, row in enumerate(mat):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"matrix[{i}]", f"expected {n} entries")
        out = []
        for j, m in enumerate(row):
            if not _is_int(m) or m < 0:
                raise ParseError(f"matrix[{i}][{j}]", f"expected a non-negative integer, got {m!r}")
            if i == j and m != 1:
                raise ParseError(f"matrix[{i}][{j}]", f"diagonal entry must be 1, got {m}")
            if i != j and m == 1:
                raise ParseError(f"matrix[{i}][{j}]", "off-diagonal entry 1 is not allowed")
            out.append(INFINITY if m == 0 else m)
        rows.append(out)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ParseError(f"matrix[{i}][{j}]", "matrix not symmetric")
    try:
        return CoxeterSystem(gens, rows, engine=engine, caps=caps)
    except InvalidInputError as e:
        raise ParseError("matrix", str(e)) from None


def system_to_dict(sys: CoxeterSystem) -> dict:
    return {
        "generators": list(sys.generators),
        "matrix": [[0 if m == INFINITY else int(m) for m in row] for row in sys.matrix],
    }


def parse_system(data, **kw) -> CoxeterSystem:
    """Decode a system file given as bytes or text."""
    return system_from_dict(_load_json(data), **kw)


def serialize_system(sys: CoxeterSystem) -> str:
    return json.dumps(system_to_dict(sys), indent=None) + "\n"


def load_system(path, **kw) -> CoxeterSystem:
    return parse_system(Path(path).read_bytes(), **kw)


def bundled_system(name: str, **kw) -> CoxeterSystem:
    """One of the shipped system files: ``dinf``, ``grid`` or ``a2tilde``."""
    res = resources.files(__package__) / "data" / f"{name}.json"
    if not res.is_file():
        raise InvalidInputError(f"no bundled system named {name!r}")
    return parse_system(res.read_bytes(), **kw)


def _word_field(sys: CoxeterSystem, obj: dict, key: str) -> tuple[int, ...]:
    val = obj.get(key, "")
    if isinstance(val, list):
        if not all(isinstance(x, str) for x in val):
            raise ParseError(key, "array entries must be generator names")
    elif not isinstance(val, str):
        raise ParseError(key, "expected a string or an array of generator names")
    try:
        return sys.word(val)
    except InvalidInputError as e:
        raise ParseError(key, str(e)) from None


def path_from_dict(obj, sys: CoxeterSystem) -> EdgePath:
    if not isinstance(obj, dict):
        raise ParseError("file", "expected a JSON object")
    if "letters" not in obj:
        raise ParseError("letters", "missing")
    start = _word_field(sys, obj, "start")
    letters = _word_field(sys, obj, "letters")
    return EdgePath(sys.normal_form(start), letters)


def path_to_dict(p: EdgePath) -> dict:
    sys = p.system
    if all(len(g) == 1 for g in sys.generators):
        return {"start": sys.format_word(p.start.word), "letters": sys.format_word(p.letters)}
    return {
        "start": [sys.generators[i] for i in p.start.word],
        "letters": [sys.generators[i] for i in p.letters],
    }


def parse_path(data, sys: CoxeterSystem) -> EdgePath:
    return path_from_dict(_load_json(data), sys)


def serialize_path(p: EdgePath) -> str:
    return json.dumps(path_to_dict(p)) + "\n"


__all__ = [
    "ParseError",
    "bundled_system",
    "load_system",
    "parse_path",
    "parse_system",
    "path_from_dict",
    "path_to_dict",
    "serialize_path",
    "serialize_system",
    "system_from_dict",
    "system_to_dict",
]
