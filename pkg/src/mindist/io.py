"""Point files.

Format (version 1)::

    {
      "version": 1,
      "n": 2,
      "description": "optional free text",
      "points": [
        ["0", "0", "1"],
        ["1", "-3/2", "0"]
      ]
    }

Coordinates are strings holding an integer or ``p/q``.  Floats are
rejected; so are zero vectors and projectively repeated points.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError, PointFileError
from .field import QQ
from .pointset import ProjectivePointSet, normalize, parse_coordinate

POINT_FILE_VERSION = 1
_KEYS = {"version", "n", "points", "description"}


def _locate(text: str, needle_index: int, depth_key="points"):
    # line of the needle_index-th point row, for error messages
    start = text.find(f'"{depth_key}"')
    if start < 0:
        return None
    pos = text.find("[", start)
    count = -1
    depth = 0
    for k in range(pos, len(text)):
        ch = text[k]
        if ch == "[":
            depth += 1
            if depth == 2:
                count += 1
                if count == needle_index:
                    return text.count("\n", 0, k) + 1, k - text.rfind("\n", 0, k)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return None


def parse_point_text(text: str, field=QQ) -> ProjectivePointSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointFileError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise PointFileError("top level must be an object", 1, 1)
    extra = set(doc) - _KEYS
    if extra:
        raise PointFileError(f"unknown keys: {', '.join(sorted(extra))}")
    if doc.get("version") != POINT_FILE_VERSION:
        raise PointFileError(f"unsupported or missing version {doc.get('version')!r}; expected {POINT_FILE_VERSION}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PointFileError("'n' must be a positive integer")
    rows = doc.get("points")
    if not isinstance(rows, list) or not rows:
        raise PointFileError("'points' must be a non-empty list")
    raw = []
    for idx, row in enumerate(rows):
        where = _locate(text, idx) or (None, None)
        if not isinstance(row, list):
            raise PointFileError(f"point {idx} is not a list", *where)
        if len(row) != n + 1:
            raise PointFileError(f"point {idx} has {len(row)} coordinates, expected {n + 1}", *where)
        vec = []
        for c in row:
            if not isinstance(c, str):
                raise PointFileError(f"point {idx}: coordinate {c!r} must be a string", *where)
            try:
                vec.append(parse_coordinate(c, field))
            except InputError as exc:
                raise PointFileError(f"point {idx}: {exc}", *where) from None
        raw.append(vec)
    return normalize(raw, n, field)


def read_points(path, field=QQ) -> ProjectivePointSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_point_text(text, field)


def dump_points(points: ProjectivePointSet, description: str | None = None) -> str:
    """Serialize; one point per line, keys in a fixed order."""
    lines = ["{", f'  "version": {POINT_FILE_VERSION},', f'  "n": {points.n},']
    if description:
        lines.append(f'  "description": {json.dumps(description)},')
    lines.append('  "points": [')
    rows = points.as_strings()
    for k, row in enumerate(rows):
        sep = "," if k + 1 < len(rows) else ""
        lines.append("    " + json.dumps(row) + sep)
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_points(path, points: ProjectivePointSet, description: str | None = None) -> None:
    Path(path).write_text(dump_points(points, description), encoding="utf-8")
