"""JSON space and mapping files.

Space file::

    {"universe": ["a", "b", "c", "d"], "covering": [["a", "b"], ["a", "c"], ["b", "d"]]}

Mapping file::

    {"map": {"x1": "y1", "x2": "y2"}}

Structural problems raise :class:`ParseError`; well-formed files with bad
content (unknown labels, members that fail to cover) raise the matching
semantic error.
"""

from __future__ import annotations

import json
from pathlib import Path

from covrough.core import ApproxSpace, Covering, Universe, make_covering
from covrough.errors import ParseError
from covrough.morphisms import Mapping


def _read_json(source):
    if isinstance(source, (dict, list)):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON ({exc})") from None


def _string_list(value, what):
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{what} must be a list of strings")
    return value


def space_from_dict(data) -> ApproxSpace:
    if not isinstance(data, dict) or "universe" not in data or "covering" not in data:
        raise ParseError('a space needs "universe" and "covering" keys')
    universe = Universe(tuple(_string_list(data["universe"], "universe")))
    families = data["covering"]
    if not isinstance(families, list):
        raise ParseError("covering must be a list of label lists")
    families = [_string_list(f, "each covering member") for f in families]
    return ApproxSpace.of(make_covering(universe, families))


def load_space(source) -> ApproxSpace:
    return space_from_dict(_read_json(source))


def covering_to_dict(covering: Covering) -> dict:
    return {"universe": list(covering.universe.names), "covering": covering.as_lists()}


def space_to_dict(space: ApproxSpace) -> dict:
    return covering_to_dict(space.covering)


def dumps(obj) -> str:
    """Compact single-line JSON with a stable key order."""
    return json.dumps(obj, separators=(", ", ": "))


def mapping_from_dict(data, source: Universe, target: Universe) -> Mapping:
    if not isinstance(data, dict) or not isinstance(data.get("map"), dict):
        raise ParseError('a mapping file needs a "map" object')
    pairs = data["map"]
    if not all(isinstance(v, str) for v in pairs.values()):
        raise ParseError("mapping values must be labels")
    return Mapping.from_labels(source, target, pairs)


def load_mapping(source, src: Universe, dst: Universe) -> Mapping:
    return mapping_from_dict(_read_json(source), src, dst)


def mapping_to_dict(f: Mapping) -> dict:
    return {"map": f.as_dict()}
