"""JSON file formats for racks, braided sets and groups, plus result dumps.

Formats (all indices 0-based):

    rack          {"size": k, "op": [[...], ...], "name": "optional"}
    braided set   {"size": k, "r": [[[a, b], ...], ...]}
    group         {"order": m, "mul": [[...], ...], "name": "optional"}

Orbit dumps are JSON lines ``{"index", "tuple", "access_perm"}``. Large
integers such as group orders are written as decimal strings.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Any

from . import braid as B
from .errors import StructureError
from .groups import FiniteGroupTable
from .rack import BraidedSet, Rack


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise StructureError(f"{source}: invalid JSON ({exc.msg})") from None


def _square(table, size, key: str) -> list:
    if not isinstance(table, list) or len(table) != size:
        raise StructureError(f"'{key}' must have {size} rows")
    for row in table:
        if not isinstance(row, list) or len(row) != size:
            raise StructureError(f"'{key}' must be a square {size}x{size} table")
    return table


def _size(data: dict, key: str, table_key: str) -> int:
    size = data.get(key)
    if size is None:
        size = len(data.get(table_key) or [])
    if not isinstance(size, int) or size <= 0:
        raise StructureError(f"'{key}' must be a positive integer")
    return size


def load_rack(source) -> Rack:
    data = _load(source)
    k = _size(data, "size", "op")
    op = _square(data.get("op"), k, "op")
    return Rack(op, name=data.get("name"))


def load_braided_set(source) -> BraidedSet:
    data = _load(source)
    k = _size(data, "size", "r")
    r = _square(data.get("r"), k, "r")
    for row in r:
        for cell in row:
            if not isinstance(cell, list) or len(cell) != 2:
                raise StructureError("each entry of 'r' must be a pair [a, b]")
    return BraidedSet(r, name=data.get("name"))


def load_group(source) -> FiniteGroupTable:
    data = _load(source)
    m = _size(data, "order", "mul")
    mul = _square(data.get("mul"), m, "mul")
    return FiniteGroupTable(mul, name=data.get("name"))


def rack_to_json(x: Rack) -> dict:
    out: dict[str, Any] = {"size": x.size, "op": [list(r) for r in x.rows]}
    if x.name:
        out["name"] = x.name
    return out


def group_to_json(g: FiniteGroupTable) -> dict:
    out: dict[str, Any] = {"order": g.order, "mul": [list(r) for r in g.rows]}
    if g.name:
        out["name"] = g.name
    return out


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_orbit_jsonl(o: B.OrbitGraph, fh: IO[str]) -> int:
    count = 0
    for m in range(len(o)):
        fh.write(dumps({"index": m, "tuple": list(o.tuple_at(m)),
                        "access_perm": list(o.access_perm(m))}) + "\n")
        count += 1
    return count


def orbit_summary(report: B.MonodromyReport) -> dict:
    c = report.classification
    return {
        "orbit_size": report.orbit_size,
        "colored_orbit_size": report.colored_orbit_size,
        "image_order": str(report.image_order),
        "respects_blocks": c.respects_blocks,
        "is_full_product": c.is_full_product,
        "contains_alt_product": c.contains_alt_product,
        "inside_even_part": c.inside_even_part,
    }
