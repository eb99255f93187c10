"""JSON file formats and canonical rendering."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact_geom import Cone, Fan, cone_from_generators
from .git_fan import WeightSystem
from .morphism import PullbackMap


class ParseError(ValueError):
    pass


def render_rational(x) -> int | str:
    """Integers stay JSON numbers; anything else becomes the string "p/q" (q > 0, reduced)."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals, e.g. "1,-1/2,0"."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ParseError(f"malformed vector: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def dumps(obj: Any, indent: int = 0) -> str:
    """Canonical JSON: sorted keys, two-space indent, lists of scalars on one line."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(json.dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def _load_json(source) -> Any:
    if isinstance(source, (dict, list)):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON: {exc}") from exc


def _int_list(v, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ParseError(f"{what} must be a list of integers")
    return v


def weight_system_from_json(source) -> WeightSystem:
    doc = _load_json(source)
    if not isinstance(doc, dict) or "rank" not in doc or "generators" not in doc:
        raise ParseError("weight system needs 'rank' and 'generators'")
    unknown = set(doc) - {"rank", "basis", "generators", "ample"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    rank = doc["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ParseError("'rank' must be an integer")
    basis = doc.get("basis", [])
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("'basis' must be a list of strings")
    gens = doc["generators"]
    if not isinstance(gens, list):
        raise ParseError("'generators' must be a list")
    names, classes = [], []
    for g in gens:
        if not isinstance(g, dict) or set(g) != {"name", "class"} or not isinstance(g["name"], str):
            raise ParseError("each generator is {'name': str, 'class': [int]}")
        names.append(g["name"])
        classes.append(_int_list(g["class"], f"class of {g['name']}"))
    ample = doc.get("ample")
    if ample is not None:
        ample = _int_list(ample, "'ample'")
    if any(len(c) != rank for c in classes) or (ample is not None and len(ample) != rank):
        raise ParseError("class lengths do not match 'rank'")
    return WeightSystem(tuple(names), tuple(map(tuple, classes)), tuple(basis),
                        tuple(ample) if ample is not None else None)


def weight_system_to_json(ws: WeightSystem) -> dict:
    doc = {
        "rank": ws.rank,
        "basis": list(ws.basis),
        "generators": [{"name": n, "class": list(c)} for n, c in zip(ws.names, ws.classes)],
    }
    if ws.ample is not None:
        doc["ample"] = list(ws.ample)
    return doc


def map_from_json(source) -> PullbackMap:
    doc = _load_json(source)
    if not isinstance(doc, dict) or set(doc) != {"source_rank", "matrix"}:
        raise ParseError("map file is {'source_rank': int, 'matrix': [[int]]}")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows:
        raise ParseError("'matrix' must be a nonempty list of rows")
    rows = [_int_list(r, "matrix row") for r in rows]
    if not isinstance(doc["source_rank"], int) or any(len(r) != doc["source_rank"] for r in rows):
        raise ParseError("matrix rows must have length 'source_rank'")
    return PullbackMap(doc["source_rank"], tuple(map(tuple, rows)))


def map_to_json(f: PullbackMap) -> dict:
    return {"source_rank": f.source_rank, "matrix": [list(r) for r in f.matrix]}


def fan_to_json(fan: Fan) -> dict:
    rays = fan.rays
    index = {r: i for i, r in enumerate(rays)}
    return {
        "rays": [list(r) for r in rays],
        "cones": [
            {"rays": [index[r] for r in c.rays], "dim": c.dim, "kind": fan.kind(i)}
            for i, c in enumerate(fan.cones)
        ],
    }


def fan_from_json(source, ambient_rank: int | None = None) -> Fan:
    doc = _load_json(source)
    try:
        rays = [tuple(_int_list(r, "ray")) for r in doc["rays"]]
        rank = ambient_rank if ambient_rank is not None else len(rays[0])
        cones = [cone_from_generators([rays[i] for i in c["rays"]], rank) for c in doc["cones"]]
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"malformed fan document: {exc}") from exc
    return Fan.from_cones(rank, cones)


def cone_to_json(c: Cone) -> list:
    return [list(r) for r in c.rays]


def vector_to_json(v) -> list:
    return [render_rational(x) for x in v]
