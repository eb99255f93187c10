"""Planar cross-sections of rank-3 fans, as exact polygons and as SVG."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact_geom import Cone, Fan, restrict_cone
from .git_fan import WeightSystem, effective_cone, git_fan
from .io import parse_vector, render_rational
from .linalg import as_fractions, primitive, solve
from .morphism import PullbackMap, restrict_fan

# triangle the three rays of a simplicial effective cone are sent to
CORNERS = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1)))


class SliceError(ValueError):
    pass


class Chart:
    """Affine chart of the plane where the barycentric coordinates against Eff's rays sum to 1."""

    def __init__(self, eff: Cone):
        if eff.ambient_rank != 3 or eff.dim != 3:
            raise SliceError("slices need a full-dimensional rank-3 effective cone")
        if len(eff.rays) != 3:
            raise SliceError("slices need a simplicial effective cone (three extremal rays)")
        self.rays = eff.rays

    def xy(self, v: Sequence) -> tuple[Fraction, Fraction]:
        bary = solve(self.rays, as_fractions(v))
        total = sum(bary)
        if total <= 0:
            raise SliceError(f"{list(v)} does not meet the slicing plane")
        bary = [b / total for b in bary]
        return (
            sum(b * c[0] for b, c in zip(bary, CORNERS)),
            sum(b * c[1] for b, c in zip(bary, CORNERS)),
        )


def _ray_labels(ws: WeightSystem, ray) -> list[str]:
    return [n for n, c in zip(ws.names, ws.classes) if primitive(c) == tuple(ray)]


def _ordered(points):
    cx = sum(float(p[0]) for p in points) / len(points)
    cy = sum(float(p[1]) for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def _point(chart: Chart, ws: WeightSystem, ray) -> dict:
    x, y = chart.xy(ray)
    return {"ray": list(ray), "xy": [render_rational(x), render_rational(y)], "generators": _ray_labels(ws, ray)}


def parse_subspace(text: str) -> list[tuple[Fraction, ...]]:
    return [parse_vector(part) for part in text.split(":")]


def slice_document(ws: WeightSystem, subspace: Sequence[Sequence] | None = None) -> dict:
    if ws.rank != 3:
        raise SliceError(f"slice needs a rank-3 weight system, got rank {ws.rank}")
    eff = effective_cone(ws)
    chart = Chart(eff)
    fan: Fan = git_fan(ws)
    polygons = []
    for c in fan.maximal_cones:
        pts = {tuple(r): chart.xy(r) for r in c.rays}
        order = _ordered(list(pts.values()))
        inv = {v: k for k, v in pts.items()}
        polygons.append({
            "cone": [list(r) for r in c.rays],
            "kind": fan.kind_of(c),
            "vertices": [_point(chart, ws, inv[p]) for p in order],
        })
    doc = {
        "corners": [_point(chart, ws, r) for r in eff.rays],
        "polygons": polygons,
    }
    if subspace:
        basis = [primitive(b) for b in subspace]
        if any(len(b) != 3 for b in basis):
            raise SliceError("subspace vectors must have length 3")
        restricted = restrict_cone(eff, basis)
        lift = lambda y: primitive([sum(yi * b[j] for yi, b in zip(y, basis)) for j in range(3)])  # noqa: E731
        ends = [lift(r) for r in restricted.rays]
        f = PullbackMap(len(basis), tuple(tuple(b[j] for b in basis) for j in range(3)))
        marks = sorted({lift(r) for r in restrict_fan(fan, f).rays})
        doc["overlay"] = {
            "basis": [[render_rational(x) for x in b] for b in basis],
            "segment": [_point(chart, ws, e) for e in ends],
            "marks": [_point(chart, ws, m) for m in marks],
        }
    return doc


def to_svg(doc: dict, size: int = 480) -> str:
    margin = 40

    def px(xy):
        x, y = (float(Fraction(str(v))) for v in xy)
        return margin + x * (size - 2 * margin), size - margin - y * (size - 2 * margin)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">', '<rect width="100%" height="100%" fill="white"/>']
    for poly in doc["polygons"]:
        pts = " ".join("%.2f,%.2f" % px(v["xy"]) for v in poly["vertices"])
        out.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>')
    labelled = {}
    for poly in doc["polygons"]:
        for v in poly["vertices"]:
            labelled[tuple(v["ray"])] = v
    for v in labelled.values():
        x, y = px(v["xy"])
        text = ",".join(v["generators"]) or str(v["ray"])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        out.append(f'<text x="{x + 5:.2f}" y="{y - 5:.2f}" font-size="12">{text}</text>')
    overlay = doc.get("overlay")
    if overlay and len(overlay["segment"]) == 2:
        (x1, y1), (x2, y2) = (px(p["xy"]) for p in overlay["segment"])
        for width, colour in ((7, "black"), (3, "white")):
            out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                       f'stroke="{colour}" stroke-width="{width}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

