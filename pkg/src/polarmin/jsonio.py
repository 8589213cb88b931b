"""JSON wire formats.

Rationals are serialized as strings "p/q" (or "p" when q = 1) so every value
round-trips bit exactly; lattice vectors are plain JSON integers.
"""

from __future__ import annotations

from .body import Body
from .core import HPolytope, rat, rat_str, vec
from .families import FamilySpec, make


def body_to_json(K: Body) -> dict:
    """Canonical Body JSON: family provenance wins, then vertex form, then
    H-form."""
    if K.family is not None:
        name, params = K.family
        return {
            "type": "family",
            "name": name,
            "params": {k: rat_str(v) for k, v in sorted(params.items())},
            "dim": K.dim,
        }
    if K.is_planar:
        return {
            "type": "vpoly",
            "vertices": [[rat_str(v.x), rat_str(v.y)] for v in K.polygon.vertices],
        }
    h = K._hrep
    return {
        "type": "hpoly",
        "dim": h.dim,
        "rows": [{"normal": [rat_str(c) for c in n], "offset": rat_str(c0)}
                 for n, c0 in h.rows],
    }


def vertices_json(K: Body) -> dict:
    """Vertex-form Body JSON regardless of provenance (planar only)."""
    return {
        "type": "vpoly",
        "vertices": [[rat_str(v.x), rat_str(v.y)] for v in K.polygon.vertices],
    }


def body_from_json(doc: dict) -> Body:
    kind = doc.get("type")
    if kind == "vpoly":
        from .core import convex_hull
        from .errors import DegenerateInput
        pts = [vec(rat(x), rat(y)) for x, y in doc["vertices"]]
        # Accept any ordering of a strictly convex vertex list, but reject
        # duplicate, collinear and interior points (VPolygon invariant).
        hull = convex_hull(pts)
        if hull.vertex_set() != frozenset(pts):
            raise DegenerateInput("vertex list contains non-extreme points")
        return Body(poly=hull)
    if kind == "hpoly":
        dim = int(doc["dim"])
        rows = tuple((tuple(rat(c) for c in row["normal"]), rat(row["offset"]))
                     for row in doc["rows"])
        return Body(hrep=HPolytope(rows, dim), dim=dim)
    if kind == "family":
        spec = FamilySpec(doc["name"], dict(doc.get("params", {})),
                          int(doc.get("dim", 2)))
        return make(spec)
    raise ValueError(f"unknown body type {kind!r}")
