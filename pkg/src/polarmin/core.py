"""Exact rational planar convex geometry kernel.

Every coordinate is a `fractions.Fraction` and every predicate is decided by
exact sign computations, so tangency, collinearity and equality of areas are
detected exactly rather than to within a tolerance.  Polygons are stored as
strictly convex counterclockwise vertex lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateInput, Empty, Unbounded

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat(value) -> Fraction:
    """Coerce ints, strings like "3/4", and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value.strip()):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rat_str(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(q)


def dec_str(q: Fraction, digits: int = 6) -> str:
    """Exact fixed-point decimal rendering, rounded toward zero."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = (q.numerator * 10**digits) // q.denominator
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


@dataclass(frozen=True)
class Vec2:
    """Point or vector of R^2 with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s) -> "Vec2":
        s = rat(s)
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def perp(self) -> "Vec2":
        """Counterclockwise quarter turn."""
        return Vec2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __repr__(self):
        return f"({self.x}, {self.y})"


def vec(x, y) -> Vec2:
    return Vec2(rat(x), rat(y))


ORIGIN = vec(0, 0)
E1 = vec(1, 0)
E2 = vec(0, 1)


def orient(o: Vec2, a: Vec2, b: Vec2) -> Fraction:
    """Signed double area of the triangle (o, a, b); > 0 iff left turn."""
    return (a - o).cross(b - o)


class VPolygon:
    """Strictly convex polygon, vertices counterclockwise, no three collinear.

    The vertex tuple is canonicalized (lexicographically smallest vertex
    first), so two polygons describing the same set compare equal.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Vec2], _trusted: bool = False):
        vs = tuple(vertices)
        if not _trusted:
            vs = _validated_ccw(vs)
        object.__setattr__(self, "vertices", _canonical_rotation(vs))

    def __eq__(self, other):
        return isinstance(other, VPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"VPolygon[{', '.join(map(repr, self.vertices))}]"

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


def _canonical_rotation(vs: tuple) -> tuple:
    k = min(range(len(vs)), key=lambda i: (vs[i].x, vs[i].y))
    return vs[k:] + vs[:k]


def _validated_ccw(vs: tuple) -> tuple:
    if len(vs) < 3:
        raise DegenerateInput("a polygon needs at least 3 vertices")
    if len(set(vs)) != len(vs):
        raise DegenerateInput("duplicate vertices")
    n = len(vs)
    for i in range(n):
        if orient(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) <= 0:
            raise DegenerateInput("vertices not in strictly convex CCW position")
    # Local convexity admits multiply-wound lists; require agreement with
    # the hull of the vertex set, which fixes both the set and the order.
    hull = convex_hull(vs).vertices
    if hull != _canonical_rotation(vs):
        raise DegenerateInput("vertex list is not a convex hull ordering")
    return vs


def convex_hull(points: Iterable[Vec2]) -> VPolygon:
    """Monotone-chain hull with exact orientation tests.

    Collinear middle points are dropped, so the result satisfies the strict
    VPolygon invariant; idempotent on an existing polygon's vertices.
    """
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 distinct points")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    return VPolygon(hull, _trusted=True)


def area(p: VPolygon) -> Fraction:
    """Exact area by the shoelace formula (positive: vertices are CCW)."""
    vs = p.vertices
    s = Fraction(0)
    for i in range(len(vs)):
        s += vs[i].cross(vs[(i + 1) % len(vs)])
    return s / 2


def centroid(p: VPolygon) -> Vec2:
    """Exact area-weighted centroid."""
    vs = p.vertices
    a = Fraction(0)
    cx = Fraction(0)
    cy = Fraction(0)
    for i in range(len(vs)):
        u, w = vs[i], vs[(i + 1) % len(vs)]
        c = u.cross(w)
        a += c
        cx += (u.x + w.x) * c
        cy += (u.y + w.y) * c
    return Vec2(cx / (3 * a), cy / (3 * a))


def contains(p: VPolygon, q: Vec2, mode: str = "closed") -> bool:
    """Exact membership test; mode "open" tests interior membership."""
    if mode not in ("closed", "open"):
        raise ValueError(f"mode must be 'closed' or 'open', got {mode!r}")
    vs = p.vertices
    for i in range(len(vs)):
        s = orient(vs[i], vs[(i + 1) % len(vs)], q)
        if s < 0 or (mode == "open" and s == 0):
            return False
    return True


def edge_halfplanes(p: VPolygon) -> list:
    """Outward edge constraints [(normal, offset)] with <normal, x> <= offset."""
    vs = p.vertices
    rows = []
    for i in range(len(vs)):
        d = vs[(i + 1) % len(vs)] - vs[i]
        n = Vec2(d.y, -d.x)
        rows.append((n, n.dot(vs[i])))
    return rows


def translate_poly(p: VPolygon, v: Vec2) -> VPolygon:
    return VPolygon(tuple(u + v for u in p.vertices), _trusted=True)


def scale_poly(p: VPolygon, r) -> VPolygon:
    r = rat(r)
    if r <= 0:
        raise ValueError("scale factor must be positive")
    return VPolygon(tuple(u * r for u in p.vertices), _trusted=True)


@dataclass(frozen=True)
class HPolytope:
    """H-representation {x : <normal_i, x> <= offset_i}, any dimension.

    Redundant rows are tolerated; they are eliminated when converting to
    vertex form.  Only the planar case is computational; higher dimensions
    serve as exact containers for family constructors.
    """

    rows: tuple  # tuple of (tuple[Fraction, ...], Fraction)
    dim: int

    @staticmethod
    def planar(rows: Iterable) -> "HPolytope":
        """Build from (Vec2 normal, offset) pairs."""
        packed = tuple(((rat(n.x), rat(n.y)), rat(c)) for n, c in rows)
        return HPolytope(packed, 2)

    def planar_rows(self) -> list:
        if self.dim != 2:
            raise ValueError("planar_rows requires dimension 2")
        return [(Vec2(rat(n[0]), rat(n[1])), rat(c)) for n, c in self.rows]


def _line_intersection(n1: Vec2, c1, n2: Vec2, c2):
    det = n1.cross(n2)
    if det == 0:
        return None
    x = (c1 * n2.y - c2 * n1.y) / det
    y = (n1.x * c2 - n2.x * c1) / det
    return Vec2(x, y)


def halfplane_intersect(h: HPolytope) -> VPolygon:
    """Vertex form of a bounded, full-dimensional planar halfplane intersection.

    Raises Unbounded when the recession cone {d : <n_i, d> <= 0 for all i} is
    nontrivial, and Empty when the intersection is empty or lower-dimensional.
    Every input row either supports an edge of the result or is redundant.
    """
    rows = [(n, c) for n, c in h.planar_rows() if not n.is_zero()]
    for n, c in h.planar_rows():
        if n.is_zero() and c < 0:
            raise Empty("contradictory trivial row")
    if not rows:
        raise Unbounded("no constraints")

    # A nontrivial recession cone, if any, contains a ray orthogonal to some
    # constraint normal; testing those candidate rays is exhaustive in 2D.
    for n, _ in rows:
        for d in (n.perp(), -n.perp()):
            if all(m.dot(d) <= 0 for m, _ in rows):
                raise Unbounded(f"recession direction {d}")

    points = set()
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            p = _line_intersection(rows[i][0], rows[i][1], rows[j][0], rows[j][1])
            if p is not None and all(n.dot(p) <= c for n, c in rows):
                points.add(p)
    if len(points) < 3:
        raise Empty("intersection is empty or lower-dimensional")
    try:
        return convex_hull(points)
    except DegenerateInput:
        raise Empty("intersection is lower-dimensional") from None


def clip_halfplane(p: VPolygon, a: Vec2, c) -> VPolygon | None:
    """Exact clip of a polygon by {x : <a, x> <= c}.

    Returns None when the clipped region is empty or lower-dimensional.
    """
    c = rat(c)
    vs = p.vertices
    out = []
    for i in range(len(vs)):
        u, w = vs[i], vs[(i + 1) % len(vs)]
        fu, fw = a.dot(u) - c, a.dot(w) - c
        if fu <= 0:
            out.append(u)
        if (fu < 0 < fw) or (fw < 0 < fu):
            t = fu / (fu - fw)
            out.append(u + t * (w - u))
    try:
        return convex_hull(out) if len(out) >= 3 else None
    except DegenerateInput:
        return None
