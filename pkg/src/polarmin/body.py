"""Convex-body functionals: support, gauge, polar duality, central symmetral.

A Body wraps a planar VPolygon (materialized lazily for planar family
instances) or stays symbolic in higher dimensions, where only closed-form
data is available.  Polar directions are memoized per body, so gauge values
inside enumeration loops never repeat hull work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import core
from .core import HPolytope, Vec2, VPolygon, rat
from .errors import OriginNotInterior, SingularTransform


class Body:
    """Convex body: a planar polygon, an H-polytope, or a family instance.

    `family` keeps provenance as (name, params dict) when the body was built
    by a family constructor.  All values are immutable after construction;
    the polar memo is populated at most once, so concurrent readers always
    observe a single consistent value.
    """

    __slots__ = ("dim", "family", "_poly", "_hrep", "_polar_dirs", "_polar", "_symmetral")

    def __init__(self, poly: VPolygon | None = None, hrep: HPolytope | None = None,
                 family=None, dim: int = 2):
        self._poly = poly
        self._hrep = hrep
        self.family = family
        self.dim = dim
        self._polar_dirs = None
        self._polar = None
        self._symmetral = None
        if poly is None and hrep is not None and hrep.dim == 2:
            self._poly = core.halfplane_intersect(hrep)

    @staticmethod
    def from_polygon(p: VPolygon) -> "Body":
        return Body(poly=p)

    @staticmethod
    def from_points(points) -> "Body":
        return Body(poly=core.convex_hull(points))

    @staticmethod
    def from_halfplanes(h: HPolytope) -> "Body":
        return Body(hrep=h, dim=h.dim)

    @property
    def polygon(self) -> VPolygon:
        if self._poly is None:
            raise ValueError(f"body of dimension {self.dim} has no planar polygon")
        return self._poly

    @property
    def is_planar(self) -> bool:
        return self._poly is not None

    def volume(self) -> Fraction:
        return core.area(self.polygon)

    def contains_origin(self, mode: str = "open") -> bool:
        return core.contains(self.polygon, core.ORIGIN, mode)

    def __eq__(self, other):
        return isinstance(other, Body) and self.is_planar and other.is_planar \
            and self.polygon == other.polygon

    def __hash__(self):
        return hash(self.polygon)

    def __repr__(self):
        if self._poly is not None:
            return f"Body({self._poly!r})"
        return f"Body(dim={self.dim}, family={self.family})"


def as_body(K) -> Body:
    if isinstance(K, Body):
        return K
    if isinstance(K, VPolygon):
        return Body.from_polygon(K)
    if isinstance(K, HPolytope):
        return Body.from_halfplanes(K)
    raise TypeError(f"cannot interpret {type(K).__name__} as a Body")


def support(K, u: Vec2) -> Fraction:
    """h_K(u): exact maximum of <u, x> over K (max over vertices)."""
    K = as_body(K)
    return max(u.dot(v) for v in K.polygon.vertices)


def _polar_dirs(K: Body) -> tuple:
    # Vertices of the polar body, one per edge of K, in edge order but
    # without hull work: the edge {<n,x> = c} of K dualizes to the point n/c.
    if K._polar_dirs is None:
        if not K.contains_origin("open"):
            raise OriginNotInterior("gauge/polar need the origin strictly inside")
        K._polar_dirs = tuple(n * (1 / c) for n, c in core.edge_halfplanes(K.polygon))
    return K._polar_dirs


def gauge(K, x: Vec2) -> Fraction:
    """Minkowski functional ||x||_K = min{t >= 0 : x in tK}.

    Equals the support function of the polar body; evaluated against the
    memoized polar vertex directions, which is exact and hull-free.
    """
    K = as_body(K)
    g = max(x.dot(w) for w in _polar_dirs(K))
    return g if g > 0 else Fraction(0)


def polar(K) -> Body:
    """K° = {y : <x, y> <= 1 for all x in K}, with the bipolar memoized.

    Each vertex v of K contributes the row <v, y> <= 1; the rows are then
    intersected exactly.  polar(polar(K)) returns a body equal to K.
    """
    K = as_body(K)
    if K._polar is None:
        if not K.contains_origin("open"):
            raise OriginNotInterior("polar needs the origin strictly inside")
        rows = [(v, Fraction(1)) for v in K.polygon.vertices]
        dual = Body(poly=core.halfplane_intersect(HPolytope.planar(rows)))
        dual._polar = K
        K._polar = dual
    return K._polar


def central_symmetral(K) -> Body:
    """cs(K) = (K - K)/2, as the hull of all pairwise half-differences."""
    K = as_body(K)
    if K._symmetral is None:
        vs = K.polygon.vertices
        pts = set()
        for a in vs:
            for b in vs:
                if a != b:
                    pts.add((a - b) * Fraction(1, 2))
        K._symmetral = Body(poly=core.convex_hull(pts))
    return K._symmetral


def is_symmetric(K) -> bool:
    """True iff K = -K exactly."""
    vs = as_body(K).polygon.vertex_set()
    return vs == frozenset(-v for v in vs)


def translate(K, v: Vec2) -> Body:
    return Body(poly=core.translate_poly(as_body(K).polygon, v))


def scale(K, r) -> Body:
    return Body(poly=core.scale_poly(as_body(K).polygon, r))


@dataclass(frozen=True)
class Transform2:
    """Invertible affine map x -> M x + translation on R^2.

    `unimodular` is true iff M is integral with determinant +-1; such maps
    preserve the integer lattice and hence every lattice-defined quantity.
    """

    m: tuple  # ((a, b), (c, d)) row-major
    translation: Vec2 = core.ORIGIN

    @staticmethod
    def linear(a, b, c, d, translation: Vec2 = core.ORIGIN) -> "Transform2":
        return Transform2(((rat(a), rat(b)), (rat(c), rat(d))), translation)

    @staticmethod
    def identity() -> "Transform2":
        return Transform2.linear(1, 0, 0, 1)

    @staticmethod
    def translation_by(v: Vec2) -> "Transform2":
        return Transform2.linear(1, 0, 0, 1, v)

    @property
    def det(self) -> Fraction:
        (a, b), (c, d) = self.m
        return a * d - b * c

    @property
    def unimodular(self) -> bool:
        entries = [e for row in self.m for e in row]
        return all(e.denominator == 1 for e in entries) and abs(self.det) == 1

    def apply_vec(self, v: Vec2) -> Vec2:
        (a, b), (c, d) = self.m
        return Vec2(a * v.x + b * v.y, c * v.x + d * v.y) + self.translation

    def transpose_linear(self, v: Vec2) -> Vec2:
        """M^T v (no translation); what polar quantities transform by."""
        (a, b), (c, d) = self.m
        return Vec2(a * v.x + c * v.y, b * v.x + d * v.y)


def apply_transform(T: Transform2, K) -> Body:
    """Image T(K); the area scales by |det T|."""
    if T.det == 0:
        raise SingularTransform("determinant is zero")
    K = as_body(K)
    return Body(poly=core.convex_hull(T.apply_vec(v) for v in K.polygon.vertices))


def gauge_cs_identity(K, x: Vec2):
    """Evaluate ||x|| in cs(K)° two ways; the two values are always equal.

    Returns (gauge(cs(K)°, x), (gauge(K°, x) + gauge(K°, -x)) / 2).
    """
    K = as_body(K)
    left = gauge(polar(central_symmetral(K)), x)
    right = (gauge(polar(K), x) + gauge(polar(K), -x)) / 2
    return left, right
