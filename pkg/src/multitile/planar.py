"""Planar vectors over a number field, symmetric convex polygons and their edge pairs.

Vertex convention: ``v_0`` is the first vertex, edge ``j`` (1-based) runs from
``v_{j-1}`` to ``v_j`` and indices wrap modulo ``2n``.  For a centrally
symmetric 2n-gon the edge ``j + n`` is the reversed copy of edge ``j``; the
translation vector ``tau_j`` carries edge ``j`` onto it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .numfield import FieldElement, FieldError, FieldSpec, Rational

__all__ = [
    "Vec",
    "Polygon",
    "EdgePairing",
    "PolygonError",
    "NotSymmetric",
    "NotConvex",
    "DegenerateEdge",
    "OddVertexCount",
    "ParallelTaus",
    "cross",
    "coords_in_basis",
    "validate_polygon",
    "edge_pairs",
    "area",
]


class Vec(NamedTuple):
    x: FieldElement
    y: FieldElement

    @property
    def field(self) -> FieldSpec:
        return self.x.field

    def __add__(self, other):
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Vec(-self.x, -self.y)

    def __mul__(self, k):
        return Vec(self.x * k, self.y * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def to_json(self) -> list:
        return [self.x.to_json(), self.y.to_json()]

    @classmethod
    def from_json(cls, spec: FieldSpec, obj) -> "Vec":
        if not isinstance(obj, list) or len(obj) != 2:
            raise FieldError(f"vector: expected [x, y], got {obj!r}")
        return cls(FieldElement.from_json(spec, obj[0]), FieldElement.from_json(spec, obj[1]))

    @classmethod
    def of(cls, spec: FieldSpec, x, y) -> "Vec":
        """Build from ints, rationals or FieldElements."""
        return cls(_lift(spec, x), _lift(spec, y))

    def __repr__(self):
        return f"Vec({self.x}, {self.y})"


def _lift(spec, v) -> FieldElement:
    if isinstance(v, FieldElement):
        return v
    return spec.element((Rational(v),))


def cross(u: Vec, v: Vec) -> FieldElement:
    """``u.x*v.y - u.y*v.x``; zero exactly when u and v are parallel."""
    return u.x * v.y - u.y * v.x


def coords_in_basis(w: Vec, b1: Vec, b2: Vec) -> tuple:
    """Solve ``w = alpha*b1 + beta*b2`` exactly (Cramer's rule)."""
    det = cross(b1, b2)
    if det.is_zero():
        raise ValueError("singular basis: b1 and b2 are parallel")
    inv = det.inverse()
    return cross(w, b2) * inv, cross(b1, w) * inv


class PolygonError(ValueError):
    """Base for polygon validation failures; ``index`` is the 1-based offender."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index

    @property
    def kind(self) -> str:
        return type(self).__name__


class NotSymmetric(PolygonError):
    pass


class NotConvex(PolygonError):
    pass


class DegenerateEdge(PolygonError):
    pass


class OddVertexCount(PolygonError):
    pass


class ParallelTaus(PolygonError):
    pass


@dataclass(frozen=True)
class Polygon:
    """A validated, counterclockwise, strictly convex, centrally symmetric polygon.

    Build it with :func:`validate_polygon`; ``reversed_input`` records whether the
    given vertex order was clockwise.
    """

    vertices: tuple
    reversed_input: bool = False

    @property
    def field(self) -> FieldSpec:
        return self.vertices[0].field

    @property
    def n(self) -> int:
        return len(self.vertices) // 2

    def edges(self) -> list:
        vs = self.vertices
        return [vs[i] - vs[i - 1] for i in range(1, len(vs))] + [vs[0] - vs[-1]]

    def scaled(self, c) -> "Polygon":
        return Polygon(tuple(v * c for v in self.vertices), self.reversed_input)

    def translated(self, t: Vec) -> "Polygon":
        return Polygon(tuple(v + t for v in self.vertices), self.reversed_input)

    def to_json(self) -> dict:
        return {"vertices": [v.to_json() for v in self.vertices]}


@dataclass(frozen=True)
class EdgePairing:
    """Edge vectors ``e[0..n-1]`` (e_1..e_n) and translations ``tau[0..n-1]``."""

    e: tuple
    tau: tuple
    vertices: tuple

    @property
    def n(self) -> int:
        return len(self.e)


def _upper(v: Vec) -> bool:
    s = v.y.sign()
    return s > 0 or (s == 0 and v.x.sign() > 0)


def validate_polygon(vertices: Sequence[Vec]) -> Polygon:
    """Check and normalize a vertex list into a :class:`Polygon`.

    Clockwise input is reversed (keeping ``v_0`` first) instead of rejected.
    Raises a :class:`PolygonError` subclass naming the first offending index.
    """
    vs = list(vertices)
    m = len(vs)
    if m % 2:
        raise OddVertexCount(f"OddVertexCount: {m} vertices", m)
    if m < 4:
        raise DegenerateEdge(f"DegenerateEdge: need at least 4 vertices, got {m}", m)
    fields = {v.field for v in vs}
    if len(fields) != 1:
        raise FieldError("vertices belong to different fields")
    for i in range(m):
        if (vs[i] - vs[i - 1]).is_zero():
            idx = i if i else m
            raise DegenerateEdge(f"DegenerateEdge: edge {idx} has zero length", idx)

    twice_area = sum((cross(vs[i - 1], vs[i]) for i in range(m)), vs[0].field.zero())
    reversed_input = twice_area.sign() < 0
    if reversed_input:
        vs = [vs[0]] + vs[:0:-1]

    poly = Polygon(tuple(vs), reversed_input)
    edges = poly.edges()
    n = m // 2
    for i in range(n):
        if edges[i + n] != -edges[i]:
            raise NotSymmetric(
                f"NotSymmetric: edge {i + n + 1} is not the reverse of edge {i + 1}", i + 1
            )
    for i in range(m):
        turn = cross(edges[i - 1], edges[i]).sign()
        if turn == 0:
            idx = i if i else m
            raise DegenerateEdge(f"DegenerateEdge: collinear edges at vertex {idx}", idx)
        if turn < 0:
            idx = i if i else m
            raise NotConvex(f"NotConvex: reflex turn at vertex {idx}", idx)
    # all left turns; the boundary must also wind exactly once
    ups = [_upper(e) for e in edges]
    winds = sum(1 for i in range(m) if ups[i - 1] and not ups[i])
    if winds != 1:
        raise NotConvex(f"NotConvex: boundary winds {winds} times", 1)
    return poly


def edge_pairs(poly: Polygon) -> EdgePairing:
    """Edge vectors e_j and translations ``tau_j = sum_{i>j} e_i - sum_{i<j} e_i``."""
    n = poly.n
    vs = poly.vertices
    edges = poly.edges()
    e = edges[:n]
    tau = [vs[j + n - 1] - vs[j] for j in range(1, n + 1)]

    zero = Vec(poly.field.zero(), poly.field.zero())
    for j in range(n):
        expect = zero
        for i in range(n):
            if i > j:
                expect = expect + e[i]
            elif i < j:
                expect = expect - e[i]
        assert tau[j] == expect, f"translation identity broken at pair {j + 1}"
    for i in range(n):
        for k in range(i):
            assert not cross(e[i], e[k]).is_zero(), "parallel edge vectors in a convex polygon"
            if cross(tau[i], tau[k]).is_zero():
                raise ParallelTaus(
                    f"ParallelTaus: translation vectors {k + 1} and {i + 1} are parallel", i + 1
                )
    return EdgePairing(tuple(e), tuple(tau), vs)


def area(poly: Polygon) -> FieldElement:
    """Exact shoelace area."""
    vs = poly.vertices
    twice = sum((cross(vs[i - 1], vs[i]) for i in range(len(vs))), poly.field.zero())
    return twice / 2


def polygon_from_json(spec: FieldSpec, obj) -> Polygon:
    if not isinstance(obj, list):
        raise FieldError("vertices: expected a list of [x, y] pairs")
    return validate_polygon([Vec.from_json(spec, v) for v in obj])
