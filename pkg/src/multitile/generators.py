"""Seeded random instances: symmetric convex polygons and selector inputs.

Polygons are built by sorting n edge vectors from the open upper half-plane
by angle and appending their negatives, which makes them valid by
construction.
"""

from __future__ import annotations

import random
from functools import cmp_to_key
from itertools import combinations

from .numfield import QQ, FieldSpec, Rational
from .planar import ParallelTaus, Polygon, Vec, cross, edge_pairs, validate_polygon
from .selector import SelectorInstance

__all__ = [
    "SQRT2",
    "random_rational",
    "random_element",
    "random_polygon",
    "polygon_from_edges",
    "random_selector_instance",
    "regular_octagon",
]

SQRT2 = FieldSpec.quadratic(2)


def random_rational(rng: random.Random, bound: int = 5, den: int = 3) -> Rational:
    return Rational(rng.randint(-bound, bound), rng.randint(1, den))


def random_element(rng: random.Random, spec: FieldSpec, irrational: bool = True, bound: int = 5):
    coords = [random_rational(rng, bound)]
    if irrational:
        coords += [random_rational(rng, bound) for _ in range(spec.degree - 1)]
    return spec.element(coords)


def _by_angle(u: Vec, v: Vec) -> int:
    # every vector is in the upper half-plane, so cross decides the order
    return -cross(u, v).sign()


def _upper_half(v: Vec) -> Vec:
    s = v.y.sign()
    if s < 0 or (s == 0 and v.x.sign() < 0):
        return -v
    return v


def polygon_from_edges(edges, origin=None) -> Polygon:
    """Symmetric polygon whose first n edges are ``edges`` reordered by angle."""
    edges = sorted((_upper_half(e) for e in edges), key=cmp_to_key(_by_angle))
    spec = edges[0].field
    start = origin or Vec(spec.zero(), spec.zero())
    vs = [start]
    for e in edges + [-e for e in edges]:
        vs.append(vs[-1] + e)
    return validate_polygon(vs[:-1])


def _pairwise_independent(vecs) -> bool:
    return all(not cross(u, v).is_zero() for u, v in combinations(vecs, 2))


def random_polygon(rng: random.Random, n: int, spec: FieldSpec = QQ, p_irrational: float = 0.5,
                   bound: int = 5) -> Polygon:
    """A random symmetric convex 2n-gon with pairwise non-parallel translation vectors.

    Each edge coordinate is irrational (when ``spec`` has degree > 1) with
    probability ``p_irrational``.
    """
    while True:
        edges = []
        while len(edges) < n:
            v = Vec(*(random_element(rng, spec, rng.random() < p_irrational, bound) for _ in range(2)))
            if v.is_zero():
                continue
            v = _upper_half(v)
            if _pairwise_independent(edges + [v]):
                edges.append(v)
        poly = polygon_from_edges(edges)
        try:
            edge_pairs(poly)
        except ParallelTaus:
            continue
        return poly


def random_selector_instance(rng: random.Random, n: int, spec: FieldSpec = SQRT2,
                             p_irrational: float = 0.3) -> SelectorInstance:
    """Random e's and tau's over Q + Q*a, with a random share of rational entries.

    Irrational entries reuse a small pool of irrational parts so that some
    groups are discrete without being entirely rational.
    """
    pool = [spec.element([0] + [random_rational(rng, 3) for _ in range(spec.degree - 1)]) for _ in range(2)]

    def entry():
        x = spec.element((random_rational(rng, 4),))
        if rng.random() < p_irrational:
            x = x + rng.choice(pool) * rng.randint(-2, 2)
        return x

    def family():
        while True:
            vecs = [Vec(entry(), entry()) for _ in range(n)]
            if all(not v.is_zero() for v in vecs) and _pairwise_independent(vecs):
                return vecs

    return SelectorInstance(family(), family())


def regular_octagon() -> Polygon:
    """Regular octagon over Q(sqrt 2): vertices (+-1, +-(1+sqrt2)) and (+-(1+sqrt2), +-1)."""
    s = SQRT2(1, 1)
    one = SQRT2(1)
    pts = [(s, -one), (s, one), (one, s), (-one, s), (-s, one), (-s, -one), (-one, -s), (one, -s)]
    return validate_polygon([Vec(x, y) for x, y in pts])
