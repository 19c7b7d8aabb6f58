"""Discreteness of finitely generated subgroups of the plane.

A finitely generated subgroup of R^2 spanned by vectors over a number field
is discrete iff, after choosing one or two of the generators as an R-basis of
their span, every generator has rational coordinates in that basis.  When it
is, the rational coordinates give an explicit Z-basis by Hermite reduction of
a two-column integer matrix.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .numfield import FieldElement, Rational
from .planar import Vec, coords_in_basis, cross

__all__ = [
    "LatticeBasis",
    "DiscretenessResult",
    "is_discrete",
    "lattice_basis",
    "covolume",
    "reduced_basis",
    "lattice_coords",
    "is_commensurable",
    "line_commensurable_point",
    "count_discreteness_calls",
    "ext_gcd",
]


@dataclass(frozen=True)
class LatticeBasis:
    b1: Vec
    b2: Vec

    def __post_init__(self):
        if cross(self.b1, self.b2).is_zero():
            raise ValueError("lattice basis vectors are parallel")

    def coords(self, w: Vec) -> tuple:
        return coords_in_basis(w, self.b1, self.b2)

    def point(self, m, k) -> Vec:
        return self.b1 * m + self.b2 * k

    def generators(self) -> list:
        return [self.b1, self.b2]

    def contains(self, w: Vec) -> bool:
        return all(c.is_integer() for c in self.coords(w))

    def to_json(self) -> list:
        return [self.b1.to_json(), self.b2.to_json()]


@dataclass
class DiscretenessResult:
    discrete: bool
    rank: int
    basis: Optional[LatticeBasis] = None
    generator: Optional[Vec] = None  # rank-1 Z-generator
    frame: tuple = field(default=(), repr=False)
    coefficients: list = field(default_factory=list, repr=False)
    # first irrational coefficient when dense, as (numerator, denominator)
    witness_parts: Optional[tuple] = field(default=None, repr=False)

    @property
    def witness(self) -> Optional[FieldElement]:
        if self.witness_parts is None:
            return None
        num, den = self.witness_parts
        return num / den

    @property
    def verdict(self) -> str:
        return "discrete" if self.discrete else "dense"

    @property
    def is_lattice(self) -> bool:
        return self.discrete and self.rank == 2

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "rank": self.rank}
        if self.basis is not None:
            out["basis"] = self.basis.to_json()
        elif self.generator is not None:
            out["basis"] = [self.generator.to_json()]
        else:
            out["basis"] = []
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.discrete and self.frame:
            out["frame"] = [v.to_json() for v in self.frame]
            out["coefficients"] = [[str(c) for c in row] for row in self.coefficients]
        return out


_calls = contextvars.ContextVar("discreteness_calls", default=None)


@contextlib.contextmanager
def count_discreteness_calls():
    """Count :func:`is_discrete` invocations inside the block.

    >>> with count_discreteness_calls() as counter:
    ...     _ = is_discrete([])
    >>> counter[0]
    1
    """
    counter = [0]
    token = _calls.set(counter)
    try:
        yield counter
    finally:
        _calls.reset(token)


def _ratio(w: Vec, v: Vec):
    """Rational r with w = r*v, or None; v nonzero and w parallel to v."""
    if not v.x.is_zero():
        return w.x.rational_ratio(v.x)
    return w.y.rational_ratio(v.y)


def _rational_coords(w: Vec, v1: Vec, v2: Vec, det: FieldElement):
    """Coordinates of w in (v1, v2) as rationals, or the first irrational one as (num, den)."""
    num = cross(w, v2)
    a = num.rational_ratio(det)
    if a is None:
        return None, (num, det)
    num = cross(v1, w)
    b = num.rational_ratio(det)
    if b is None:
        return None, (num, det)
    return (a, b), None


def is_discrete(gens: Iterable[Vec]) -> DiscretenessResult:
    """Decide whether the Z-span of ``gens`` is discrete.

    Zero vectors are dropped.  The frame is the first nonzero generator and the
    first generator not parallel to it; the group is discrete iff every
    generator has rational coordinates in that frame.
    """
    counter = _calls.get()
    if counter is not None:
        counter[0] += 1
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return DiscretenessResult(True, 0)
    v1 = gens[0]
    v2 = det = None
    for g in gens[1:]:
        c = cross(v1, g)
        if not c.is_zero():
            v2, det = g, c
            break
    if v2 is None:
        ratios = []
        for g in gens:
            r = _ratio(g, v1)
            if r is None:
                parts = (g.x, v1.x) if not v1.x.is_zero() else (g.y, v1.y)
                return DiscretenessResult(False, 1, witness_parts=parts)
            ratios.append(r)
        num = math.gcd(*(r.numerator for r in ratios))
        den = math.lcm(*(r.denominator for r in ratios))
        return DiscretenessResult(
            True, 1, generator=v1 * Rational(num, den), frame=(v1,), coefficients=[[r] for r in ratios]
        )
    coeffs = []
    for g in gens:
        if g is v1:
            coeffs.append((Rational(1), Rational(0)))
            continue
        if g is v2:
            coeffs.append((Rational(0), Rational(1)))
            continue
        ab, bad = _rational_coords(g, v1, v2, det)
        if ab is None:
            return DiscretenessResult(False, 2, witness_parts=bad)
        coeffs.append(ab)
    return DiscretenessResult(
        True, 2, basis=_hermite_basis(coeffs, v1, v2), frame=(v1, v2), coefficients=coeffs
    )


def ext_gcd(a: int, b: int) -> tuple:
    """``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _hermite_rows(rows) -> tuple:
    """Upper-triangular Z-basis ``((a, b), (0, c))`` of the row lattice, a, c > 0, 0 <= b < c."""
    a = b = c = 0
    for x, y in rows:
        if x:
            g, s, t = ext_gcd(a, x)
            # unimodular: new first row and a row with zero first entry
            na, nb = g, s * b + t * y
            rest = (a // g) * y - (x // g) * b
            a, b = na, nb
            c = math.gcd(c, rest)
        else:
            c = math.gcd(c, y)
    if a == 0 or c == 0:
        raise ValueError("rows do not span a rank-2 lattice")
    return (a, b % c), (0, c)


def _hermite_basis(coeffs, v1: Vec, v2: Vec) -> LatticeBasis:
    D = math.lcm(*(q.denominator for row in coeffs for q in row))
    rows = [(int(a * D), int(b * D)) for a, b in coeffs]
    (a, b), (_, c) = _hermite_rows(rows + [(D, 0), (0, D)])
    return LatticeBasis(v1 * Rational(a, D) + v2 * Rational(b, D), v2 * Rational(c, D))


def lattice_basis(gens: Iterable[Vec]) -> LatticeBasis:
    """An explicit Z-basis of a discrete rank-2 group generated by ``gens``."""
    res = is_discrete(gens)
    if not res.is_lattice:
        raise ValueError(f"generators do not span a lattice ({res.verdict}, rank {res.rank})")
    return res.basis


def covolume(L: LatticeBasis) -> FieldElement:
    return abs(cross(L.b1, L.b2))


def _norm2(v: Vec) -> FieldElement:
    return v.x * v.x + v.y * v.y


def reduced_basis(L: LatticeBasis) -> LatticeBasis:
    """Lagrange-reduced basis of the same lattice: |b1| <= |b2| and |b1.b2| <= |b1|^2 / 2.

    Uses exact arithmetic throughout; the rounding step takes the floor of an
    exact field element.
    """
    b1, b2 = L.b1, L.b2
    if _norm2(b2) < _norm2(b1):
        b1, b2 = b2, b1
    while True:
        n1 = _norm2(b1)
        mu = (b1.x * b2.x + b1.y * b2.y) / n1
        r = (mu + Rational(1, 2)).floor()
        if r:
            b2 = b2 - b1 * r
        if not _norm2(b2) < n1:
            return LatticeBasis(b1, b2)
        b1, b2 = b2, b1


def lattice_coords(p: Vec, L: LatticeBasis):
    """Rational coordinates of p in L, or None if p is incommensurable with L."""
    det = cross(L.b1, L.b2)
    ab, _ = _rational_coords(p, L.b1, L.b2, det)
    return ab


def is_commensurable(p: Vec, L: LatticeBasis) -> bool:
    """True iff Z*p + L is discrete."""
    return lattice_coords(p, L) is not None


def line_commensurable_point(tau: Vec, e: Vec, L: LatticeBasis) -> Optional[Vec]:
    """A point of the line ``tau + R*e`` commensurable with L, or None.

    ``e`` must lie in L.  In L-coordinates, with e = (u, v), the line carries a
    rational point iff ``u*tau_y - v*tau_x`` is rational; that test avoids the
    vertical/non-vertical split of the slope-intercept form.
    """
    ec = lattice_coords(e, L)
    if ec is None or any(q.denominator != 1 for q in ec):
        raise ValueError("edge vector is not a lattice vector")
    u, v = int(ec[0]), int(ec[1])
    tx, ty = L.coords(tau)
    c = tx * (-v) + ty * u
    if not c.is_rational():
        return None
    c = c.to_rational()
    g, t, s = ext_gcd(u, -v)  # u*t - v*s == g
    k = c / g
    return L.point(k * s, k * t)
