"""Independent checks: exhaustive subset search and exact covering-multiplicity sampling."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .decider import Verdict, WitnessError, build_witness, level
from .numfield import Rational
from .planar import Polygon, Vec, cross, edge_pairs
from .selector import mixed_generators
from .subgroup import LatticeBasis, is_discrete, line_commensurable_point, reduced_basis

__all__ = [
    "BOUNDARY",
    "MultiplicityReport",
    "brute_force_select",
    "brute_force_decide",
    "multiplicity_at",
    "sample_verify",
]

MAX_BRUTE_FORCE_N = 12
SAMPLE_DENOMINATOR = 2 ** 32


class _Boundary:
    def __repr__(self):
        return "BOUNDARY"


BOUNDARY = _Boundary()


def _subsets(n):
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def brute_force_select(inst) -> Optional[tuple]:
    """First J (by size, then lexicographic) whose mixed generators span a discrete group."""
    for J in _subsets(inst.n):
        if is_discrete(mixed_generators(inst, J)).discrete:
            return J
    return None


def brute_force_decide(P: Polygon) -> Verdict:
    """Try every subset J of pair indices; exponential, so only for n <= 12."""
    pairing = edge_pairs(P)
    n = pairing.n
    if n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force refused: n = {n} > {MAX_BRUTE_FORCE_N}")
    rejections = []
    for J in _subsets(n):
        res = is_discrete(mixed_generators(pairing, J))
        if not res.is_lattice:
            rejections.append({"J": list(J), "reason": f"{res.verdict} rank {res.rank}"})
            continue
        L = res.basis
        if any(
            line_commensurable_point(pairing.tau[j - 1], pairing.e[j - 1], L) is None
            for j in range(1, n + 1) if j not in J
        ):
            rejections.append({"J": list(J), "reason": "line without commensurable point"})
            continue
        L_star, conds = build_witness(pairing, L, J)
        return Verdict(True, None, J, L_star, level(P, L_star), conds, rejections, base_lattice=L)
    return Verdict(False, rejections=rejections)


def _floor(x) -> int:
    return x.floor() if hasattr(x, "floor") else int(math.floor(x))


def _ceil(x) -> int:
    return x.ceil() if hasattr(x, "ceil") else int(math.ceil(x))


class _RowCounter:
    """Counts translates of P covering a point, working in reduced lattice coordinates.

    In coordinates of a positively oriented basis the lattice is Z^2 and a
    translate ``P + (m, k)`` contains the point Q iff, for every edge E_i
    starting at V_i, ``cross(E_i, Q - V_i) + m*E_i.y - k*E_i.x > 0``.  For each
    integer m the admissible k form an open interval, so a row costs
    O(#edges) operations.  A reduced basis keeps the number of rows near the
    square root of the multiplicity.  All-rational data runs on bare rationals.
    """

    def __init__(self, P: Polygon, L: LatticeBasis):
        R = reduced_basis(L)
        if cross(R.b1, R.b2).sign() < 0:
            R = LatticeBasis(R.b2, R.b1)
        self.basis = R
        V = [R.coords(v) for v in P.vertices]
        self.rational = all(c.is_rational() for xy in V for c in xy)
        if self.rational:
            V = [(x.to_rational(), y.to_rational()) for x, y in V]
        self.V = V
        self.E = [(V[(i + 1) % len(V)][0] - V[i][0], V[(i + 1) % len(V)][1] - V[i][1]) for i in range(len(V))]
        # per edge: None for rows parallel to it, else (1/E.x, E.y/E.x, E.x > 0)
        self.slopes = []
        for ex, ey in self.E:
            if ex == 0:
                self.slopes.append(None)
            else:
                inv = 1 / ex
                self.slopes.append((inv, ey * inv, ex > 0))

    def count(self, q: Vec):
        qx, qy = self.basis.coords(q)
        if self.rational and qx.is_rational() and qy.is_rational():
            qx, qy = qx.to_rational(), qy.to_rational()
        elif self.rational:
            # mixed data: lift the polygon side instead
            spec = q.field
            return self._count(qx, qy, [(spec(x), spec(y)) for x, y in self.V],
                               [(spec(x), spec(y)) for x, y in self.E],
                               [None if s is None else (spec(s[0]), spec(s[1]), s[2]) for s in self.slopes])
        return self._count(qx, qy, self.V, self.E, self.slopes)

    @staticmethod
    def _count(qx, qy, V, E, slopes):
        m_lo = min(_floor(qx - vx) for vx, _ in V)
        m_hi = max(_ceil(qx - vx) for vx, _ in V)
        # c_i = cross(E_i, Q - V_i); the bound for row m is (c_i + m*E_i.y) / E_i.x
        cs = [ex * (qy - vy) - ey * (qx - vx) for (ex, ey), (vx, vy) in zip(E, V)]
        lowers, uppers, flat = [], [], []
        for c, (ex, ey), sl in zip(cs, E, slopes):
            if sl is None:
                flat.append((c, ey))
            else:
                inv, r, upper = sl
                (uppers if upper else lowers).append((c * inv, r))
        count = 0
        for m in range(m_lo, m_hi + 1):
            touching = False
            empty = False
            for c, ey in flat:
                a = c + ey * m
                if a < 0:
                    empty = True
                    break
                touching = touching or a == 0
            if empty:
                continue
            lo = max(c + r * m for c, r in lowers)
            hi = min(c + r * m for c, r in uppers)
            if lo > hi:
                continue
            k_lo, k_hi = _ceil(lo), _floor(hi)
            if k_lo > k_hi:
                continue
            if touching or lo == k_lo or hi == k_hi:
                return BOUNDARY
            count += k_hi - k_lo + 1
        return count


def multiplicity_at(P: Polygon, L: LatticeBasis, q: Vec):
    """Number of lattice translates of P whose interior contains q, or BOUNDARY."""
    return _RowCounter(P, L).count(q)


@dataclass
class MultiplicityReport:
    samples: int
    level: int
    seed: int
    multiplicities: list = field(default_factory=list)
    boundary_hits: int = 0

    @property
    def passed(self) -> bool:
        return len(self.multiplicities) == self.samples and all(m == self.level for m in self.multiplicities)

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "level": self.level,
            "seed": self.seed,
            "pass": self.passed,
            "boundary_hits": self.boundary_hits,
            "multiplicities": self.multiplicities,
        }

    @classmethod
    def from_json(cls, obj) -> "MultiplicityReport":
        return cls(obj["samples"], obj["level"], obj["seed"], list(obj["multiplicities"]), obj["boundary_hits"])


def sample_verify(P: Polygon, L: LatticeBasis, k: int, N: int = 1000, seed: int = 0) -> MultiplicityReport:
    """Count coverage at N seeded random points of the fundamental parallelogram of L.

    Points are ``s*b1 + t*b2`` with s, t uniform multiples of 2**-32 in [0, 1).
    A point on some translate's boundary is redrawn.
    """
    rng = random.Random(seed)
    counter = _RowCounter(P, L)
    report = MultiplicityReport(N, k, seed)
    streak = 0
    while len(report.multiplicities) < N:
        s = Rational(rng.randrange(SAMPLE_DENOMINATOR), SAMPLE_DENOMINATOR)
        t = Rational(rng.randrange(SAMPLE_DENOMINATOR), SAMPLE_DENOMINATOR)
        mult = counter.count(L.point(s, t))
        if mult is BOUNDARY:
            report.boundary_hits += 1
            streak += 1
            if streak > 10 * N:
                raise WitnessError("too many consecutive boundary samples; degenerate input")
            continue
        streak = 0
        report.multiplicities.append(mult)
    return report
