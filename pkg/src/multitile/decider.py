"""Deciding whether a symmetric convex polygon tiles the plane multiply with some lattice.

For a lattice L, P + L is a multiple tiling iff every edge pair j satisfies

* ``A1``: tau_j is in L, or
* ``B``:  e_j is in L and t*e_j + tau_j is in L for some 0 < t < 1.

:func:`decide` searches for such an L in polynomial time: first lattices
where A1 holds for a single index (class A), then lattices built from a
maximal set J of indices whose translation vectors span a discrete group
(class B).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .numfield import FieldElement, FieldSpec, Rational
from .planar import EdgePairing, Polygon, Vec, area, edge_pairs
from .selector import SelectorInstance, enumerate_maximal_sets, mixed_generators
from .subgroup import (
    LatticeBasis,
    covolume,
    ext_gcd,
    is_commensurable,
    is_discrete,
    lattice_basis,
    lattice_coords,
    line_commensurable_point,
)

__all__ = [
    "PairCondition",
    "Verdict",
    "WitnessError",
    "bolle_check",
    "class_a",
    "class_b",
    "build_witness",
    "level",
    "decide",
]

log = logging.getLogger(__name__)


class WitnessError(AssertionError):
    """A constructed witness failed its own verification (implementation bug)."""


@dataclass(frozen=True)
class PairCondition:
    j: int
    status: str  # "A1", "B" or "Fail"
    t: Optional[FieldElement] = None

    def to_json(self) -> dict:
        out = {"j": self.j, "status": self.status}
        if self.t is not None:
            out["t"] = self.t.to_json()
        return out

    @classmethod
    def from_json(cls, spec, obj) -> "PairCondition":
        t = FieldElement.from_json(spec, obj["t"]) if "t" in obj else None
        return cls(obj["j"], obj["status"], t)


@dataclass
class Verdict:
    tiles: bool
    cls: Optional[str] = None
    J: tuple = ()
    lattice: Optional[LatticeBasis] = None
    level: Optional[int] = None
    pairs: list = field(default_factory=list)
    rejections: list = field(default_factory=list)
    base_lattice: Optional[LatticeBasis] = None

    def to_json(self) -> dict:
        out = {
            "tiles": self.tiles,
            "class": self.cls,
            "J": list(self.J),
            "lattice": self.lattice.to_json() if self.lattice else None,
            "level": self.level,
            "pairs": [p.to_json() for p in self.pairs],
            "rejections": self.rejections,
        }
        if self.lattice is not None:
            out["field"] = self.lattice.b1.field.to_json()
        return out

    @classmethod
    def from_json(cls, obj) -> "Verdict":
        if not obj["tiles"]:
            return cls(False, rejections=obj.get("rejections", []))
        spec = FieldSpec.from_json(obj["field"])
        b1, b2 = (Vec.from_json(spec, v) for v in obj["lattice"])
        return cls(
            True,
            obj["class"],
            tuple(obj["J"]),
            LatticeBasis(b1, b2),
            obj["level"],
            [PairCondition.from_json(spec, p) for p in obj["pairs"]],
            obj.get("rejections", []),
        )


def _pairing(P) -> EdgePairing:
    return P if isinstance(P, EdgePairing) else edge_pairs(P)


def _b2_parameter(tau: Vec, u: int, v: int, L: LatticeBasis) -> Optional[FieldElement]:
    """Smallest t > 0 with t*e + tau in L, where e = (u, v) in L-coordinates; None if none."""
    tx, ty = L.coords(tau)
    c = ty * u - tx * v
    if not c.is_integer():
        return None
    c = int(c.to_rational())
    g, t_, s_ = ext_gcd(u, -v)  # u*t_ - v*s_ == g
    if c % g:
        return None
    k = c // g
    px, py = k * s_, k * t_
    t0 = (px - tx) / u if u else (py - ty) / v
    # lattice points on the line recur every 1/g in t
    return t0 - Rational((t0 * g).floor(), g)


def bolle_check(P, L: LatticeBasis) -> list:
    """Per-pair tiling conditions of P against L; P + L tiles iff none is ``Fail``."""
    pairing = _pairing(P)
    out = []
    for j in range(1, pairing.n + 1):
        tau, e = pairing.tau[j - 1], pairing.e[j - 1]
        tc = lattice_coords(tau, L)
        if tc is not None and all(q.denominator == 1 for q in tc):
            out.append(PairCondition(j, "A1"))
            continue
        ec = lattice_coords(e, L)
        if ec is None or any(q.denominator != 1 for q in ec):
            out.append(PairCondition(j, "Fail"))
            continue
        t = _b2_parameter(tau, int(ec[0]), int(ec[1]), L)
        if t is None:
            out.append(PairCondition(j, "Fail"))
        elif t.is_zero():
            out.append(PairCondition(j, "A1"))
        else:
            out.append(PairCondition(j, "B", t))
    return out


def level(P: Polygon, L: LatticeBasis) -> int:
    """Tiling level ``area(P) / covolume(L)``; must be a positive integer."""
    q = area(P) / covolume(L)
    if not q.is_integer() or q.to_rational() < 1:
        raise WitnessError(f"non-integral tiling level {q}")
    return int(q.to_rational())


def build_witness(P, L: LatticeBasis, J: Sequence[int]) -> tuple:
    """Enlarge L by one commensurable point on each line tau_j + R e_j (j not in J).

    Returns the enlarged basis and its verified pair conditions.
    """
    pairing = _pairing(P)
    gens = L.generators()
    chosen = set(J)
    for j in range(1, pairing.n + 1):
        if j in chosen:
            continue
        p = line_commensurable_point(pairing.tau[j - 1], pairing.e[j - 1], L)
        if p is None:
            raise WitnessError(f"no commensurable point on line {j}")
        gens.append(p)
    L_star = lattice_basis(gens)
    conds = bolle_check(pairing, L_star)
    failed = [c.j for c in conds if c.status == "Fail"]
    if failed:
        raise WitnessError(f"witness lattice fails the tiling conditions at pairs {failed}")
    return L_star, conds


def _finish(P, pairing, L, J, cls_name, rejections) -> Verdict:
    L_star, conds = build_witness(pairing, L, J)
    k = level(P, L_star)
    return Verdict(True, cls_name, tuple(J), L_star, k, conds, rejections, base_lattice=L)


def class_a(P: Polygon, rejections: Optional[list] = None, pairing=None) -> Optional[Verdict]:
    """Look for a lattice where A1 holds at exactly one index j.

    For j, the candidate lattice is spanned by the other edge vectors; every
    other line tau_i + R e_i must carry a commensurable point while tau_i
    itself is incommensurable.
    """
    pairing = pairing or edge_pairs(P)
    rejections = [] if rejections is None else rejections
    n = pairing.n
    for j in range(1, n + 1):
        others = [i for i in range(1, n + 1) if i != j]
        res = is_discrete([pairing.e[i - 1] for i in others])
        if not res.is_lattice:
            rejections.append({"class": "A", "j": j, "reason": f"I: edge vectors span a {res.verdict} rank-{res.rank} group"})
            continue
        L = res.basis
        reason = None
        for i in others:
            if line_commensurable_point(pairing.tau[i - 1], pairing.e[i - 1], L) is None:
                reason = f"II: line {i} has no commensurable point"
                break
        if reason is None:
            for i in others:
                if is_commensurable(pairing.tau[i - 1], L):
                    reason = f"III: tau_{i} is commensurable"
                    break
        if reason is not None:
            rejections.append({"class": "A", "j": j, "reason": reason})
            continue
        return _finish(P, pairing, L, (j,), "A", rejections)
    return None


def class_b(P: Polygon, rejections: Optional[list] = None, pairing=None) -> Optional[Verdict]:
    """Try L = span(tau_J) + span(e_j, j not in J) for every maximal discrete J."""
    pairing = pairing or edge_pairs(P)
    rejections = [] if rejections is None else rejections
    inst = SelectorInstance.from_pairing(pairing)
    for J in enumerate_maximal_sets(inst):
        res = is_discrete(mixed_generators(inst, J))
        if not res.is_lattice:
            rejections.append({"class": "B", "J": list(J), "reason": f"group is {res.verdict}"})
            continue
        L = res.basis
        bad = next(
            (j for j in range(1, inst.n + 1)
             if j not in J and line_commensurable_point(inst.tau[j - 1], inst.e[j - 1], L) is None),
            None,
        )
        if bad is not None:
            rejections.append({"class": "B", "J": list(J), "reason": f"line {bad} has no commensurable point"})
            continue
        return _finish(P, pairing, L, J, "B", rejections)
    return None


def decide(P: Polygon) -> Verdict:
    """Class A first, then class B; otherwise a verdict listing every rejected candidate."""
    pairing = edge_pairs(P)
    rejections = []
    verdict = class_a(P, rejections, pairing) or class_b(P, rejections, pairing)
    if verdict is None:
        log.debug("no tiling lattice: %d candidates rejected", len(rejections))
        return Verdict(False, rejections=rejections)
    return verdict
