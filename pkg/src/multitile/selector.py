"""Choosing, for each pair index j, either tau_j or e_j so the choice spans a discrete group.

Indices are 1-based throughout, matching the edge numbering of
:mod:`multitile.planar`.  The search runs in polynomial time: besides the
empty set and singletons, only sets J maximal for "span of {tau_j : j in J} is
discrete" need to be examined, and each such set is determined by any two of
its elements, so growing all C(n, 2) seeds enumerates them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .planar import EdgePairing, ParallelTaus, Vec, cross
from .subgroup import DiscretenessResult, is_discrete

__all__ = [
    "SelectorInstance",
    "mixed_generators",
    "grow_maximal",
    "enumerate_maximal_sets",
    "select_j",
    "certificate",
]


@dataclass(frozen=True)
class SelectorInstance:
    e: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(self.e))
        object.__setattr__(self, "tau", tuple(self.tau))
        if len(self.e) != len(self.tau):
            raise ValueError("e and tau must have the same length")
        for name, vecs in (("e", self.e), ("tau", self.tau)):
            for i, v in enumerate(vecs):
                if v.is_zero():
                    raise ValueError(f"{name}_{i + 1} is zero")
            for i, k in combinations(range(len(vecs)), 2):
                if cross(vecs[i], vecs[k]).is_zero():
                    if name == "tau":
                        raise ParallelTaus(f"ParallelTaus: tau_{i + 1} and tau_{k + 1} are parallel", k + 1)
                    raise ValueError(f"e_{i + 1} and e_{k + 1} are parallel")

    @property
    def n(self) -> int:
        return len(self.e)

    @classmethod
    def from_pairing(cls, pairing: EdgePairing) -> "SelectorInstance":
        return cls(pairing.e, pairing.tau)


def mixed_generators(inst, J: Sequence[int]) -> list:
    """Generators of span{tau_j : j in J} + span{e_j : j not in J}."""
    chosen = set(J)
    return [inst.tau[j - 1] if j in chosen else inst.e[j - 1] for j in range(1, inst.n + 1)]


def _taus(inst, J) -> list:
    return [inst.tau[j - 1] for j in J]


def grow_maximal(inst: SelectorInstance, seed: Sequence[int]) -> tuple:
    """The unique maximal J containing the two-element ``seed`` with span of tau_J discrete.

    A single ascending pass suffices: once T(J + {k}) is dense, every larger
    J keeps it dense.
    """
    J = sorted(seed)
    if len(J) != 2:
        raise ValueError("seed must have exactly two indices")
    for j in range(1, inst.n + 1):
        if j in J:
            continue
        if is_discrete(_taus(inst, J) + [inst.tau[j - 1]]).discrete:
            J.append(j)
    return tuple(sorted(J))


def enumerate_maximal_sets(inst: SelectorInstance) -> list:
    """All maximal J with span of tau_J discrete, each containing >= 2 indices, sorted."""
    found = []
    covered = set()
    for pair in combinations(range(1, inst.n + 1), 2):
        if pair in covered:
            continue
        J = grow_maximal(inst, pair)
        found.append(J)
        covered.update(combinations(J, 2))
    return sorted(found)


def select_j(inst: SelectorInstance) -> Optional[tuple]:
    """Some J with span{tau_j (j in J), e_j (j not in J)} discrete, or None if none exists.

    Tries the empty set, then singletons, then every maximal set in
    lexicographic order; the first that passes is returned.
    """
    candidates = [()] + [(j,) for j in range(1, inst.n + 1)]
    for J in candidates:
        if is_discrete(mixed_generators(inst, J)).discrete:
            return J
    for J in enumerate_maximal_sets(inst):
        if is_discrete(mixed_generators(inst, J)).discrete:
            return J
    return None


def certificate(inst, J) -> DiscretenessResult:
    """Discreteness result (frame, rational coefficients, basis) for a chosen J."""
    return is_discrete(mixed_generators(inst, J))

