"""Exact decision of multiple lattice tilings by symmetric convex polygons."""

from .decider import PairCondition, Verdict, bolle_check, build_witness, class_a, class_b, decide, level
from .numfield import QQ, FieldElement, FieldSpec
from .oracle import brute_force_decide, brute_force_select, multiplicity_at, sample_verify
from .planar import EdgePairing, Polygon, Vec, area, coords_in_basis, cross, edge_pairs, validate_polygon
from .selector import SelectorInstance, enumerate_maximal_sets, grow_maximal, select_j
from .subgroup import (
    LatticeBasis,
    covolume,
    is_commensurable,
    is_discrete,
    lattice_basis,
    line_commensurable_point,
)

__version__ = "0.1.0"
