"""
Deciding multiple tilings and checking the answer
=================================================

``decide`` returns a verdict with a witness lattice and its level k.  The
witness is then checked twice: with the exact edge-pair conditions, and by
counting how many translates cover random points of a fundamental domain.
"""

from multitile import QQ, Vec, bolle_check, decide, validate_polygon
from multitile.generators import regular_octagon
from multitile.oracle import brute_force_decide, sample_verify

pts = [(0, 0), (1, 0), (2, 1), (2, 2), (1, 3), (0, 3), (-1, 2), (-1, 1)]
octagon = validate_polygon([Vec.of(QQ, x, y) for x, y in pts])

verdict = decide(octagon)
print("tiles:", verdict.tiles, "level:", verdict.level, "J:", verdict.J)
print("lattice:", verdict.lattice)
for cond in bolle_check(octagon, verdict.lattice):
    print("  pair", cond.j, cond.status, "" if cond.t is None else f"t = {cond.t}")

report = sample_verify(octagon, verdict.lattice, verdict.level, N=500, seed=1)
print("sampled multiplicities:", sorted(set(report.multiplicities)), "pass:", report.passed)

# the regular octagon admits no multiple lattice tiling at all
reg = regular_octagon()
print("regular octagon tiles:", decide(reg).tiles, "| exhaustive search agrees:", not brute_force_decide(reg).tiles)
