"""
Discrete or dense?
==================

A finite set of plane vectors spans a lattice, a cyclic group, or a dense
subgroup.  ``is_discrete`` decides which and returns a Z-basis when the span
is a lattice.
"""

from fractions import Fraction

from multitile import QQ, Vec, covolume, is_discrete
from multitile.generators import SQRT2

half = Fraction(1, 2)

# three rational vectors: a lattice of covolume 1/2
res = is_discrete([Vec.of(QQ, 1, 0), Vec.of(QQ, 0, 1), Vec.of(QQ, half, half)])
print(res.verdict, "rank", res.rank, "basis", res.basis, "covolume", covolume(res.basis))

# (1, 0) and (sqrt 2, 0) are parallel but incommensurable: dense on a line
r2 = SQRT2.gen()
res = is_discrete([Vec.of(SQRT2, 1, 0), Vec(r2, SQRT2.zero())])
print(res.verdict, "rank", res.rank, "irrational coefficient", res.witness)

# irrational vectors can still span a lattice when they share a common frame
u, v = Vec(r2, SQRT2.one()), Vec(SQRT2.one(), r2)
res = is_discrete([u, v, u * 3 - v * 2])
print(res.verdict, "rank", res.rank, "covolume", covolume(res.basis))
