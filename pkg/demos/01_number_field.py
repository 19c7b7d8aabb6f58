"""
Exact arithmetic in Q(sqrt 2)
=============================

Every coordinate in multitile lives in a number field Q(a), given by a monic
minimal polynomial and an interval isolating the real root a.  Elements are
rational coordinate vectors; signs are decided exactly by refining the root.
"""

from multitile import FieldSpec

# Q(sqrt 2): a is the root of X^2 - 2 inside [1, 2]
K = FieldSpec.quadratic(2)
a = K.gen()
print("field: Q(%s), minimal polynomial coefficients %s" % (K.name, [str(c) for c in K.minpoly]))

# arithmetic stays exact; the inverse comes from polynomial extended gcd
x = 1 + a
print("(1 + a)^2 =", x * x)
print("1 / (1 + a) =", x.inverse())
print("check:", x * x.inverse())

# the sign of a - 99/70 is decided without floating point
from fractions import Fraction

close = a - Fraction(99, 70)
print("sign(a - 99/70) =", close.sign())
print("floor(10 a) =", (a * 10).floor())
print("a to within 1e-12:", float(a.approx(Fraction(1, 10 ** 12))))

# a cubic field works the same way
K3 = FieldSpec((-2, 0, 0, 1), (1, 2), name="cbrt2")
b = K3.gen()
print("b^3 =", b * b * b, " 1/b =", b.inverse())
