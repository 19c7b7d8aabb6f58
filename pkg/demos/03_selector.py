"""
Choosing between tau_j and e_j
==============================

For each edge pair j, a tiling lattice must contain either the translation
tau_j or the edge e_j.  The selector looks for a set J such that the tau_j
for j in J together with the e_j for j outside J span a discrete group, using
a polynomial number of discreteness tests.
"""

from multitile import SelectorInstance, Vec, enumerate_maximal_sets, select_j
from multitile.generators import SQRT2 as K
from multitile.subgroup import count_discreteness_calls

a = K.gen()
one, zero = K.one(), K.zero()

# the translations are pairwise commensurable but not all together
e = [Vec(one, zero), Vec(zero, one), Vec(a, one + a)]
tau = [Vec(a, one), Vec(one, one + a), Vec(K(3), a)]
inst = SelectorInstance(e, tau)

print("maximal discrete tau-sets:", enumerate_maximal_sets(inst))
with count_discreteness_calls() as calls:
    J = select_j(inst)
print("selected J:", J, "after", calls[0], "discreteness tests")

# make the edges rational and J = {} (all edges) works immediately
inst = SelectorInstance([Vec(one, zero), Vec(zero, one), Vec(K(2), K(3))], tau)
print("with rational edges, J =", select_j(inst))
