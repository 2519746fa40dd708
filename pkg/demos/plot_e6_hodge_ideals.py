"""
Hodge ideals of the Freudenthal cubic
=====================================

The E6 module has three basic semi-invariants of degrees 1, 2 and 3, and
the cubic ``f`` has b-function ``(s+1)(s+5)(s+9)``, shifted per weight.
Here weights are written in semigroup coordinates ``a = (a1, a2, a3)``.
"""

from fractions import Fraction

from vfilt import builtin, ideal_weight_membership, ideal_weight_set

e6 = builtin("e6")
print("b at the trivial weight:", e6.b_of_weight((0, 0, 0)))
print("b at a = (1, 0, 0):    ", e6.b_of_weight((1, 0, 0)))

###############################################################################
# Membership by degree and by inequalities
# ----------------------------------------
# A weight lies in the Hodge ideal when ``deg p`` at ``alpha + k`` stays
# within ``k``.  The same answer comes from a short list of linear
# inequalities, and the two routes are compared on every call.

alpha = Fraction(1, 10)
for k in (3, 4, 5):
    for a in [(0, 0, 0), (0, 1, 0), (1, 0, 0)]:
        print(f"k={k} a={a}: {ideal_weight_membership(e6, k, alpha, a)}")

###############################################################################
# The whole weight set
# --------------------
# Collecting the members in a box gives the weights of the ideal together
# with its primary pieces.  At ``k = 5`` only the ideal of the singular locus
# remains, to the first power.

ws = ideal_weight_set(e6, 5, alpha, 4)
print("\nprimary pieces:", ws.primary_decomposition)
print("members in the box:", len(ws.weights))
print("smallest few:", ws.weights[:5])

###############################################################################
# Larger ``k`` means a smaller ideal: the degree of ``p`` grows three steps
# for every unit of ``k`` while the allowance grows by one.

for k in range(0, 12, 2):
    print(k, len(ideal_weight_set(e6, k, Fraction(1, 3), 3).weights))
