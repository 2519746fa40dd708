"""
Weight filtration on gr_V
=========================

On ``gr_V^alpha`` the nilpotent ``s + alpha`` has a single Jordan block whose
size is the multiplicity ``nu``.  The monodromy weight filtration splits it
into one-dimensional pieces of alternating parity.
"""

from vfilt import builtin, graded_character
from vfilt.filtration import grv_report, grw_grv_membership
from vfilt.oracle import jordan_weight_dim

###############################################################################
# A Jordan block of size four
# ---------------------------
# The closed form for the dimension of ``W_l`` agrees with an explicit
# kernel computation on the block.

size = 4
for ell in range(-size, size + 1):
    print(f"l={ell:>2}  dim W_l = {jordan_weight_dim(size, 0, ell)}  "
          f"new piece: {grw_grv_membership(size, ell)}")

###############################################################################
# Across a whole family
# ---------------------
# For the 4x4 Pfaffian the graded character of ``gr^W`` at level ``l``
# collects exactly the weights with ``nu = l``.

pf = builtin("pfaffian", 4)
for ell in range(3):
    pieces = graded_character(pf, 0, ell, 2, "grW")
    shown = ", ".join(str(tw) for tw in pieces[:4]) or "nothing in this box"
    print(f"gr^W_{ell}: {shown}{' ...' if len(pieces) > 4 else ''}")

det2 = builtin("det", 2)
pairs = [(w, det2.b_of_weight(w)) for w in det2.weights(1)]
report = grv_report(pairs, 2, [-1, 0, 1, 2])
for weight, v, exps in report.entries:
    print(weight, "nu =", v, "exponents:", exps)
