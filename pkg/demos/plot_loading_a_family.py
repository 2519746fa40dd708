"""
Bringing your own space
=======================

A multiplicity-free space that is not built in can be described by the
affine b-function model: the numbers ``r_i`` and the integer matrix ``c``
so that the roots at weight ``a`` are ``r_i + sum_t c[i][t] a_t``.
"""

import json

from vfilt import load_family, nu
from vfilt.bfun import FamilyDataError
from vfilt.spaces import E6_FAMILY_JSON

print(json.dumps(E6_FAMILY_JSON, indent=1))

fam = load_family(json.dumps(E6_FAMILY_JSON))
for a in [(0, 0, 0), (2, 1, 0), (0, 0, -1)]:
    b = fam.b_of_weight(a)
    print(a, b, "nu at 0:", nu(b, 0))

###############################################################################
# Bad data is caught when the file is read
# ----------------------------------------
# Entries of ``c`` must be 0 or 1 and the model is sampled on a small box,
# so a matrix that breaks the shift law is rejected up front.

broken = dict(E6_FAMILY_JSON, c=[[0, 0, 1], [0, 1, 1], [1, 1, 0]])
try:
    load_family(broken)
except FamilyDataError as err:
    print("\nrejected:", err)
