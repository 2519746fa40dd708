"""
The determinant of a 2x2 matrix, one weight at a time
======================================================

Everything about a single isotypic piece of the localized D-module is
controlled by its b-function.  For the generic 2x2 determinant and the
trivial weight that is ``(s+1)(s+2)``.
"""

from fractions import Fraction

from vfilt import builtin, hodge_level, nu, p_function, weight_level
from vfilt.filtration import fdf_matrices, r_lambda, v_ideal_structure

det2 = builtin("det", 2)
b = det2.b_of_weight((0, 0))
print("b-function:", b)

###############################################################################
# Walking up the V-filtration
# ---------------------------
# The generator of the V-filtration piece at ``alpha`` is the product of
# shifted Pochhammer symbols.  It only changes when ``alpha`` crosses a
# root, so sampling a few values shows every jump.

for alpha in (Fraction(1, 2), 1, Fraction(3, 2), 2, 3):
    p = p_function(b, alpha)
    print(f"alpha={alpha!s:>4}  p={p!s:<16} deg={p.degree}  nu={nu(b, alpha)}  "
          f"weight level={weight_level(b, alpha)}  hodge level={hodge_level(b, alpha)}")

###############################################################################
# Twisting by a negative power of the determinant
# -----------------------------------------------
# At weight ``(0, -2)`` the roots move to ``-2`` and ``1``; the V-ideal picks
# up the integer root that lies to the right.

twisted = det2.b_of_weight((0, -2))
print("\nb at (0,-2):", twisted, " r_lambda =", r_lambda(twisted))
print("V-ideal generator at 1/2:", v_ideal_structure(twisted, Fraction(1, 2)))

###############################################################################
# The f and df matrices
# ---------------------
# At ``alpha = 2`` the logarithm of monodromy acts with a Jordan block of
# size two.  The block matrix ``C`` records how ``df`` fails to be injective
# on the graded piece.

m = fdf_matrices(b, 2, 5)
print("\nrho, nu, mu:", m.rho, m.nu, m.mu)
print("C =", [[str(x) for x in row] for row in m.C])
