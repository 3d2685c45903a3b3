"""
A short tour of the split quaternions
=====================================

i² = -1, j² = k² = +1 and ij = k.  The norm h h̄ is indefinite, so some
nonzero elements have no inverse.
"""
import numpy as np

from splitquat.algebra import I, J, K, ONE, SplitQuaternion, inverse, mul, to_matrix
from splitquat.errors import NotInvertible

# %% multiplication table
for x, name in ((I, "i"), (J, "j"), (K, "k")):
    print(f"{name}² = {mul(x, x)}")
print("ij =", mul(I, J), "  ji =", mul(J, I))

# %% the norm has signature (2, 2)
h = SplitQuaternion(2.0, 1.0, 1.0, 1.0)
print("norm of", h, "is", h.norm())
print("inverse:", inverse(h), " check:", mul(h, inverse(h)))

# %% null elements are zero divisors
n = ONE + J
print("norm of 1 + j:", n.norm(), "  (1 + j)(1 - j) =", mul(n, ONE - J))
try:
    inverse(n)
except NotInvertible as exc:
    print("no inverse:", exc)

# %% the algebra is the algebra of real 2x2 matrices; the norm is the determinant
m = to_matrix(h)
print(m)
print("det =", np.linalg.det(m))
