"""
Polynomials whose whole curve lies on the null quadric
======================================================

If P P̄ vanishes identically every value P(t) is a zero divisor.  Such
polynomials always factor, with two quite different constructions.
"""
from splitquat.algebra import I, ONE, SplitQuaternion as S, inverse, mul
from splitquat.factorization import factorize
from splitquat.polynomials import SPoly, eval_right, norm_poly

# %% a conic: independent coefficients, one explicit zero
P = SPoly([S(-0.25, 0, 0.25, 0), I, S(1, 0, 1, 0)])
print("P P̄ =", norm_poly(P))
h = -mul(inverse(P[1]), P[0])
print("-b⁻¹c =", h, "  h² =", mul(h, h), "  P(h) =", eval_right(P, h))
w = factorize(P).witness
print("factors:", w.left, "·", w.right)

# %% dependent coefficients: everything is a left multiple of 1 + j
P = SPoly([S(1, 2, 1, -2), S(0, 0, 0, 0), ONE + S(0, 0, 1, 0)])
out = factorize(P)
print(out.label.value, out.certificate.get("layout"))
print("residual:", out.witness.residual(P))
