"""
Factorizing t² + (1 + k) t + 2 + i + j + k step by step
=======================================================

Both remainder polynomials are null lines here, so the generic algorithm
has nothing to divide by.  The zero is built inside the two-parameter zero
set of the remainder that lies on a right ruling.
"""
from splitquat.algebra import ONE, SplitQuaternion as S
from splitquat.factorization import factorize, null_remainder_construction, remainder_candidates
from splitquat.polynomials import SPoly, eval_right, norm_poly

P = SPoly([S(2, 1, 1, 1), S(1, 0, 0, 1), ONE])
print("P      =", P)
print("P P̄    =", norm_poly(P))

# %% one remainder per real quadratic factor of the norm polynomial
cands = remainder_candidates(P)
for c in cands:
    m = " ".join(f"{round(v, 12) + 0.0:+g}" for v in c.M.coeffs)
    print(f"M: {m} (constant first)   R = {c.R}   {c.classification.value} {c.ruling.value}")

# %% the right ruling gives h, then λ and μ fix norm and scalar part
first = cands[0]
built = null_remainder_construction(first.M, first.R)
print("h =", built.h, "  λ =", built.lambda_, "  μ =", built.mu)
print("zero:", built.zero, "  P(zero) =", eval_right(P, built.zero))

# %% the full pipeline returns the same factorization
out = factorize(P)
w = out.witness
print(f"P = (t - ({w.h1})) (t - ({w.h2}))   residual {out.residual:.1e}")
