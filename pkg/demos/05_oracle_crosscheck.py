"""
Cross-checking verdicts against a numeric search
================================================

The search works on the four real equations for a zero of t² + b t + c and
knows nothing about the constructions.  It should find a zero exactly when
the engine says one exists.
"""
import numpy as np

from splitquat.algebra import ONE, SplitQuaternion as S
from splitquat.factorization import factorize
from splitquat.polynomials import SPoly
from splitquat.verification import search_zero

rng = np.random.default_rng(0)
tally = {(True, True): 0, (True, False): 0, (False, True): 0, (False, False): 0}
for n in range(100):
    # half of the samples have b = 0, where zeros are often missing
    b = S(0.0, *rng.integers(-3, 4, size=3).astype(float)) if n % 2 else S(0, 0, 0, 0)
    c = S(*rng.integers(-3, 4, size=4).astype(float))
    engine = factorize(SPoly([c, b, ONE])).factorizable
    oracle = search_zero(b, c) is not None
    tally[(engine, oracle)] += 1

print("engine yes, search found   :", tally[(True, True)])
print("engine no,  search empty   :", tally[(False, False)])
print("disagreements              :", tally[(True, False)] + tally[(False, True)])
