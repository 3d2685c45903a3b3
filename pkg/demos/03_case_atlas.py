"""
One polynomial per case
=======================

The engine normalizes the input and then dispatches on the dependence of
the coefficients.  Each case keeps a certificate of what it checked.
"""
from splitquat.algebra import ONE, ZERO, SplitQuaternion as S
from splitquat.factorization import factorize
from splitquat.polynomials import SPoly

atlas = {
    "real coefficients": SPoly([S.real(2.0), ZERO, ONE]),
    "b = 0, no zero": SPoly([S(2, 1, 1, 1), ZERO, ONE]),
    "b = 0, zero exists": SPoly([S(1, 2, 0, 0), ZERO, ONE]),
    "dependent, null b": SPoly([S(-1, 0, 0, 0), S(0, 1, 1, 0), ONE]),
    "dependent, no zero": SPoly([S(1, 0, 0, 0), S(0, 0, 1, 1), ONE]),
    "independent": SPoly([S(2, 1, 1, 1), S(1, 0, 0, 1), ONE]),
    "null leading coefficient": SPoly([S(2, 0, 0, 0), S(0, 1, 0, 0), S(1, 0, 1, 0)]),
    "vanishing norm": SPoly([S(-0.25, 0, 0.25, 0), S(0, 1, 0, 0), S(1, 0, 1, 0)]),
}

for name, P in atlas.items():
    out = factorize(P)
    verdict = "factorizable" if out.factorizable else "no factorization"
    print(f"{name:26s} {out.label.value:33s} {verdict}")
    for key in ("violated", "branch", "path", "layout"):
        if key in out.certificate:
            print(f"{'':26s} {key}: {out.certificate[key]}")
