"""Factorization of quadratic polynomials over the split quaternions."""
from .algebra import I, J, K, ONE, ZERO, SplitQuaternion
from .errors import SplitQuatError
from .factorization import (
    CaseLabel, FactorizationOutcome, RemainderClass, Witness, enumerate_factorizations, factorize,
)
from .nullquadric import (
    ProjectiveLine, ProjectivePoint, RulingClass, line_null_intersections, ruling_type,
    segment_null_intersections,
)
from .polynomials import RPoly, SPoly, norm_poly
from .verification import search_zero, verify_factorization, verify_witness

__version__ = "0.1.0"

__all__ = [
    "SplitQuaternion", "ONE", "ZERO", "I", "J", "K", "SplitQuatError",
    "SPoly", "RPoly", "norm_poly",
    "CaseLabel", "RemainderClass", "Witness", "FactorizationOutcome", "factorize",
    "enumerate_factorizations",
    "ProjectivePoint", "ProjectiveLine", "RulingClass", "ruling_type",
    "segment_null_intersections", "line_null_intersections",
    "verify_factorization", "verify_witness", "search_zero",
]
