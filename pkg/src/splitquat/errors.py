"""Exception types raised by the library."""


class SplitQuatError(Exception):
    """Base class for all library errors."""


class InternalInconsistency(SplitQuatError, ArithmeticError):
    """Two numerical decisions contradict each other (never expected)."""


class NotInvertible(SplitQuatError, ZeroDivisionError):
    """The element lies on the null cone."""


class LeadingCoefficientNotInvertible(NotInvertible):
    pass


class NotARightZero(SplitQuatError, ValueError):
    pass


class DegreeMismatch(SplitQuatError, ValueError):
    pass


class NotConjugationClosed(SplitQuatError, ValueError):
    pass


class ZeroVector(SplitQuatError, ValueError):
    pass


class DependentInput(SplitQuatError, ValueError):
    pass


class WrongRuling(SplitQuatError, ValueError):
    pass


class VanishingNormPolynomial(SplitQuatError, ValueError):
    pass


class NotQuadratic(SplitQuatError, ValueError):
    pass


class MNotAFactor(SplitQuatError, ValueError):
    pass


class SingularSystem(SplitQuatError, ArithmeticError):
    pass


class DependentCoefficients(SplitQuatError, ValueError):
    pass


class NormPolyNotZero(SplitQuatError, ValueError):
    pass


class ZeroLeadingCoefficient(SplitQuatError, ValueError):
    pass
