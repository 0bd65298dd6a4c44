"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SingularityError(Exception):
    """Base class for every error raised by qhsing."""


class ParseError(SingularityError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class UnknownVariable(ParseError):
    pass


class NotQuasihomogeneous(SingularityError):
    """The weight equations for the monomials are inconsistent."""


class DegenerateWeights(SingularityError):
    """A weight falls outside the open interval (0, 1)."""


class UnusedVariable(SingularityError):
    pass


class InexactDivision(SingularityError):
    pass


class NonIntegerMilnorNumber(SingularityError):
    pass


class GaloisOrbitNonUniform(SingularityError):
    """Eigenvalue multiplicities differ inside one Galois orbit (internal bug)."""


class NoLift(SingularityError):
    pass


class OutOfRange(SingularityError):
    pass


class ForbiddenModulus(SingularityError):
    pass


class SingularPoint(SingularityError):
    pass


class NotOnHypersurface(SingularityError):
    pass


class NotTangent(SingularityError):
    pass


class BaseNotOnCurve(SingularityError):
    pass


class FrameDegenerate(SingularityError):
    pass


class OffHypersurface(SingularityError):
    pass


class NotIsolated(SingularityError):
    """The origin is not an isolated critical point."""
