"""Exception hierarchy shared by every module of the workbench."""


class PinchbandError(Exception):
    """Base class for all domain errors raised by this package."""


class DiagramError(PinchbandError, ValueError):
    """A knot diagram failed validation."""


class PDSyntaxError(DiagramError):
    """Malformed PD text."""


class EdgeLabelError(DiagramError):
    """Edge labels are not 1..2n with each label used exactly twice."""


class MultiComponentError(DiagramError):
    """The diagram has more than one component."""


class PlanarityError(DiagramError):
    """The Euler count V - E + F = 2 fails."""


class EvenParameter(PinchbandError, ValueError):
    pass


class UnknownName(PinchbandError, KeyError):
    pass


class NonSymmetricInput(PinchbandError, ValueError):
    pass


class ColoringDisagreement(PinchbandError, AssertionError):
    """Black and white shadings gave different signatures (a construction bug)."""


class TooManyCrossings(PinchbandError):
    pass


class IdentificationError(PinchbandError):
    pass


class UnknownKnot(IdentificationError):
    pass


class Ambiguous(IdentificationError):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class InvalidSite(PinchbandError, ValueError):
    pass


class NonKnotResult(PinchbandError):
    """A band move produced a link; the band was coherent, not an H(2)-move."""


class NonIntegralSigma(PinchbandError, ArithmeticError):
    pass


class NotKnownSlice(PinchbandError):
    pass


class BoundaryMismatch(PinchbandError, ValueError):
    pass


class InvalidN(PinchbandError, ValueError):
    pass
