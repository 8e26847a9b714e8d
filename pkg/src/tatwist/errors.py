"""Exception hierarchy shared by all modules."""


class TatError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(TatError, ValueError):
    pass


class DuplicateEndpoint(DiagramError):
    pass


class EndpointOutOfRange(DiagramError, IndexError):
    pass


class SelfPairedEndpoint(DiagramError):
    pass


class EmptyDiagram(DiagramError):
    pass


class DiagramTooLarge(DiagramError):
    pass


class GapOutOfRange(DiagramError, IndexError):
    pass


class ParseError(DiagramError):
    """Malformed diagram or twist text.

    ``position`` is the character offset at which parsing failed and
    ``reason`` a short machine-readable tag (``"SelfPaired"``, ``"Syntax"``, ...).
    """

    def __init__(self, message, position=0, reason="Syntax"):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.reason = reason


class InvalidParameters(TatError, ValueError):
    pass


class NotCoprime(InvalidParameters):
    pass


class ParameterTooSmall(InvalidParameters):
    pass


class NotANeighbourChord(InvalidParameters):
    pass


class ChordIdOutOfRange(InvalidParameters, IndexError):
    pass


class InvalidSymmetry(InvalidParameters):
    pass


class Unsatisfiable(TatError):
    pass


class NotASymmetry(TatError, ValueError):
    """The walk length is not a rotational symmetry of the diagram."""

    def __init__(self, message, minimal_walk_length=None):
        super().__init__(message)
        self.minimal_walk_length = minimal_walk_length


class CapExceeded(TatError, ValueError):
    pass


class Overflow(TatError, ArithmeticError):
    pass
