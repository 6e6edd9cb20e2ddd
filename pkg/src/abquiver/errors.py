"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all domain errors raised by the engine."""


class MismatchError(EngineError):
    """Incompatible operands: ring, shape, ambient, context or endpoint."""


class CyclicQuiverUnsupported(EngineError):
    """Raised by operations that require enumerating the (finite) path set."""

    def __init__(self, cycle=None):
        self.cycle = tuple(cycle) if cycle else ()
        msg = "operation requires an acyclic quiver"
        if self.cycle:
            msg += " (cycle through %s)" % " -> ".join(self.cycle)
        super().__init__(msg)


class MissingPresentation(EngineError):
    """Presentation-route evaluation on an object without a stored presentation."""


class InvalidMorphism(EngineError):
    """A pp formula failed the functionality checks for a morphism."""


class ParseError(EngineError):
    """Syntax error in one of the text formats, with position information."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d, column %d: %s" % (line, column or 0, message)
        super().__init__(message)
