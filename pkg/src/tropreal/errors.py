"""Exception types shared across the package."""


class TropRealError(Exception):
    """Base class for all library errors."""


class ParseError(TropRealError):
    """Malformed polynomial, series, or point text."""


class DimensionMismatch(TropRealError):
    """Operands live in spaces of different dimensions."""


class NegativeExponentAtZero(TropRealError):
    """A Laurent term with negative exponent was evaluated at a zero coordinate."""


class PuiseuxDivisionError(TropRealError):
    """Inverting a non-monomial Puiseux series would need an infinite tail."""


class NotClosedInput(TropRealError):
    """An operation requiring closed polyhedra received a strict constraint."""


class EmptyPolyhedron(TropRealError):
    """An operation requiring a nonempty polyhedron received an empty one."""


class ShapeMismatch(TropRealError):
    """A description does not have the shape an operation requires."""


class PreconditionFailed(TropRealError):
    """An operation's verified precondition does not hold for the input."""


class NoEpsilonFound(TropRealError):
    """The scale-search budget was exhausted without a verified candidate."""


class UnknownSuite(TropRealError):
    """A check suite name is not registered."""
