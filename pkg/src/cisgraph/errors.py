"""Exception types shared across the package.

Everything derives from CisGraphError (itself a ValueError) so callers can
catch one base class, while tests can pin the precise failure kind.
"""


class CisGraphError(ValueError):
    """Base class for all errors raised by this package."""


class OrderOutOfRange(CisGraphError):
    """Vertex count outside the supported range (1..MAX_VERTICES)."""


class BadEdge(CisGraphError):
    """Edge endpoint out of range, or a self loop."""


class ParseError(CisGraphError):
    """Malformed textual graph input (graph6 or edge list)."""


class NotConnected(CisGraphError):
    """Operation requires a connected graph."""


class TrivialGraph(CisGraphError):
    """Operation requires at least two vertices."""


class SameVertex(CisGraphError):
    """Two distinct vertices are required."""


class BadOrder(CisGraphError):
    """A family was requested at an order where it does not exist."""


class BadClass(CisGraphError):
    """Family or graph-class parameters outside their legal range."""


class TooFewParts(BadClass):
    """A clique-with-paths family needs at least three parts."""


class BadInstance(CisGraphError):
    """A transformation instance violates one of its lemma's hypotheses."""


class Unsatisfiable(CisGraphError):
    """No instance fits within the requested order budget."""


class EmptyClass(CisGraphError):
    """An extremal search ran over a class containing no graphs."""
