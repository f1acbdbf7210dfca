"""Exception types raised by curvkit."""

from __future__ import annotations


class CurvkitError(Exception):
    """Base class for every error raised by this package."""


class GraphError(CurvkitError, ValueError):
    """The input does not describe a valid graph."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NonpositiveWeight(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class NoSuchEdge(GraphError):
    pass


# both names appear in the public API
NotAnEdge = NoSuchEdge


class NotCombinatorial(GraphError):
    """A check stated for unit-weight trees received a weighted tree."""


class SameNode(CurvkitError, ValueError):
    pass


class AlphaOutOfRange(CurvkitError, ValueError):
    pass


class TooLarge(CurvkitError, ValueError):
    pass


class MeasureError(CurvkitError, ValueError):
    """A vector is not a probability measure on the node set."""


class ParseError(CurvkitError, ValueError):
    pass


class ConsistencyError(CurvkitError, RuntimeError):
    """An internal identity that must hold did not; indicates a solver bug."""


class Infeasible(CurvkitError, RuntimeError):
    pass


class Unbounded(CurvkitError, RuntimeError):
    pass
