"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SpiderSlideError(Exception):
    """Base class for all errors raised by spiderslide."""


class InvalidGraph(SpiderSlideError, ValueError):
    pass


class NotATree(InvalidGraph):
    pass


class NotASpider(InvalidGraph):
    pass


class NotAnEdge(SpiderSlideError, ValueError):
    pass


class InvalidTokenSet(SpiderSlideError, ValueError):
    pass


class NotIndependent(InvalidTokenSet):
    pass


class SizeMismatch(SpiderSlideError, ValueError):
    pass


class TokenMissing(SpiderSlideError, ValueError):
    pass


class NotANeighbor(SpiderSlideError, ValueError):
    pass


class InfiniteCost(SpiderSlideError, ValueError):
    pass


class InvalidSequence(SpiderSlideError, ValueError):
    """Raised by :func:`replay` when a slide sequence cannot be applied."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PreconditionViolated(SpiderSlideError, RuntimeError):
    """A construction was invoked outside the hypothesis it is proven for."""


class NonTermination(SpiderSlideError, RuntimeError):
    pass


class ResourceExceeded(SpiderSlideError, RuntimeError):
    """The exhaustive search hit its state budget before finishing."""

    def __init__(self, explored: int, limit: int):
        super().__init__(f"explored {explored} states, limit is {limit}")
        self.explored = explored
        self.limit = limit


class ParseError(SpiderSlideError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
