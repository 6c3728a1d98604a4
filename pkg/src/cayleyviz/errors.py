"""Exception hierarchy shared across the package."""


class CayleyVizError(Exception):
    """Base class for all errors raised by cayleyviz."""


class ParseError(CayleyVizError, ValueError):
    """Base class for Cayley-table parse failures."""


class BadHeader(ParseError):
    """Header is missing or the label/vertex counts are not positive integers."""


class TooFewTokens(ParseError):
    """Input ended before the full transition table was read."""


class MalformedToken(ParseError):
    """A cell token is neither a non-negative integer nor ';'."""


class VertexOutOfRange(ParseError):
    """A cell references a vertex id outside the declared range."""


class TrailingGarbage(ParseError):
    """Extra tokens remain after the declared table was consumed."""


class ComponentNotStronglyConnected(CayleyVizError, ValueError):
    """A vertex list passed as an SCC is not one."""


class IncompleteAutomaton(CayleyVizError, ValueError):
    """Operation requires a complete automaton (one live successor per label)."""


class NotOutRegular(CayleyVizError, ValueError):
    """Recoloring requires every vertex to have a full row of live successors."""


class TooLarge(CayleyVizError, ValueError):
    """Input exceeds the size cap of an exhaustive-search operation."""
