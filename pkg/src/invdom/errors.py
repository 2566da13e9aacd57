"""Exception hierarchy shared across the toolkit."""


class InvdomError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(InvdomError):
    """Malformed graph input (edge lists, corpus lines)."""


class Graph6Error(InputFormatError):
    """Malformed graph6 data."""


class MalformedLength(Graph6Error):
    """Size byte out of the single-byte range (n > 62 or byte not printable)."""


class TruncatedBody(Graph6Error):
    """graph6 body shorter than the size byte demands."""


class NonAsciiByte(Graph6Error):
    """Byte outside the printable graph6 alphabet."""


class TrailingGarbage(Graph6Error):
    """Extra bytes after a complete graph6 encoding."""


class TooLarge(InvdomError):
    """Graph exceeds a hard size cap (64 vertices, or 62 for graph6 output)."""


class VertexNotInD(InvdomError):
    """Private-neighbor query for a vertex outside the dominating set."""


class HasIsolates(InvdomError):
    """Inverse domination is undefined for graphs with isolated vertices."""


class NotDominated(InvdomError):
    """Standard partition requested for a universe the representatives miss."""


class SeedNotIndependent(InvdomError):
    """Independent-set expansion started from a non-independent seed."""


class PreconditionViolated(InvdomError):
    """A construction was invoked on input outside its stated hypotheses."""


class InternalContradiction(InvdomError):
    """A step the underlying theorem guarantees has failed.

    Either a precondition was silently violated (e.g. the dominating set was
    not minimum) or there is an implementation bug.  Carries a ``context``
    dict with the state at the failure point for debugging.
    """

    def __init__(self, message: str, context: dict | None = None):
        super().__init__(message)
        self.context = context or {}


class LemmaViolated(InternalContradiction):
    """Neither branch of the trichotomy holds: a reportable counterexample."""
