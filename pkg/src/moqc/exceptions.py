"""Exception hierarchy shared by the solver, the loaders and the CLI."""


class MoqcError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(MoqcError, ValueError):
    """An argument or an input graph violates a documented precondition."""


class GraphParseError(InvalidInputError):
    """A graph file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UndefinedDensityError(InvalidInputError):
    """Density was requested for a vertex set with fewer than two vertices."""


class NoCandidateError(InvalidInputError):
    """No vertex outside the current set is left to add."""


class NoFeasibleQuasiCliqueError(MoqcError):
    """The graph has no edge, so no quasi-clique of positive density exists."""


class SizeGuardError(MoqcError):
    """The brute-force reference was asked to enumerate a graph that is too large."""


class InvariantError(MoqcError, AssertionError):
    """An internal invariant that the algorithms guarantee was found broken."""


class TimeLimitExceeded(MoqcError):
    """The cooperative time budget ran out.

    ``frontier`` and ``report`` carry whatever had been collected when the
    budget was exhausted (either may be ``None``).
    """

    def __init__(self, message="time limit exceeded", frontier=None, report=None):
        super().__init__(message)
        self.frontier = frontier
        self.report = report
