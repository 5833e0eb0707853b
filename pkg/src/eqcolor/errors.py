"""Exception hierarchy shared by every module."""


class EqColorError(Exception):
    """Base class for all package errors."""


class ParseError(EqColorError, ValueError):
    """Malformed input file; ``line`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class ParameterError(EqColorError, ValueError):
    """Invalid parameters for a generator or formula."""


class StructureError(EqColorError, ValueError):
    """A coloring or list assignment does not fit the graph it is checked against."""


class PreconditionError(EqColorError, ValueError):
    """An algorithm was called outside the hypothesis of its theorem."""


class ContractError(PreconditionError):
    """The input state violates the contract of a rebalancing step."""


class OutOfScopeError(PreconditionError):
    """The request lies outside the range covered by the underlying theorem."""


class InternalInvariantError(EqColorError, RuntimeError):
    """A state that the theory rules out was reached.  ``state`` holds a dump."""

    def __init__(self, message: str, state: dict | None = None):
        self.state = state or {}
        detail = ""
        if self.state:
            detail = "\n" + "\n".join(f"  {k}: {v!r}" for k, v in self.state.items())
        super().__init__(message + detail)


class StepCapExceeded(EqColorError, RuntimeError):
    """The configured shift budget of a potentially exponential search ran out."""
