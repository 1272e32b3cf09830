"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """A caller broke a documented precondition (unknown vertex, duplicate edge, ...)."""


class NoSeparator(ValueError):
    """Raised when the two terminals are adjacent and no vertex separator exists."""


class StructureViolation(RuntimeError):
    """A structural consequence that must hold under the solver's preconditions failed.

    This signals that the input graph still contains a small obstruction (or the
    caller fed a graph outside the routine's domain).  Solvers let it propagate:
    failing loudly with a diagnostic beats returning a wrong answer.
    """

    def __init__(self, detail, witness=None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness


class WorkBoundExceeded(RuntimeError):
    """An explicitly configured enumeration budget was exhausted."""


class SizeGuardExceeded(RuntimeError):
    """An oracle was asked to handle an instance above its guarded size."""


class ParseError(ValueError):
    """Malformed instance file."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
