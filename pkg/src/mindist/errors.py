"""Exception hierarchy.  The CLI maps these onto exit codes."""


class InputError(ValueError):
    """Bad user input (exit code 3)."""


class PointFileError(InputError):
    """Malformed point file; ``line`` and ``column`` locate the problem when known."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


class ZeroVectorError(InputError):
    pass


class DuplicatePointError(InputError):
    pass


class DegenerateConfigurationError(InputError):
    """All points lie in one hyperplane, so the set is not non-degenerate."""


class ResourceCapError(RuntimeError):
    """A configured degree or attempt ceiling was hit (exit code 4)."""


class DegreeCapExceeded(ResourceCapError):
    pass


class ResamplingExhausted(ResourceCapError):
    pass


class ConsistencyError(AssertionError):
    """An internal cross-check disagreed; indicates a bug, not bad input."""
