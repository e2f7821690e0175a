"""Exception types shared across the package.

The CLI maps these onto exit codes: UsageError (and its subclass
FormatError) exit with 2, DomainError with 3.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation,
    or a stated assumption (e.g. a length cap) is violated."""


class UsageError(ValueError):
    """Structurally invalid request: unknown name, wrong arity,
    mismatched windows, bad index."""


class FormatError(UsageError):
    """A structure or generator file failed to parse."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += str(path)
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.path = path
        self.line = line
