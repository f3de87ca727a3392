"""Exception types shared by the loaders, the engine and the CLI."""


class ChadError(Exception):
    """Base class for every error raised by this package."""


class FormatError(ChadError, ValueError):
    """An input file does not follow its expected layout."""

    def __init__(self, message, path=None, lineno=None):
        self.message = message
        self.path = path
        self.lineno = lineno
        super().__init__(str(self))

    def __str__(self):
        where = ""
        if self.path is not None:
            where = f"{self.path}:"
        if self.lineno is not None:
            where += f"{self.lineno}:"
        return f"{where} {self.message}" if where else self.message


class AlignmentError(ChadError, ValueError):
    """Assignments and gold tokens do not line up one to one."""
