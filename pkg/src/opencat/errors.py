"""Exception hierarchy shared by every module."""


class OpenCatError(Exception):
    pass


class NotComposableError(OpenCatError):
    """Two arrows whose endpoints do not meet."""


class BoundaryMismatchError(OpenCatError):
    """Functors, transformations or open functors with incompatible (co)domains."""


class UnknownObjectError(OpenCatError, KeyError):
    pass


class UnknownArrowError(OpenCatError, KeyError):
    pass


class UnknownElementError(OpenCatError, KeyError):
    pass


class SizeLimitError(OpenCatError):
    """A composite would exceed the configured fiber bound."""


class ParseError(OpenCatError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
