"""Exception hierarchy shared by the library and the command line front end."""


class LpaError(Exception):
    """Base class for every error raised on purpose by this package."""


class ParseError(LpaError, ValueError):
    """Malformed graph, group, element or ramification text."""


class SemanticError(LpaError, ValueError):
    """Well-formed input that violates a mathematical precondition."""


class NotHereditaryError(SemanticError):
    pass


class NotSaturatedError(SemanticError):
    pass


class GroupAxiomError(SemanticError):
    pass


class NotGeneratingError(SemanticError):
    pass


class SinkError(SemanticError):
    """Operation defined only for graphs without sinks."""


class BoundExceededError(SemanticError):
    pass


class CertificateError(LpaError, RuntimeError):
    """A certificate produced by the library failed its own verification."""
