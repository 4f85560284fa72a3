class LoclabError(Exception):
    """Base class for every error raised by loclab."""


class NonSimplePolygonError(LoclabError, ValueError):
    pass


class InvalidGuardError(LoclabError, ValueError):
    pass


class DuplicateKeyError(LoclabError, ValueError):
    pass


class UnknownKeyError(LoclabError, ValueError):
    pass


class SceneFormatError(LoclabError, ValueError):
    pass


class InvalidParamsError(LoclabError, ValueError):
    pass


class NotLocalizableError(LoclabError):
    """Raised when no monotone formula can localize the scene.

    ``witness`` holds the offending (inside cell, outside cell) pair.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerificationError(LoclabError):
    """A constructed solution failed exact verification (an internal bug)."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class ViewportError(LoclabError, ValueError):
    pass
