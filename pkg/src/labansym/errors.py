"""Exception types raised across the package.

Everything derives from :class:`LabanError` so callers (and the CLI) can catch
domain failures in one place without swallowing genuine bugs.
"""


class LabanError(ValueError):
    pass


class MalformedCyclesError(LabanError):
    pass


class OutOfRangeError(LabanError, IndexError):
    pass


class DomainMismatchError(LabanError):
    pass


class EmptyGeneratorsError(LabanError):
    pass


class UnknownSolidError(LabanError):
    pass


class UnsupportedSolidError(LabanError):
    pass


class UnknownDirectionError(LabanError, KeyError):
    def __str__(self):  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class SolidMismatchError(LabanError):
    pass


class EmptySequenceError(LabanError):
    pass


class UnknownLimbError(LabanError):
    pass


class InvalidScaleError(LabanError):
    pass


class InvalidSubgroupError(LabanError):
    pass


class ParseError(LabanError):
    """A diagnostic from one of the text parsers.

    ``token`` is the 1-based token index when the failure can be pinned to a
    token; ``line``/``col`` are filled in by the script parser.
    """

    def __init__(self, message, token=None, line=None, col=None):
        super().__init__(message)
        self.message = message
        self.token = token
        self.line = line
        self.col = col

    def __str__(self):
        if self.line is not None:
            return f"{self.line}:{self.col or 1}: {self.message}"
        if self.token is not None:
            return f"token {self.token}: {self.message}"
        return self.message


class MixedSolidError(ParseError):
    pass
