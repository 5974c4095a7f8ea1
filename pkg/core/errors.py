"""Exception hierarchy shared by the library, the oracles and the CLI."""
from typing import Any, Dict, List, Optional


class OmegaLyndonError(Exception):
    """Base class for every error raised by omega_lyndon."""


class InvalidInput(OmegaLyndonError, ValueError):
    """An argument violates an operation's precondition."""


class ParseError(InvalidInput):
    """A word or scheme literal does not parse."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        caret = " " * max(0, position) + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {caret}")


class NotLyndon(OmegaLyndonError):
    """The input word is required to be omega-Lyndon and is not."""


class ConstructionFailed(OmegaLyndonError):
    """A constructed value failed its own verification step."""


class CapExceeded(OmegaLyndonError):
    """A bounded search ran out of budget before finding an answer."""

    def __init__(self, message: str, state: Optional[Dict[str, Any]] = None):
        self.state = dict(state or {})
        super().__init__(message)


class CapTooSmall(OmegaLyndonError):
    """The requested cap is below a bound the computation must reach."""

    def __init__(self, message: str, bound: int):
        self.bound = bound
        super().__init__(message)


class TooLarge(OmegaLyndonError):
    """Input exceeds the guard of an exponential oracle."""


class UniquenessViolation(OmegaLyndonError):
    """More than one factorization candidate validated."""

    def __init__(self, message: str, candidates: List[Any]):
        self.candidates = list(candidates)
        super().__init__(message)
