# api/errors.py
from __future__ import annotations
from typing import Optional


class YBError(ValueError):
    """Base class for every error raised by ybmaps."""


class SingularInput(YBError):
    """A denominator or a pairing vanishes at the given input."""

    def __init__(self, message: str, factor: Optional[str] = None):
        super().__init__(message if factor is None else f"{factor}: {message}")
        self.reason = message
        self.factor = factor

    def at(self, factor: str) -> "SingularInput":
        # keep the innermost factor if one is already recorded
        if self.factor is not None:
            return self
        return SingularInput(self.reason, factor=factor)


class KindMismatch(YBError):
    pass


class IndexOutOfRange(YBError):
    pass


class DimensionMismatch(YBError):
    pass


class NotFactorizable(YBError):
    pass


class ConfigError(YBError):
    pass
