"""Exception hierarchy shared by every engine and the claim runner."""

from __future__ import annotations


class HistmechError(Exception):
    """Base class for all errors raised by this package."""


class NumericError(HistmechError):
    """A numerical procedure failed; maps to CLI exit status 3."""


class DomainError(HistmechError, ValueError):
    """An argument is outside the domain where the operation is defined."""


class ConvergenceError(NumericError):
    def __init__(self, message: str, estimate: float, residual: float):
        super().__init__(f"{message} (estimate={estimate!r}, residual={residual!r})")
        self.estimate = estimate
        self.residual = residual


class SingularityError(NumericError):
    def __init__(self, message: str, t: float, state):
        super().__init__(f"{message} at t={t!r}")
        self.t = t
        self.state = state


class BracketError(NumericError, ValueError):
    pass


class MatchingError(HistmechError):
    pass


class NonStartingError(HistmechError):
    pass


class GeometryError(HistmechError):
    pass


class UnreachableAltitudeError(HistmechError):
    pass


class VisibilityError(HistmechError):
    pass


class WindowError(HistmechError):
    pass


class GroundedError(HistmechError):
    def __init__(self, message: str, required_volume: float):
        super().__init__(f"{message}; at least {required_volume!r} m^3 of water is required")
        self.required_volume = required_volume


class NonphysicalError(HistmechError, ValueError):
    pass


class NoSagError(DomainError):
    pass


class ConfigError(HistmechError):
    pass


class NotFoundError(HistmechError, KeyError):
    def __init__(self, key: str, suggestions: list[str]):
        hint = f"; did you mean: {', '.join(suggestions)}" if suggestions else ""
        super().__init__(f"unknown claim id {key!r}{hint}")
        self.key = key
        self.suggestions = suggestions

    def __str__(self) -> str:
        return self.args[0]


class NoDataError(HistmechError):
    pass
