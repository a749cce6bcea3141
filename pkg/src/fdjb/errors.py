"""Error types with stable machine-readable codes.

Every error carries a short ``code`` string that surfaces unchanged in CLI
output and exit diagnostics, so batch tooling can match on it.
"""

from __future__ import annotations


class FdjbError(Exception):
    """Base class; ``code`` identifies the failure class."""

    code = "fdjb-error"

    def __init__(self, message: str = ""):
        self.message = message
        super().__init__(f"{self.code}: {message}" if message else self.code)


class ResonantGridPointError(FdjbError):
    code = "resonant-grid-point"

    def __init__(self, omega: float):
        self.omega = omega
        super().__init__(f"grid point omega={omega!r} rad/s lies on an imaginary-axis eigenvalue")


class EigenNoConvergeError(FdjbError):
    code = "eigen-noconverge"


class IllPosedInterconnectionError(FdjbError):
    code = "ill-posed-interconnection"


class UnknownSignalError(FdjbError):
    code = "unknown-signal"


class DuplicateSignalError(FdjbError):
    code = "duplicate-signal"


class DegenerateOperatingPointError(FdjbError):
    code = "degenerate-operating-point"


class EmptyBandError(FdjbError):
    code = "empty-band"


class UnknownElementError(FdjbError):
    code = "unknown-element"


class OpenCircuitTerminalError(FdjbError):
    code = "open-circuit-terminal"


class GridMismatchError(FdjbError):
    code = "grid-mismatch"


class EventIllPosedError(FdjbError):
    code = "event-induced-ill-posedness"

    def __init__(self, event_index: int, message: str = ""):
        self.event_index = event_index
        super().__init__(f"event {event_index}: {message}")


class StateCarryoverGapError(FdjbError):
    code = "state-carryover-gap"


class BadWindowError(FdjbError):
    code = "bad-window"


class ConfigError(FdjbError):
    code = "config-error"


class ConfigUnknownKeyError(ConfigError):
    code = "config-unknown-key"

    def __init__(self, path: str):
        self.path = path
        super().__init__(path)


class ConfigBadImpedanceError(ConfigError):
    code = "config-bad-impedance"


class ConfigNoCommandError(ConfigError):
    code = "config-no-command"
