"""Resource caps for exponential enumerations."""
from __future__ import annotations

import os

DEFAULT_STATE_CAP = 2 ** 20
DEFAULT_NODE_CAP = 10 ** 8


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured cap."""


def state_cap() -> int:
    """State-sum cap; the CHORDAL_STATE_CAP environment variable overrides the default."""
    raw = os.environ.get("CHORDAL_STATE_CAP")
    return int(raw) if raw else DEFAULT_STATE_CAP
